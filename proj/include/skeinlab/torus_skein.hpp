#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "skeinlab/laurent.hpp"

namespace skeinlab {
namespace torus_skein {

// Basis curve (p,q)_T of the skein algebra of the 2-torus, canonicalized by
// (p,q) ~ (-p,-q) with p > 0 or (p = 0, q >= 0). (0,0)_T stands for twice
// the empty set.
struct PQ {
  std::int64_t p = 0, q = 0;
  PQ() = default;
  PQ(std::int64_t pp, std::int64_t qq) : p(pp), q(qq) { canonicalize(); }
  void canonicalize() {
    if (p < 0 || (p == 0 && q < 0)) {
      p = -p;
      q = -q;
    }
  }
  bool operator<(const PQ& o) const { return std::tie(p, q) < std::tie(o.p, o.q); }
  bool operator==(const PQ& o) const { return p == o.p && q == o.q; }
};

class T2Element {
 public:
  static T2Element zero() { return {}; }
  static T2Element basis(PQ pq) {
    T2Element x;
    x.add(pq, RationalFunc::one());
    return x;
  }
  void add(PQ pq, const RationalFunc& c);
  const std::map<PQ, RationalFunc>& terms() const { return terms_; }
  bool operator==(const T2Element& o) const { return terms_ == o.terms_; }
  T2Element operator+(const T2Element& o) const;
  T2Element scaled(const RationalFunc& c) const;
  std::string to_string() const;

 private:
  std::map<PQ, RationalFunc> terms_;
};

// (p,q)_T (r,s)_T = A^{ps-qr} (p+r, q+s)_T + A^{qr-ps} (p-r, q-s)_T.
T2Element fg_product(PQ a, PQ b);
T2Element fg_product(const T2Element& a, const T2Element& b);

// Power-basis expansion of T_n applied to a primitive curve.
T2Element tn_expand(PQ gamma, int n);

// Class of (p,q)_T in the abelianized skein algebra, by parity.
PQ abelianize(std::int64_t p, std::int64_t q);

// The nine generators of the skein vector space of the 3-torus.
enum class T3BasisElement {
  Empty,       // the empty set
  E100, E010, E001, E110, E101, E011, E111,
  Alpha,
};
std::string to_string(T3BasisElement e);

// A (p,q,r)-curve equals the curve of the coordinate parities.
T3BasisElement reduce_t3_curve(std::int64_t p, std::int64_t q, std::int64_t r);

}  // namespace torus_skein
}  // namespace skeinlab
