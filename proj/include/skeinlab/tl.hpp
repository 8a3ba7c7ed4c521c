#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {
namespace tl {

struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A perfect non-crossing pairing of 2n boundary points of the square:
// points 0..n-1 on the top (left to right), n..2n-1 on the bottom
// (left to right). Stored as an involution.
class PlanarMatching {
 public:
  PlanarMatching() = default;
  // Throws if the pairing crosses or is not a perfect matching.
  explicit PlanarMatching(std::vector<int> mate);

  static PlanarMatching identity(int n);

  int arity() const { return static_cast<int>(mate_.size()) / 2; }
  int mate(int p) const { return mate_[static_cast<size_t>(p)]; }
  const std::vector<int>& pairs() const { return mate_; }

  bool operator<(const PlanarMatching& o) const { return mate_ < o.mate_; }
  bool operator==(const PlanarMatching& o) const { return mate_ == o.mate_; }

 private:
  std::vector<int> mate_;
};

// Element of TL_n: a finite Q(A)-combination of planar matchings.
class TLElement {
 public:
  explicit TLElement(int arity) : arity_(arity) {}
  static TLElement zero(int arity) { return TLElement(arity); }
  static TLElement identity(int n);
  // Standard generator e_i (1-based, 1 <= i <= n-1).
  static TLElement gen_e(int n, int i);

  int arity() const { return arity_; }
  const std::map<PlanarMatching, RationalFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PlanarMatching& m, const RationalFunc& c);

  TLElement operator+(const TLElement& o) const;
  TLElement operator-(const TLElement& o) const;
  TLElement scaled(const RationalFunc& c) const;
  bool operator==(const TLElement& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

 private:
  int arity_;
  std::map<PlanarMatching, RationalFunc> terms_;
};

// Stack x on top of y; each closed loop becomes a factor -A^2 - A^-2.
TLElement tl_mul(const TLElement& x, const TLElement& y);

// Arity bound for projector construction (the basis grows like the Catalan
// numbers); default 8.
int& projector_cap();

// Jones-Wenzl projector f^(n) via the Wenzl recursion.
const TLElement& jones_wenzl(int n);

// Close top point i to bottom point i for every i; each resulting loop is a
// factor -A^2 - A^-2.
RationalFunc trace_closure(const TLElement& x);

// Bracket in S^1 x S^2 of k parallel 0-framed copies of the core: the y_0
// coefficient of x^k in the Chebyshev basis. 0 for odd k, a Catalan number
// for k = 2n.
RationalFunc annulus_parallel_cores(int k);

// Chebyshev polynomial y_n (second kind, y_0 = 1, y_1 = x) as coefficients
// of 1, x, x^2, ...: the core of the solid torus colored n.
std::vector<Int> colored_core_expand(int n);

}  // namespace tl
}  // namespace skeinlab
