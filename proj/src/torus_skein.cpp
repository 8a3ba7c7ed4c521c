#include "skeinlab/torus_skein.hpp"

#include <numeric>
#include <sstream>

namespace skeinlab {
namespace torus_skein {

void T2Element::add(PQ pq, const RationalFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(pq);
  if (it == terms_.end()) {
    terms_.emplace(pq, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

T2Element T2Element::operator+(const T2Element& o) const {
  T2Element r = *this;
  for (const auto& [pq, c] : o.terms_) r.add(pq, c);
  return r;
}

T2Element T2Element::scaled(const RationalFunc& c) const {
  T2Element r;
  for (const auto& [pq, v] : terms_) r.add(pq, v * c);
  return r;
}

std::string T2Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [pq, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*(" << pq.p << "," << pq.q << ")_T";
  }
  return os.str();
}

T2Element fg_product(PQ a, PQ b) {
  std::int64_t det = a.p * b.q - a.q * b.p;
  T2Element r;
  r.add(PQ(a.p + b.p, a.q + b.q), RationalFunc::term(det, 1));
  r.add(PQ(a.p - b.p, a.q - b.q), RationalFunc::term(-det, 1));
  return r;
}

T2Element fg_product(const T2Element& a, const T2Element& b) {
  T2Element r;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      T2Element prod = fg_product(pa, pb);
      for (const auto& [pq, c] : prod.terms()) r.add(pq, c * ca * cb);
    }
  return r;
}

T2Element tn_expand(PQ gamma, int n) {
  if (n < 0) throw std::invalid_argument("tn_expand requires n >= 0");
  if (std::gcd(gamma.p, gamma.q) != 1)
    throw std::invalid_argument("tn_expand requires a primitive curve");
  // T_0 = 2 empty = (0,0)_T, T_1 = gamma, T_{n+1} = gamma T_n - T_{n-1}
  T2Element prev = T2Element::basis(PQ(0, 0));
  if (n == 0) return prev;
  T2Element cur = T2Element::basis(gamma);
  for (int k = 1; k < n; ++k) {
    T2Element next = fg_product(T2Element::basis(gamma), cur) + prev.scaled(-RationalFunc::one());
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PQ abelianize(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) return PQ(0, 0);  // the doubled empty set
  bool podd = ((p % 2) + 2) % 2 == 1;
  bool qodd = ((q % 2) + 2) % 2 == 1;
  if (podd && !qodd) return PQ(1, 0);
  if (!podd && qodd) return PQ(0, 1);
  if (podd && qodd) return PQ(1, 1);
  return PQ(2, 0);
}

std::string to_string(T3BasisElement e) {
  switch (e) {
    case T3BasisElement::Empty: return "empty";
    case T3BasisElement::E100: return "[1,0,0]";
    case T3BasisElement::E010: return "[0,1,0]";
    case T3BasisElement::E001: return "[0,0,1]";
    case T3BasisElement::E110: return "[1,1,0]";
    case T3BasisElement::E101: return "[1,0,1]";
    case T3BasisElement::E011: return "[0,1,1]";
    case T3BasisElement::E111: return "[1,1,1]";
    case T3BasisElement::Alpha: return "alpha";
  }
  return "?";
}

T3BasisElement reduce_t3_curve(std::int64_t p, std::int64_t q, std::int64_t r) {
  std::int64_t g = std::gcd(std::gcd(std::llabs(p), std::llabs(q)), std::llabs(r));
  if (g != 1) throw std::invalid_argument("reduce_t3_curve requires coprime coordinates");
  int x = static_cast<int>(((p % 2) + 2) % 2);
  int y = static_cast<int>(((q % 2) + 2) % 2);
  int z = static_cast<int>(((r % 2) + 2) % 2);
  if (x == 1 && y == 0 && z == 0) return T3BasisElement::E100;
  if (x == 0 && y == 1 && z == 0) return T3BasisElement::E010;
  if (x == 0 && y == 0 && z == 1) return T3BasisElement::E001;
  if (x == 1 && y == 1 && z == 0) return T3BasisElement::E110;
  if (x == 1 && y == 0 && z == 1) return T3BasisElement::E101;
  if (x == 0 && y == 1 && z == 1) return T3BasisElement::E011;
  return T3BasisElement::E111;  // coprime coordinates cannot be all even
}

}  // namespace torus_skein
}  // namespace skeinlab
