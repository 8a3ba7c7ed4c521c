#include <doctest.h>

#include <array>
#include <complex>
#include <vector>

#include "skeinlab/qnum.hpp"

using namespace skeinlab;
using namespace skeinlab::qnum;

TEST_CASE("quantum integers") {
  CHECK(qint(1) == RationalFunc::one());
  CHECK(qint(2) == RationalFunc::parse("A^2 + A^-2"));
  // [n] -> n as q -> 1
  for (int n = 1; n <= 9; ++n) {
    std::complex<double> q(1.0 + 1e-6, 0.0);  // A = sqrt(q)
    std::complex<double> a = std::sqrt(q);
    CHECK(std::abs(qint(n).eval(a) - std::complex<double>(n, 0.0)) < 1e-4);
  }
}

TEST_CASE("quantum factorials and multinomials") {
  CHECK(qfact(0) == RationalFunc::one());
  CHECK(qfact(1) == RationalFunc::one());
  CHECK(qfact(3) == qint(2) * qint(3));
  CHECK(qmultinomial({2}, {1, 1}) == qint(2));
  CHECK_THROWS(qmultinomial({2}, {1}));
}

TEST_CASE("circle evaluations") {
  CHECK(circle(0) == RationalFunc::one());
  CHECK(circle(1) == RationalFunc::parse("-A^2 - A^-2"));
  CHECK(circle(2) == RationalFunc::parse("A^4 + 1 + A^-4"));
}

TEST_CASE("theta evaluations") {
  CHECK(theta(0, 0, 0) == RationalFunc::one());
  CHECK(theta(1, 1, 0) == RationalFunc::parse("-A^2 - A^-2"));
  for (int a = 0; a <= 6; ++a) CHECK(theta(a, a, 0) == circle(a));
  CHECK_THROWS_AS(theta(1, 1, 1), AdmissibilityError);
  // full symmetry
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        if (!is_admissible(a, b, c)) continue;
        RationalFunc v = theta(a, b, c);
        CHECK(theta(a, c, b) == v);
        CHECK(theta(b, a, c) == v);
        CHECK(theta(b, c, a) == v);
        CHECK(theta(c, a, b) == v);
        CHECK(theta(c, b, a) == v);
      }
}

TEST_CASE("tet evaluations") {
  CHECK(tet(0, 0, 0, 0, 0, 0) == RationalFunc::one());
  // an edge colored 0 contracts the tetrahedron to a theta
  for (int a = 0; a <= 3; ++a)
    for (int d = 0; d <= 3; ++d)
      for (int f = 0; f <= 3; ++f) {
        if (!is_admissible(a, d, f)) continue;
        CHECK(tet(a, a, 0, d, d, f) == theta(a, d, f));
      }
  CHECK(tet(1, 1, 0, 1, 1, 0) == theta(1, 1, 0));
  // the all-2 tetrahedron
  RationalFunc five_minus_1 = qint(5) - RationalFunc::one();
  CHECK(tet(2, 2, 2, 2, 2, 2) == qfact(4) / qint(2).pow(6) * five_minus_1);
}

TEST_CASE("tet tetrahedral symmetries") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d)
          for (int e = 0; e <= 3; ++e)
            for (int f = 0; f <= 3; ++f) {
              if (!(is_admissible(a, b, c) && is_admissible(a, e, f) && is_admissible(b, d, f) &&
                    is_admissible(c, d, e)))
                continue;
              RationalFunc v = tet(a, b, c, d, e, f);
              // transpositions of the vertex triples acting on edges
              CHECK(tet(a, f, e, d, c, b) == v);
              CHECK(tet(a, c, b, d, f, e) == v);
              CHECK(tet(f, b, d, c, e, a) == v);
            }
}

TEST_CASE("6j symbols") {
  CHECK(sixj(0, 0, 0, 0, 0, 0) == RationalFunc::one());
  for (int a = 1; a <= 3; ++a)
    CHECK(sixj(a, a, a, a, 0, 0) == RationalFunc::one() / circle(a));
  // recoupling orthogonality: going to the other basis and back
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          std::vector<int> hs, vs;  // H-basis labels j, V-basis labels x
          for (int j = 0; j <= 4; ++j)
            if (is_admissible(a, b, j) && is_admissible(c, d, j)) hs.push_back(j);
          for (int x = 0; x <= 4; ++x)
            if (is_admissible(a, d, x) && is_admissible(b, c, x)) vs.push_back(x);
          if (hs.empty() || vs.empty()) continue;
          for (int j : hs)
            for (int i : hs) {
              RationalFunc sum = RationalFunc::zero();
              for (int x : vs) sum += sixj(a, b, c, d, x, j) * sixj(d, a, b, c, i, x);
              CHECK(sum == (i == j ? RationalFunc::one() : RationalFunc::zero()));
            }
        }
}

TEST_CASE("framing phases") {
  CHECK(full_twist_phase(1, 2).to_rational() == RationalFunc::parse("-A^3"));  // n=1, k=1
  CHECK(full_twist_phase(0, 5).to_rational() == RationalFunc::one());
  CHECK(full_twist_phase(2, 2).to_rational() == RationalFunc::parse("A^8"));
  CHECK(full_twist_phase(2, 1).to_rational() == RationalFunc::parse("-A^4"));  // half twist: i^2 A^4
  CHECK_THROWS_AS((void)full_twist_phase(1, 1).to_rational(), std::domain_error);
}

TEST_CASE("red triples and angle bookkeeping") {
  auto ang = angles(1, 1, 2);
  CHECK(ang == std::array<int, 3>{0, 1, 1});
  CHECK(is_red(1, 1, 2));
  CHECK_FALSE(is_red(0, 0, 0));
  CHECK(is_red(2, 2, 2));  // angles (1,1,1)
}

TEST_CASE("orders at q=i: closed forms") {
  CHECK(ord_i_qint(4) == 1);
  CHECK(ord_i_qfact(5) == 2);
  for (int n = 1; n <= 12; ++n) CHECK(ord_i_qint(n) == qint(n).ord_at_i());
  for (int n = 0; n <= 12; ++n) CHECK(ord_i_qfact(n) == qfact(n).ord_at_i());
  // multinomials with arguments <= 12
  std::vector<std::pair<std::vector<int>, std::vector<int>>> cases = {
      {{2}, {1, 1}},        {{5, 3}, {4, 4}},          {{7, 1}, {2, 6}},
      {{6, 6}, {12}},       {{9, 2, 1}, {4, 4, 4}},    {{11, 1}, {3, 9}},
      {{10, 5}, {12, 3}},   {{8, 7, 3}, {6, 6, 6}},
  };
  for (const auto& [ms, ns] : cases)
    CHECK(ord_i_multinomial(ms, ns) == qmultinomial(ms, ns).ord_at_i());
}

TEST_CASE("order bounds for circle, theta, tet") {
  // theta: equality ord_i = |L| - r/2 with |L| = odd-color indicator and
  // r = 2 when the (identically colored) vertices are red.
  for (int a = 0; a <= 8; ++a)
    for (int b = a; b <= 8; ++b)
      for (int c = b; c <= 8; ++c) {
        if (!is_admissible(a, b, c)) continue;
        int L = (a % 2 || b % 2 || c % 2) ? 1 : 0;
        int r = is_red(a, b, c) ? 2 : 0;
        CHECK(theta(a, b, c).ord_at_i() == L - r / 2);
      }
  for (int a = 0; a <= 8; ++a) CHECK(circle(a).ord_at_i() == (a % 2 ? 1 : 0));

  // tet: inequality, colors <= 4
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int d = 0; d <= 4; ++d)
          for (int e = 0; e <= 4; ++e)
            for (int f = 0; f <= 4; ++f) {
              if (!(is_admissible(a, b, c) && is_admissible(a, e, f) && is_admissible(b, d, f) &&
                    is_admissible(c, d, e)))
                continue;
              int L = (a % 2 || b % 2 || c % 2 || d % 2 || e % 2 || f % 2) ? 1 : 0;
              int r2 = static_cast<int>(is_red(a, b, c)) + static_cast<int>(is_red(a, e, f)) +
                       static_cast<int>(is_red(b, d, f)) + static_cast<int>(is_red(c, d, e));
              RationalFunc v = tet(a, b, c, d, e, f);
              std::int64_t lhs = v.ord_at_i();
              if (v.is_zero()) continue;
              CHECK(2 * lhs >= 2 * L - r2);
            }
  // the all-even/all-odd case: the [5]-1 cancellation makes the bound sharp
  CHECK(tet(2, 2, 2, 2, 2, 2).ord_at_i() == -2);
}
