#include <doctest.h>

#include "skeinlab/qnum.hpp"
#include "skeinlab/tl.hpp"

using namespace skeinlab;
using namespace skeinlab::tl;

namespace {
RationalFunc delta() { return RationalFunc::parse("-A^2 - A^-2"); }

Int binomial(int n, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}
}  // namespace

TEST_CASE("TL generator relations") {
  for (int n = 2; n <= 5; ++n) {
    TLElement one = TLElement::identity(n);
    for (int i = 1; i < n; ++i) {
      TLElement ei = TLElement::gen_e(n, i);
      CHECK(tl_mul(ei, ei) == ei.scaled(delta()));
      CHECK(tl_mul(one, ei) == ei);
      CHECK(tl_mul(ei, one) == ei);
      if (i + 1 < n) {
        TLElement ej = TLElement::gen_e(n, i + 1);
        CHECK(tl_mul(tl_mul(ei, ej), ei) == ei);
        CHECK(tl_mul(tl_mul(ej, ei), ej) == ej);
      }
      for (int j = i + 2; j < n; ++j) {
        TLElement ej = TLElement::gen_e(n, j);
        CHECK(tl_mul(ei, ej) == tl_mul(ej, ei));
      }
    }
  }
}

TEST_CASE("Jones-Wenzl projectors") {
  CHECK(jones_wenzl(1) == TLElement::identity(1));
  // f2 = 1 - (1/circle(1)) e1, pinned by idempotence
  TLElement f2 = jones_wenzl(2);
  TLElement expect = TLElement::identity(2) + TLElement::gen_e(2, 1).scaled(
                                                  -RationalFunc::one() / qnum::circle(1));
  CHECK(f2 == expect);

  for (int n = 1; n <= 6; ++n) {
    const TLElement& f = jones_wenzl(n);
    CHECK(tl_mul(f, f) == f);  // idempotent
    for (int i = 1; i < n; ++i) {
      TLElement ei = TLElement::gen_e(n, i);
      CHECK(tl_mul(f, ei).is_zero());
      CHECK(tl_mul(ei, f).is_zero());
    }
    CHECK(trace_closure(f) == qnum::circle(n));
  }
}

TEST_CASE("f(n) absorbs smaller projectors") {
  // f^(n) . f^(m) = f^(m) for n <= m, with f^(n) included on the left strands.
  for (int m = 2; m <= 6; ++m) {
    for (int n = 1; n <= m; ++n) {
      // include f^(n) into TL_m by straight strands on the right
      TLElement inc = jones_wenzl(n);
      for (int k = n; k < m; ++k) {
        TLElement next(k + 1);
        for (const auto& [mt, c] : inc.terms()) {
          std::vector<int> mm(static_cast<size_t>(2 * (k + 1)));
          auto np = [&](int p) { return p < k ? p : p + 1; };
          for (int p = 0; p < 2 * k; ++p) mm[static_cast<size_t>(np(p))] = np(mt.mate(p));
          mm[static_cast<size_t>(k)] = 2 * k + 1;
          mm[static_cast<size_t>(2 * k + 1)] = k;
          next.add(PlanarMatching(std::move(mm)), c);
        }
        inc = next;
      }
      CHECK(tl_mul(inc, jones_wenzl(m)) == jones_wenzl(m));
    }
  }
}

TEST_CASE("trace closures") {
  CHECK(trace_closure(TLElement::identity(1)) == delta());
  CHECK(trace_closure(TLElement::gen_e(2, 1)) == delta());
}

TEST_CASE("parallel cores in S1 x S2") {
  CHECK(annulus_parallel_cores(0) == RationalFunc::one());
  for (int k = 1; k <= 17; k += 2) CHECK(annulus_parallel_cores(k).is_zero());
  for (int n = 0; n <= 8; ++n) {
    Int catalan = binomial(2 * n, n) / (n + 1);
    CHECK(annulus_parallel_cores(2 * n) == RationalFunc::from_int(catalan));
  }
  // non-negative integers for even counts
  for (int n = 0; n <= 8; ++n) {
    RationalFunc v = annulus_parallel_cores(2 * n);
    CHECK(v.is_laurent());
    CHECK(v.num().max_exp() == 0);
    CHECK(v.num().lowest_coeff() > 0);
  }
}

TEST_CASE("Chebyshev expansion of colored cores") {
  CHECK(colored_core_expand(0) == std::vector<Int>{1});
  CHECK(colored_core_expand(1) == std::vector<Int>{0, 1});
  CHECK(colored_core_expand(2) == std::vector<Int>{-1, 0, 1});  // y2 = x^2 - 1
  // recursion identity y_{n+1} = x y_n - y_{n-1}
  for (int n = 2; n <= 8; ++n) {
    auto yn = colored_core_expand(n);
    auto yn1 = colored_core_expand(n - 1);
    auto yn2 = colored_core_expand(n - 2);
    std::vector<Int> rhs(yn.size(), Int(0));
    for (size_t i = 0; i < yn1.size(); ++i) rhs[i + 1] += yn1[i];
    for (size_t i = 0; i < yn2.size(); ++i) rhs[i] -= yn2[i];
    CHECK(yn == rhs);
  }
  // y_n(2) = n + 1
  for (int n = 0; n <= 8; ++n) {
    Int v = 0, p = 1;
    for (Int c : colored_core_expand(n)) {
      v += c * p;
      p *= 2;
    }
    CHECK(v == n + 1);
  }
}
