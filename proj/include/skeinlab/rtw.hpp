#pragma once

#include <complex>
#include <vector>

#include "skeinlab/shadow.hpp"

namespace skeinlab {
namespace rtw {

struct RootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Complex = std::complex<double>;

// Evaluation data at A = e^{i pi / 2r}: the constants eta and kappa and the
// quantum integer table. kappa has modulus one; the construction cross
// checks it against eta * sum circle^2 (-1)^a A^{a(a+2)}.
struct RootContext {
  int r = 0;
  Complex A;
  Complex eta;
  Complex kappa;
  std::vector<double> qint;  // [n] for n < 2r
  double construction_tol = 1e-12;
  double identity_tol = 1e-8;
};

RootContext make_root_context(int r);

double qint_at(const RootContext& ctx, int n);
double circle_at(const RootContext& ctx, int n);
double theta_at(const RootContext& ctx, int a, int b, int c);
double tet_at(const RootContext& ctx, int a, int b, int c, int d, int e, int f);

// A^(half/2) with explicit exponent arithmetic (no branch cuts).
Complex a_pow_half(const RootContext& ctx, std::int64_t half_exp);

// kappa^{-sigma(X)} eta^{chi(X)} sum over q-admissible colorings of |X|_xi.
Complex rtw_from_shadow(const RootContext& ctx, const shadow::Shadow& x);

// eta^2 kappa^{-sgn n} sum circle^2 (-1)^{an} A^{an(a+2)}; n = 0 gives 1.
Complex lens_rtw_closed(const RootContext& ctx, std::int64_t n);

// eta^{2 chi(X)} sum over q-admissible colorings (zero gleams, no boundary);
// checks the result is real.
double tv_from_polyhedron(const RootContext& ctx, const shadow::Shadow& x);

// rtw(x # y) = eta^{-1} rtw(x) rtw(y) within the identity tolerance.
bool conn_sum_identity_check(const RootContext& ctx, const shadow::Shadow& x,
                             const shadow::Shadow& y);

}  // namespace rtw
}  // namespace skeinlab
