#include "skeinlab/rtw.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "skeinlab/qnum.hpp"

namespace skeinlab {
namespace rtw {

namespace {
constexpr double kPi = std::numbers::pi;
}

RootContext make_root_context(int r) {
  if (r < 3) throw RootError("the root level r must be at least 3");
  RootContext ctx;
  ctx.r = r;
  ctx.A = std::polar(1.0, kPi / (2.0 * r));
  double sin1 = std::sin(kPi / r);
  ctx.eta = std::sqrt(2.0 / r) * sin1;
  // modulus-one framing anomaly: -i e^{-i pi (2r^2 - r + 6) / 4r}
  ctx.kappa = Complex(0.0, -1.0) * std::polar(1.0, -kPi * (2.0 * r * r - r + 6.0) / (4.0 * r));
  ctx.qint.resize(static_cast<size_t>(2 * r));
  for (int n = 0; n < 2 * r; ++n)
    ctx.qint[static_cast<size_t>(n)] = std::sin(n * kPi / r) / sin1;

  // Construction invariants.
  Complex a4r = std::pow(ctx.A, 4 * r);
  if (std::abs(a4r - Complex(1.0, 0.0)) > ctx.construction_tol)
    throw RootError("A is not a 4r-th root of unity");
  if (std::abs(circle_at(ctx, r - 1)) > 1e-9)
    throw RootError("circle(r-1) does not vanish at the root");
  double eta_sq_inv = 0.0;
  for (int n = 0; n <= r - 2; ++n) eta_sq_inv += circle_at(ctx, n) * circle_at(ctx, n);
  if (std::abs(ctx.eta.real() - 1.0 / std::sqrt(eta_sq_inv)) > 1e-9)
    throw RootError("eta does not match (sum circle^2)^(-1/2)");
  // kappa = eta * sum circle^2 (-1)^a A^{a(a+2)} (the +1 framed unknot
  // colored with the Kirby element).
  Complex gauss = 0.0;
  for (int a = 0; a <= r - 2; ++a) {
    double ca = circle_at(ctx, a);
    Complex ph = a_pow_half(ctx, 2ll * a * (a + 2));
    gauss += ca * ca * ((a % 2) ? -ph : ph);
  }
  if (std::abs(ctx.eta * gauss - ctx.kappa) > 1e-9)
    throw RootError("kappa closed form disagrees with the Kirby-colored unknot");
  return ctx;
}

double qint_at(const RootContext& ctx, int n) {
  if (n < 0) throw RootError("qint_at: negative argument");
  if (n < static_cast<int>(ctx.qint.size())) return ctx.qint[static_cast<size_t>(n)];
  return std::sin(n * kPi / ctx.r) / std::sin(kPi / ctx.r);
}

double circle_at(const RootContext& ctx, int n) {
  double v = qint_at(ctx, n + 1);
  return n % 2 == 0 ? v : -v;
}

namespace {

// [n]! as a double, with a loud guard on vanishing factors.
double qfact_at(const RootContext& ctx, int n, const char* where) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) {
    double q = qint_at(ctx, k);
    if (std::abs(q) < 1e-12) {
      std::fprintf(stderr, "skeinlab: vanishing quantum factorial factor [%d] in %s (r=%d)\n", k,
                   where, ctx.r);
      throw RootError("vanishing quantum integer inside a factorial");
    }
    f *= q;
  }
  return f;
}

}  // namespace

double theta_at(const RootContext& ctx, int a, int b, int c) {
  if (!qnum::is_q_admissible(a, b, c, ctx.r)) throw RootError("theta_at: triple not q-admissible");
  int s = (a + b + c) / 2;
  double v = qfact_at(ctx, s + 1, "theta") / qfact_at(ctx, 1, "theta");
  v *= qfact_at(ctx, s - a, "theta");
  v *= qfact_at(ctx, s - b, "theta");
  v *= qfact_at(ctx, s - c, "theta");
  v /= qfact_at(ctx, a, "theta");
  v /= qfact_at(ctx, b, "theta");
  v /= qfact_at(ctx, c, "theta");
  return s % 2 == 0 ? v : -v;
}

double tet_at(const RootContext& ctx, int a, int b, int c, int d, int e, int f) {
  const std::array<std::array<int, 3>, 4> triples = {{{a, b, c}, {a, e, f}, {b, d, f}, {c, d, e}}};
  for (const auto& t : triples)
    if (!qnum::is_q_admissible(t[0], t[1], t[2], ctx.r))
      throw RootError("tet_at: a vertex triple is not q-admissible");
  const std::array<int, 4> tri = {(a + b + c) / 2, (a + e + f) / 2, (b + d + f) / 2,
                                  (c + d + e) / 2};
  const std::array<int, 3> sq = {(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2};
  int zmin = *std::max_element(tri.begin(), tri.end());
  int zmax = *std::min_element(sq.begin(), sq.end());
  double front = 1.0;
  for (int i : sq)
    for (int j : tri) front *= qfact_at(ctx, i - j, "tet");
  for (int x : {a, b, c, d, e, f}) front /= qfact_at(ctx, x, "tet");
  double sum = 0.0;
  for (int z = zmin; z <= zmax; ++z) {
    double term = qfact_at(ctx, z + 1, "tet");
    for (int j : tri) term /= qfact_at(ctx, z - j, "tet");
    for (int i : sq) term /= qfact_at(ctx, i - z, "tet");
    sum += (z % 2 == 0) ? term : -term;
  }
  return front * sum;
}

Complex a_pow_half(const RootContext& ctx, std::int64_t half_exp) {
  // A^{x/2} = e^{i pi x / 4r}
  return std::polar(1.0, kPi * static_cast<double>(half_exp) / (4.0 * ctx.r));
}

namespace {

Complex ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Complex eval_coloring_at(const RootContext& ctx, const shadow::Shadow& x,
                         const shadow::Coloring& xi) {
  Complex val = 1.0;
  for (size_t r = 0; r < x.regions.size(); ++r) {
    const auto& reg = x.regions[r];
    int c = xi[r];
    double circ = circle_at(ctx, c);
    for (int k = 0; k < std::abs(reg.chi); ++k) val = reg.chi > 0 ? val * circ : val / circ;
    if (reg.gleam2 != 0 && c != 0)
      val *= ipow(static_cast<int>((reg.gleam2 * c) % 4)) *
             a_pow_half(ctx, reg.gleam2 * c * (c + 2));
  }
  for (const auto& v : x.vertices)
    val *= tet_at(ctx, xi[static_cast<size_t>(v.regions[0])], xi[static_cast<size_t>(v.regions[1])],
                  xi[static_cast<size_t>(v.regions[2])], xi[static_cast<size_t>(v.regions[3])],
                  xi[static_cast<size_t>(v.regions[4])], xi[static_cast<size_t>(v.regions[5])]);
  for (const auto& b : x.boundary_vertices)
    val *= theta_at(ctx, xi[static_cast<size_t>(b.regions[0])], xi[static_cast<size_t>(b.regions[1])],
                    xi[static_cast<size_t>(b.regions[2])]);
  for (const auto& e : x.edges)
    if (e.chi != 0)
      val /= theta_at(ctx, xi[static_cast<size_t>(e.regions[0])],
                      xi[static_cast<size_t>(e.regions[1])], xi[static_cast<size_t>(e.regions[2])]);
  for (const auto& b : x.boundary_edges)
    if (b.chi != 0) val /= circle_at(ctx, xi[static_cast<size_t>(b.region)]);
  return val;
}

Complex q_coloring_sum(const RootContext& ctx, const shadow::Shadow& x) {
  // Deterministic accumulation in enumeration order.
  Complex total = 0.0;
  shadow::for_each_q_coloring(x, ctx.r,
                              [&](const shadow::Coloring& c) { total += eval_coloring_at(ctx, x, c); });
  return total;
}

int shadow_signature(const RootContext& ctx, const shadow::Shadow& x) {
  if (x.incidence || x.edges.empty()) return shadow::signature(x);
  // Collapsibility proxy: if the Q(A) coloring enumeration terminates, the
  // shadow collapses onto a graph, H2 vanishes and the signature is 0.
  try {
    (void)shadow::enumerate_colorings(x, diagram::global_config().color_cap);
    return 0;
  } catch (const shadow::BoundExhaustion&) {
    throw shadow::ShadowError(
        "signature needs an incidence matrix (the shadow does not collapse onto a graph)");
  }
  (void)ctx;
}

}  // namespace

Complex rtw_from_shadow(const RootContext& ctx, const shadow::Shadow& x) {
  x.validate();
  for (const auto& r : x.regions)
    if (r.boundary_color && *r.boundary_color > ctx.r - 2)
      throw RootError("boundary color exceeds r-2");
  int sigma = shadow_signature(ctx, x);
  Complex kap = sigma >= 0 ? std::pow(ctx.kappa, -sigma) : std::pow(ctx.kappa, Complex(-sigma));
  kap = std::polar(1.0, -sigma * std::arg(ctx.kappa));
  int chi = x.euler();
  Complex eta_pow = std::pow(ctx.eta, chi);
  return kap * eta_pow * q_coloring_sum(ctx, x);
}

Complex lens_rtw_closed(const RootContext& ctx, std::int64_t n) {
  if (n == 0) return {1.0, 0.0};  // the 0-framed unknot presents S^1 x S^2
  Complex sum = 0.0;
  for (int a = 0; a <= ctx.r - 2; ++a) {
    double ca = circle_at(ctx, a);
    Complex ph = a_pow_half(ctx, 2ll * a * n * (a + 2));
    Complex term = ca * ca * ph;
    if ((static_cast<std::int64_t>(a) * n) % 2 != 0) term = -term;
    sum += term;
  }
  Complex kap = std::polar(1.0, (n > 0 ? -1.0 : 1.0) * std::arg(ctx.kappa));
  return ctx.eta * ctx.eta * kap * sum;
}

double tv_from_polyhedron(const RootContext& ctx, const shadow::Shadow& x) {
  x.validate();
  if (x.regions.empty()) throw shadow::ShadowError("empty polyhedron");
  if (!x.boundary_edges.empty() || !x.boundary_vertices.empty())
    throw shadow::ShadowError("the state sum needs a polyhedron without boundary");
  for (const auto& r : x.regions) {
    if (r.gleam2 != 0) throw shadow::ShadowError("the state sum needs zero gleams");
    if (r.boundary_color) throw shadow::ShadowError("the state sum needs uncolored regions");
  }
  Complex val = std::pow(ctx.eta, 2 * x.euler()) * q_coloring_sum(ctx, x);
  if (std::abs(val.imag()) > ctx.identity_tol)
    throw RootError("state sum came out non-real");
  return val.real();
}

bool conn_sum_identity_check(const RootContext& ctx, const shadow::Shadow& x,
                             const shadow::Shadow& y) {
  Complex lhs = rtw_from_shadow(ctx, shadow::connected_sum(x, y, 0, 0, 0));
  Complex rhs = rtw_from_shadow(ctx, x) * rtw_from_shadow(ctx, y) / ctx.eta;
  return std::abs(lhs - rhs) < ctx.identity_tol;
}

}  // namespace rtw
}  // namespace skeinlab
