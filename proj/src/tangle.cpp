#include "skeinlab/tangle.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <map>

namespace skeinlab {
namespace tangle {

using diagram::Dart;
using diagram::VertexKind;

namespace {

// Dart ids: internal darts 4v+p, boundary darts 4V+p for the four corners.
int nd(const TangleDiagram& t, Dart x) {
  int nv = static_cast<int>(t.vertices.size());
  return x.vertex == TangleDiagram::kBoundary ? 4 * nv + x.port : 4 * x.vertex + x.port;
}

std::vector<int> tangle_alpha(const TangleDiagram& t) {
  int nv = static_cast<int>(t.vertices.size());
  std::vector<int> alpha(static_cast<size_t>(4 * nv + 4), -1);
  for (const auto& [a, b] : t.edges) {
    int da = nd(t, a), db = nd(t, b);
    if (da == db) throw diagram::ValidationError("tangle edge joins a dart to itself");
    if (alpha[static_cast<size_t>(da)] != -1 || alpha[static_cast<size_t>(db)] != -1)
      throw diagram::ValidationError("tangle dart used twice");
    alpha[static_cast<size_t>(da)] = db;
    alpha[static_cast<size_t>(db)] = da;
  }
  return alpha;
}

}  // namespace

void TangleDiagram::validate() const {
  auto alpha = tangle_alpha(*this);
  int nv = static_cast<int>(vertices.size());
  for (int v = 0; v < nv; ++v) {
    int val = vertices[static_cast<size_t>(v)] == VertexKind::Crossing ? 4 : 2;
    for (int p = 0; p < val; ++p)
      if (alpha[static_cast<size_t>(4 * v + p)] == -1)
        throw diagram::ValidationError("tangle has an unused dart");
  }
  for (int p = 0; p < 4; ++p)
    if (alpha[static_cast<size_t>(4 * nv + p)] == -1)
      throw diagram::ValidationError("tangle boundary corner not attached");
}

TangleDiagram TangleDiagram::zero_tangle() {
  TangleDiagram t;
  t.edges.push_back({{kBoundary, 0}, {kBoundary, 1}});
  t.edges.push_back({{kBoundary, 3}, {kBoundary, 2}});
  return t;
}

TangleDiagram TangleDiagram::infinity_tangle() {
  TangleDiagram t;
  t.edges.push_back({{kBoundary, 0}, {kBoundary, 3}});
  t.edges.push_back({{kBoundary, 1}, {kBoundary, 2}});
  return t;
}

TangleDiagram TangleDiagram::crossing(int sign) {
  // One crossing filling the square. The positive layout pairs with the
  // coefficients (A, A^-1) on (0-tangle, infinity-tangle).
  TangleDiagram t;
  t.vertices.push_back(VertexKind::Crossing);
  if (sign > 0) {
    t.edges.push_back({{kBoundary, 0}, {0, 3}});
    t.edges.push_back({{kBoundary, 1}, {0, 2}});
    t.edges.push_back({{kBoundary, 2}, {0, 1}});
    t.edges.push_back({{kBoundary, 3}, {0, 0}});
  } else {
    t.edges.push_back({{kBoundary, 0}, {0, 0}});
    t.edges.push_back({{kBoundary, 1}, {0, 3}});
    t.edges.push_back({{kBoundary, 2}, {0, 2}});
    t.edges.push_back({{kBoundary, 3}, {0, 1}});
  }
  return t;
}

std::pair<RationalFunc, RationalFunc> tangle_reduce(const TangleDiagram& t) {
  t.validate();
  const auto alpha = tangle_alpha(t);
  const int nv = static_cast<int>(t.vertices.size());
  int ncross = 0;
  std::vector<int> crossings;
  for (int v = 0; v < nv; ++v)
    if (t.vertices[static_cast<size_t>(v)] == VertexKind::Crossing) {
      crossings.push_back(v);
      ++ncross;
    }
  if (ncross > diagram::global_config().state_cap)
    throw std::runtime_error("tangle exceeds the state cap");

  RationalFunc a_total = RationalFunc::zero(), b_total = RationalFunc::zero();
  const RationalFunc d = RationalFunc::parse("-A^2 - A^-2");
  for (std::uint64_t mask = 0; mask < (1ull << ncross); ++mask) {
    auto pair_port = [&](int v, int p) {
      if (v == TangleDiagram::kBoundary) return -1;
      if (t.vertices[static_cast<size_t>(v)] == VertexKind::Marker) return 1 - p;
      size_t idx = std::lower_bound(crossings.begin(), crossings.end(), v) - crossings.begin();
      return (mask >> idx) & 1u ? (p ^ 1) : (3 - p);
    };
    // trace from each boundary corner
    std::array<int, 4> mate{-1, -1, -1, -1};
    std::vector<char> seen(alpha.size(), 0);
    for (int corner = 0; corner < 4; ++corner) {
      if (mate[static_cast<size_t>(corner)] != -1) continue;
      int cur = 4 * nv + corner;
      while (true) {
        seen[static_cast<size_t>(cur)] = 1;
        int m = alpha[static_cast<size_t>(cur)];
        seen[static_cast<size_t>(m)] = 1;
        int v = m / 4, p = m % 4;
        if (v == nv) {
          mate[static_cast<size_t>(corner)] = p;
          mate[static_cast<size_t>(p)] = corner;
          break;
        }
        cur = 4 * v + pair_port(v, p);
      }
    }
    int loops = 0;
    for (int dd = 0; dd < 4 * nv; ++dd) {
      if (alpha[static_cast<size_t>(dd)] == -1 || seen[static_cast<size_t>(dd)]) continue;
      ++loops;
      int cur = dd;
      do {
        seen[static_cast<size_t>(cur)] = 1;
        int m = alpha[static_cast<size_t>(cur)];
        seen[static_cast<size_t>(m)] = 1;
        cur = 4 * (m / 4) + pair_port(m / 4, m % 4);
      } while (cur != dd);
    }
    int sigma = 2 * __builtin_popcountll(mask) - ncross;
    RationalFunc term = RationalFunc::term(sigma, 1) * d.pow(loops);
    if (mate[0] == 1) {
      a_total += term;  // NW-NE and SW-SE: the 0-tangle
    } else if (mate[0] == 3) {
      b_total += term;  // NW-SW and NE-SE: the infinity-tangle
    } else {
      throw std::logic_error("non-planar strand pairing in a tangle");
    }
  }
  return {a_total, b_total};
}

TangleDiagram stack(const TangleDiagram& t1, const TangleDiagram& t2) {
  t1.validate();
  t2.validate();
  TangleDiagram r;
  r.vertices = t1.vertices;
  for (auto k : t2.vertices) r.vertices.push_back(k);
  const int off = static_cast<int>(t1.vertices.size());

  // sockets: 0..3 = t1 corners, 4..7 = t2 corners, 8..11 = new corners
  // internal darts encoded as 100 + dart
  auto sock_of = [&](int which, int port) { return which * 4 + port; };
  std::map<int, std::vector<int>> adj;
  auto add_link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  auto add_edges = [&](const TangleDiagram& t, int which, int voffset) {
    for (const auto& [x, y] : t.edges) {
      bool bx = x.vertex == TangleDiagram::kBoundary, by = y.vertex == TangleDiagram::kBoundary;
      int ax = bx ? sock_of(which, x.port) : 100 + 4 * (x.vertex + voffset) + x.port;
      int ay = by ? sock_of(which, y.port) : 100 + 4 * (y.vertex + voffset) + y.port;
      if (!bx && !by) {
        r.edges.push_back({{x.vertex + voffset, x.port}, {y.vertex + voffset, y.port}});
      } else {
        add_link(ax, ay);
      }
    }
  };
  add_edges(t1, 0, 0);
  add_edges(t2, 1, off);
  // the tangle product: t1's NE-SE side glued to t2's NW-SW side, so the
  // coefficient of the 0-tangle multiplies and the numbers add
  add_link(sock_of(0, 1), sock_of(1, 0));
  add_link(sock_of(0, 2), sock_of(1, 3));
  // the composite corners: NW,SW from t1, NE,SE from t2
  add_link(sock_of(2, 0), sock_of(0, 0));
  add_link(sock_of(2, 3), sock_of(0, 3));
  add_link(sock_of(2, 1), sock_of(1, 1));
  add_link(sock_of(2, 2), sock_of(1, 2));

  // Resolve the socket graph: sockets have degree <= 2, internal darts and
  // the composite corners have degree 1. Each maximal path becomes an edge
  // between its endpoints; each closed socket cycle is a free circle.
  auto endpoint_dart = [&](int node) {
    if (node >= 100) {
      int dd = node - 100;
      return Dart{dd / 4, dd % 4};
    }
    return Dart{TangleDiagram::kBoundary, node - 8};  // a composite corner
  };
  std::map<int, char> used;
  auto degree = [&](int node) { return adj.count(node) ? adj[node].size() : 0u; };
  for (const auto& [start, nbrs] : adj) {
    if (used.count(start) || degree(start) != 1) continue;
    // walk the path to the far endpoint
    used[start] = 1;
    int prev = start, cur = nbrs[0];
    while (degree(cur) == 2) {
      used[cur] = 1;
      const auto& nx = adj[cur];
      int next = nx[0] == prev ? nx[1] : nx[0];
      prev = cur;
      cur = next;
    }
    used[cur] = 1;
    r.edges.push_back({endpoint_dart(start), endpoint_dart(cur)});
  }
  for (const auto& [start, nbrs] : adj) {
    if (used.count(start)) continue;
    // a closed cycle of interface sockets: a free circle
    int prev = start, cur = nbrs[0];
    used[start] = 1;
    while (cur != start) {
      used[cur] = 1;
      const auto& nx = adj[cur];
      int next = nx[0] == prev ? nx[1] : nx[0];
      prev = cur;
      cur = next;
    }
    int m = static_cast<int>(r.vertices.size());
    r.vertices.push_back(VertexKind::Marker);
    r.edges.push_back({{m, 0}, {m, 1}});
  }
  r.validate();
  return r;
}

diagram::Diagram closure_diagram(const TangleDiagram& t) {
  t.validate();
  diagram::Diagram d;
  d.genus = 0;
  d.vertices = t.vertices;
  // sockets 0..3 = corners; closure arcs NW-NE and SW-SE
  std::map<int, std::vector<int>> adj;
  auto add_link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (const auto& [x, y] : t.edges) {
    bool bx = x.vertex == TangleDiagram::kBoundary, by = y.vertex == TangleDiagram::kBoundary;
    if (!bx && !by) {
      d.edges.push_back({x, y});
    } else {
      int ax = bx ? x.port : 100 + 4 * x.vertex + x.port;
      int ay = by ? y.port : 100 + 4 * y.vertex + y.port;
      add_link(ax, ay);
    }
  }
  add_link(0, 1);
  add_link(3, 2);
  // resolve the chains between internal darts
  std::map<int, char> used;
  for (const auto& [s, nbrs] : adj) {
    if (s < 100 || used.count(s)) continue;
    used[s] = 1;
    int dd1 = s - 100;
    int prev = s, cur = nbrs[0];
    while (cur < 100) {
      used[cur] = 1;
      const auto& nx = adj[cur];
      int next = nx[0] == prev ? nx[1] : nx[0];
      prev = cur;
      cur = next;
    }
    if (used.count(cur)) continue;
    used[cur] = 1;
    int dd2 = cur - 100;
    d.edges.push_back({{dd1 / 4, dd1 % 4}, {dd2 / 4, dd2 % 4}});
  }
  // untouched socket cycles are free circles; they would need nesting data,
  // so reject them here
  for (const auto& [s, nbrs] : adj)
    if (s < 100 && !used.count(s) && adj[s].size() == 2) {
      bool pure = true;
      for (int n : adj[s]) pure &= n < 100;
      if (pure) throw diagram::ValidationError("closure creates a free circle");
    }
  d.holes = {0};
  d.prepare();
  return d;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite || b.infinite) return {true, 0};
  return {false, a.value + b.value};
}

namespace {

// Q[A] / (A^4 + 1)
using Cyc = std::array<Rational, 4>;

Cyc reduce_mod(const LaurentPoly& p) {
  Cyc c{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (const auto& [e, v] : p.terms()) {
    std::int64_t k = ((e % 8) + 8) % 8;
    Rational sign = k >= 4 ? Rational(-1) : Rational(1);
    c[static_cast<size_t>(k % 4)] += sign * Rational(v);
  }
  return c;
}

bool is_zero(const Cyc& c) {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

Cyc mul(const Cyc& a, const Cyc& b) {
  std::array<Rational, 7> t{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) t[i + j] += a[i] * b[j];
  Cyc c{t[0], t[1], t[2], t[3]};
  for (size_t k = 4; k < 7; ++k) c[k - 4] -= t[k];  // A^4 = -1
  return c;
}

// Inverse in the field Q[A]/(A^4+1) by extended Euclid on polynomials.
Cyc inverse(const Cyc& a) {
  using Poly = std::vector<Rational>;
  auto trim = [](Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto sub_scaled = [&](Poly& p, const Poly& q, const Rational& s, size_t shift) {
    if (p.size() < q.size() + shift) p.resize(q.size() + shift, Rational(0));
    for (size_t i = 0; i < q.size(); ++i) p[i + shift] -= s * q[i];
  };
  Poly r0 = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)};  // A^4 + 1
  Poly r1(a.begin(), a.end());
  trim(r1);
  Poly s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    // divide r0 by r1
    Poly q;
    Poly rem = r0;
    trim(rem);
    while (rem.size() >= r1.size() && !rem.empty()) {
      size_t shift = rem.size() - r1.size();
      Rational coef = rem.back() / r1.back();
      if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
      q[shift] += coef;
      sub_scaled(rem, r1, coef, shift);
      trim(rem);
    }
    // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q s1)
    Poly snew = s0;
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0) sub_scaled(snew, s1, q[i], i);
    trim(snew);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  // r0 = gcd (a unit since A^4+1 is irreducible over Q)
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse failed");
  Cyc out{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (size_t i = 0; i < s0.size() && i < 4; ++i) out[i] = s0[i] / r0[0];
  return out;
}

}  // namespace

ExtendedRational conway_number(const TangleDiagram& t) {
  auto [a, b] = tangle_reduce(t);
  // clear denominators: C(T) only needs b/a as a ratio of Laurent polys
  LaurentPoly na = a.num() * b.den();
  LaurentPoly nb = b.num() * a.den();
  Cyc ca = reduce_mod(na), cb = reduce_mod(nb);
  if (is_zero(ca) && is_zero(cb))
    throw std::domain_error("degenerate tangle: both coefficients vanish at the root");
  if (is_zero(ca)) return {true, 0};
  // -i = -A^2 at A = e^{i pi/4}
  Cyc minus_i{Rational(0), Rational(0), Rational(-1), Rational(0)};
  Cyc val = mul(minus_i, mul(cb, inverse(ca)));
  if (val[1] != 0 || val[2] != 0 || val[3] != 0)
    throw std::domain_error("tangle is not rational: its number is not a rational number");
  return {false, val[0]};
}

bool montesinos_obstruction(std::int64_t e, const std::vector<Rational>& fractions) {
  Rational sum = 0;
  for (const auto& f : fractions) sum += f;
  return sum - Rational(e) != 0;
}

TangleDiagram random_tangle(std::mt19937_64& rng, int crossings) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    TangleDiagram t;
    // dangling: current open ends, each either an internal dart (>= 0 coded
    // as 100+dart) or a boundary corner port
    std::vector<int> open = {/*SW*/ 3, /*SE*/ 2};
    std::vector<std::pair<int, int>> pending_links;
    int placed = 0;
    auto connect = [&](int a, int b) { pending_links.push_back({a, b}); };
    int guard = 0;
    while ((placed < crossings || open.size() > 2) && ++guard < 300) {
      int w = static_cast<int>(open.size());
      int roll = static_cast<int>(rng() % 100);
      if (w >= 2 && placed < crossings && roll < 55) {
        int i = static_cast<int>(rng() % (w - 1));
        int c = static_cast<int>(t.vertices.size());
        t.vertices.push_back(VertexKind::Crossing);
        bool pos = rng() % 2 == 0;
        // ports as in the braid layouts
        int il = pos ? 3 : 0, ir = pos ? 0 : 1, ol = pos ? 2 : 3, orr = pos ? 1 : 2;
        connect(open[static_cast<size_t>(i)], 100 + 4 * c + il);
        connect(open[static_cast<size_t>(i + 1)], 100 + 4 * c + ir);
        open[static_cast<size_t>(i)] = 100 + 4 * c + ol;
        open[static_cast<size_t>(i + 1)] = 100 + 4 * c + orr;
        ++placed;
      } else if (w < 6 && roll < 80) {
        int i = static_cast<int>(rng() % (w + 1));
        int m = static_cast<int>(t.vertices.size());
        t.vertices.push_back(VertexKind::Marker);
        open.insert(open.begin() + i, {100 + 4 * m + 0, 100 + 4 * m + 1});
      } else if (w > 2) {
        int i = static_cast<int>(rng() % (w - 1));
        connect(open[static_cast<size_t>(i)], open[static_cast<size_t>(i + 1)]);
        open.erase(open.begin() + i, open.begin() + i + 2);
      }
    }
    if (open.size() != 2 || placed != crossings) continue;
    connect(open[0], 0);  // NW
    connect(open[1], 1);  // NE
    for (auto [x, y] : pending_links) {
      Dart dx = x < 100 ? Dart{TangleDiagram::kBoundary, x} : Dart{(x - 100) / 4, (x - 100) % 4};
      Dart dy = y < 100 ? Dart{TangleDiagram::kBoundary, y} : Dart{(y - 100) / 4, (y - 100) % 4};
      t.edges.push_back({dx, dy});
    }
    try {
      t.validate();
      (void)tangle_reduce(t);
      return t;
    } catch (...) {
      continue;
    }
  }
  throw std::runtime_error("random_tangle failed to converge");
}

std::string TangleDiagram::to_json() const {
  nlohmann::json j;
  nlohmann::json cr = nlohmann::json::array(), mk = nlohmann::json::array();
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
    if (vertices[static_cast<size_t>(v)] == VertexKind::Crossing)
      cr.push_back({{"id", v}, {"over_ports", {0, 2}}});
    else
      mk.push_back(v);
  }
  j["crossings"] = cr;
  j["markers"] = mk;
  nlohmann::json es = nlohmann::json::array();
  for (const auto& [a, b] : edges)
    es.push_back({{a.vertex, a.port}, {b.vertex, b.port}});
  j["edges"] = es;
  j["boundary"] = "NW=0 NE=1 SE=2 SW=3 at vertex -1";
  return j.dump(2);
}

TangleDiagram TangleDiagram::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  TangleDiagram t;
  std::map<int, VertexKind> kind;
  for (const auto& c : j.at("crossings")) kind[c.at("id").get<int>()] = VertexKind::Crossing;
  if (j.contains("markers"))
    for (const auto& m : j.at("markers")) kind[m.get<int>()] = VertexKind::Marker;
  std::map<int, int> idx;
  for (const auto& [id, k] : kind) {
    idx[id] = static_cast<int>(t.vertices.size());
    t.vertices.push_back(k);
  }
  for (const auto& e : j.at("edges")) {
    auto dart = [&](const nlohmann::json& jd) {
      int v = jd[0].get<int>();
      return Dart{v == kBoundary ? kBoundary : idx.at(v), jd[1].get<int>()};
    };
    t.edges.push_back({dart(e[0]), dart(e[1])});
  }
  t.validate();
  return t;
}

}  // namespace tangle
}  // namespace skeinlab
