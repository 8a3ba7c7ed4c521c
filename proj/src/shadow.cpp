#include "skeinlab/shadow.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

#include "skeinlab/qnum.hpp"

namespace skeinlab {
namespace shadow {

void Shadow::validate() const {
  auto check_region = [&](int r, const char* what) {
    if (r < 0 || r >= static_cast<int>(regions.size()))
      throw ShadowError(std::string(what) + " references unknown region " + std::to_string(r));
  };
  for (const auto& e : edges) {
    for (int s = 0; s < 3; ++s) check_region(e.regions[s], "edge");
    if (e.chi != 0 && e.chi != 1) throw ShadowError("edge chi must be 0 or 1");
  }
  for (const auto& v : vertices)
    for (int s = 0; s < 6; ++s) check_region(v.regions[s], "vertex");
  for (const auto& b : boundary_edges) check_region(b.region, "boundary edge");
  for (const auto& b : boundary_vertices)
    for (int s = 0; s < 3; ++s) check_region(b.regions[s], "boundary vertex");
  for (const auto& r : regions) {
    if (r.chi > 2) throw ShadowError("region chi exceeds 2");
    if (r.boundary_color && *r.boundary_color < 0) throw ShadowError("negative boundary color");
  }
  if (incidence) {
    if (incidence->size() != edges.size())
      throw ShadowError("incidence matrix needs one row per interior edge");
    for (const auto& row : *incidence)
      if (row.size() != regions.size())
        throw ShadowError("incidence rows need one entry per region");
  }
}

int Shadow::euler() const {
  int chi = static_cast<int>(vertices.size()) + static_cast<int>(boundary_vertices.size());
  for (const auto& e : edges) chi -= e.chi;
  for (const auto& e : boundary_edges) chi -= e.chi;
  for (const auto& r : regions) chi += r.chi;
  return chi;
}

Shadow Shadow::sphere(std::int64_t gleam) {
  Shadow x;
  x.regions.push_back({2, 2 * gleam, std::nullopt});
  return x;
}

Shadow Shadow::g_holed_disk(int g) {
  Shadow x;
  x.regions.push_back({1 - g, 0, 0});
  for (int i = 0; i <= g; ++i) x.boundary_edges.push_back({0, 0});
  return x;
}

namespace {

// Enumerate admissible colorings; q_r > 0 switches to q-admissibility at
// level r (bounded), otherwise colors are capped by max_color and reaching
// the cap is an error.
void enumerate_core(const Shadow& x, int max_color, int q_r,
                    const std::function<void(const Coloring&)>& emit) {
  x.validate();
  const int nr = static_cast<int>(x.regions.size());
  std::vector<int> color(static_cast<size_t>(nr), -1);

  // Visit regions reachable from forced ones first so edge constraints
  // prune early.
  std::vector<int> order;
  std::vector<char> queued(static_cast<size_t>(nr), 0);
  auto grow = [&](size_t from) {
    for (size_t i = from; i < order.size(); ++i)
      for (const auto& e : x.edges) {
        bool touches = false;
        for (int s = 0; s < 3; ++s) touches |= e.regions[s] == order[i];
        if (!touches) continue;
        for (int s = 0; s < 3; ++s)
          if (!queued[static_cast<size_t>(e.regions[s])]) {
            queued[static_cast<size_t>(e.regions[s])] = 1;
            order.push_back(e.regions[s]);
          }
      }
  };
  for (int r = 0; r < nr; ++r)
    if (x.regions[static_cast<size_t>(r)].boundary_color) {
      order.push_back(r);
      queued[static_cast<size_t>(r)] = 1;
    }
  grow(0);
  for (int r = 0; r < nr; ++r)
    if (!queued[static_cast<size_t>(r)]) {
      size_t from = order.size();
      queued[static_cast<size_t>(r)] = 1;
      order.push_back(r);
      grow(from);
    }

  const int cap = q_r > 0 ? q_r - 2 : max_color;

  auto edges_ok = [&]() {
    for (const auto& e : x.edges) {
      int c[3];
      bool complete = true;
      for (int s = 0; s < 3; ++s) {
        c[s] = color[static_cast<size_t>(e.regions[s])];
        complete &= c[s] >= 0;
      }
      if (!complete) continue;
      bool ok = q_r > 0 ? qnum::is_q_admissible(c[0], c[1], c[2], q_r)
                        : qnum::is_admissible(c[0], c[1], c[2]);
      if (!ok) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == order.size()) {
      emit(color);
      return;
    }
    int r = order[static_cast<size_t>(idx)];
    const auto& reg = x.regions[static_cast<size_t>(r)];
    int lo = 0, hi = cap;
    if (reg.boundary_color) lo = hi = *reg.boundary_color;
    for (int c = lo; c <= hi; ++c) {
      color[static_cast<size_t>(r)] = c;
      if (edges_ok()) {
        if (q_r == 0 && c == max_color && !reg.boundary_color) {
          std::ostringstream os;
          os << "coloring bound " << max_color << " exhausted at region " << r
             << " (the shadow does not collapse onto a graph)";
          throw BoundExhaustion(os.str());
        }
        self(self, idx + 1);
      }
      color[static_cast<size_t>(r)] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace

void for_each_q_coloring(const Shadow& x, int r, const std::function<void(const Coloring&)>& emit) {
  enumerate_core(x, 0, r, emit);
}

std::vector<Coloring> enumerate_colorings(const Shadow& x, int max_color) {
  std::vector<Coloring> out;
  enumerate_core(x, max_color, 0, [&](const Coloring& c) { out.push_back(c); });
  return out;
}

RationalFunc eval_coloring(const Shadow& x, const Coloring& xi) {
  RationalFunc val = RationalFunc::one();
  PhaseMonomial phase = PhaseMonomial::identity();
  for (size_t r = 0; r < x.regions.size(); ++r) {
    const auto& reg = x.regions[r];
    int c = xi[r];
    val *= qnum::circle(c).pow(reg.chi);
    if (reg.gleam2 != 0 && c != 0) {
      // (-1)^{gc} A^{gc(c+2)} with g = gleam2/2
      PhaseMonomial pf;
      pf.ipow = static_cast<int>(((reg.gleam2 * c) % 4 + 4) % 4);
      pf.half_exp = reg.gleam2 * c * (c + 2);
      phase = phase * pf;
    }
  }
  for (const auto& v : x.vertices)
    val *= qnum::tet(xi[static_cast<size_t>(v.regions[0])], xi[static_cast<size_t>(v.regions[1])],
                     xi[static_cast<size_t>(v.regions[2])], xi[static_cast<size_t>(v.regions[3])],
                     xi[static_cast<size_t>(v.regions[4])], xi[static_cast<size_t>(v.regions[5])]);
  for (const auto& b : x.boundary_vertices)
    val *= qnum::theta(xi[static_cast<size_t>(b.regions[0])], xi[static_cast<size_t>(b.regions[1])],
                       xi[static_cast<size_t>(b.regions[2])]);
  for (const auto& e : x.edges)
    if (e.chi != 0)
      val = val / qnum::theta(xi[static_cast<size_t>(e.regions[0])],
                              xi[static_cast<size_t>(e.regions[1])],
                              xi[static_cast<size_t>(e.regions[2])]);
  for (const auto& b : x.boundary_edges)
    if (b.chi != 0) val = val / qnum::circle(xi[static_cast<size_t>(b.region)]);
  return val * phase.to_rational();
}

RationalFunc shadow_eval_q(const Shadow& x) {
  RationalFunc total = RationalFunc::zero();
  enumerate_core(x, diagram::global_config().color_cap, 0,
                 [&](const Coloring& c) { total += eval_coloring(x, c); });
  return total;
}

OddSurface odd_surface(const Shadow& x, const Coloring& xi) {
  OddSurface s;
  for (size_t r = 0; r < x.regions.size(); ++r)
    if (xi[r] % 2 != 0) {
      s.regions.push_back(static_cast<int>(r));
      s.chi += x.regions[r].chi;
    }
  for (const auto& e : x.edges) {
    int odd = 0;
    for (int i = 0; i < 3; ++i) odd += xi[static_cast<size_t>(e.regions[i])] % 2 != 0;
    if (odd == 2) s.chi -= e.chi;
  }
  for (const auto& v : x.vertices) {
    // a vertex joins the odd surface when some incident edge triple has two
    // odd colors
    const int* q = v.regions;
    const int tri[4][3] = {{q[0], q[1], q[2]}, {q[0], q[4], q[5]}, {q[1], q[3], q[5]},
                           {q[2], q[3], q[4]}};
    bool member = false;
    for (const auto& t : tri) {
      int odd = 0;
      for (int i = 0; i < 3; ++i) odd += xi[static_cast<size_t>(t[i])] % 2 != 0;
      member |= odd == 2;
    }
    if (member) s.chi += 1;
  }
  return s;
}

bool order_theorem_check(const Shadow& x, const Coloring& xi) {
  RationalFunc v = eval_coloring(x, xi);
  if (v.is_zero()) return true;
  OddSurface s = odd_surface(x, xi);
  int red = 0;
  for (const auto& b : x.boundary_vertices)
    red += qnum::is_red(xi[static_cast<size_t>(b.regions[0])], xi[static_cast<size_t>(b.regions[1])],
                        xi[static_cast<size_t>(b.regions[2])]);
  return 2 * v.ord_at_i() >= 2 * static_cast<std::int64_t>(s.chi) - red;
}

IntersectionForm intersection_form(const Shadow& x) {
  x.validate();
  linalg::IMatrix rows;
  if (x.incidence) {
    rows = *x.incidence;
  } else if (x.edges.empty()) {
    rows = {};  // no constraints from edges
  } else {
    throw ShadowError("intersection form needs the signed incidence matrix");
  }
  // Regions meeting the boundary cannot enter a closed 2-cycle.
  std::vector<char> open_region(x.regions.size(), 0);
  for (size_t r = 0; r < x.regions.size(); ++r)
    if (x.regions[r].boundary_color) open_region[r] = 1;
  for (const auto& b : x.boundary_edges) open_region[static_cast<size_t>(b.region)] = 1;
  for (const auto& b : x.boundary_vertices)
    for (int s = 0; s < 3; ++s) open_region[static_cast<size_t>(b.regions[s])] = 1;
  for (size_t r = 0; r < x.regions.size(); ++r) {
    if (!open_region[r]) continue;
    std::vector<Int> kill(x.regions.size(), Int(0));
    kill[r] = 1;
    rows.push_back(std::move(kill));
  }
  IntersectionForm f;
  f.h2_basis = linalg::integer_kernel(rows, static_cast<int>(x.regions.size()));
  const size_t k = f.h2_basis.size();
  f.form.assign(k, std::vector<Rational>(k, Rational(0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Rational q(0);
      for (size_t r = 0; r < x.regions.size(); ++r)
        q += Rational(f.h2_basis[i][r] * f.h2_basis[j][r] * x.regions[r].gleam2, 2);
      f.form[i][j] = q;
    }
  f.signature = linalg::signature(f.form);
  return f;
}

int signature(const Shadow& x) { return intersection_form(x).signature; }

Shadow connected_sum(const Shadow& x, const Shadow& y, int region_x, int region_y,
                     std::int64_t attach_gleam) {
  x.validate();
  y.validate();
  if (region_x < 0 || region_x >= static_cast<int>(x.regions.size()) || region_y < 0 ||
      region_y >= static_cast<int>(y.regions.size()))
    throw ShadowError("connected_sum: no such region");
  Shadow z;
  const int off = static_cast<int>(x.regions.size());
  z.regions = x.regions;
  for (const auto& r : y.regions) z.regions.push_back(r);
  // remove a disk from each attaching region, add the shared disk
  z.regions[static_cast<size_t>(region_x)].chi -= 1;
  z.regions[static_cast<size_t>(region_x)].gleam2 -= 2 * attach_gleam;
  z.regions[static_cast<size_t>(off + region_y)].chi -= 1;
  z.regions[static_cast<size_t>(off + region_y)].gleam2 -= 2 * attach_gleam;
  const int disk = static_cast<int>(z.regions.size());
  z.regions.push_back({1, 2 * attach_gleam, std::nullopt});

  z.edges = x.edges;
  for (const auto& e : y.edges) {
    Shadow::Edge ne = e;
    for (int s = 0; s < 3; ++s) ne.regions[s] += off;
    z.edges.push_back(ne);
  }
  Shadow::Edge glue;
  glue.regions[0] = region_x;
  glue.regions[1] = off + region_y;
  glue.regions[2] = disk;
  glue.chi = 0;  // a circle
  z.edges.push_back(glue);

  z.vertices = x.vertices;
  for (const auto& v : y.vertices) {
    Shadow::Vertex nv = v;
    for (int s = 0; s < 6; ++s) nv.regions[s] += off;
    z.vertices.push_back(nv);
  }
  z.boundary_edges = x.boundary_edges;
  for (const auto& b : y.boundary_edges) z.boundary_edges.push_back({b.region + off, b.chi});
  z.boundary_vertices = x.boundary_vertices;
  for (const auto& b : y.boundary_vertices) {
    Shadow::BoundaryVertex nb = b;
    for (int s = 0; s < 3; ++s) nb.regions[s] += off;
    z.boundary_vertices.push_back(nb);
  }

  // Incidence: pad the old rows and add the glue-circle row (the attaching
  // remainders pair with the disk: rx + D and ry + D close up again).
  bool have_x = x.incidence || x.edges.empty();
  bool have_y = y.incidence || y.edges.empty();
  if (have_x && have_y) {
    linalg::IMatrix inc;
    const size_t total = z.regions.size();
    if (x.incidence)
      for (const auto& row : *x.incidence) {
        std::vector<Int> nr(total, Int(0));
        for (size_t c = 0; c < row.size(); ++c) nr[c] = row[c];
        inc.push_back(std::move(nr));
      }
    if (y.incidence)
      for (const auto& row : *y.incidence) {
        std::vector<Int> nr(total, Int(0));
        for (size_t c = 0; c < row.size(); ++c) nr[static_cast<size_t>(off) + c] = row[c];
        inc.push_back(std::move(nr));
      }
    std::vector<Int> glue_row(total, Int(0));
    glue_row[static_cast<size_t>(region_x)] = 1;
    glue_row[static_cast<size_t>(off + region_y)] = 1;
    glue_row[static_cast<size_t>(disk)] = -1;
    inc.push_back(std::move(glue_row));
    z.incidence = std::move(inc);
  }
  return z;
}

Shadow bubble_move(const Shadow& x, int region, int kind) {
  if (kind < -1 || kind > 1) throw ShadowError("bubble kind must be 0 or +-1");
  return connected_sum(x, Shadow::sphere(kind), region, 0, 0);
}

Shadow make_xs_shadow(const diagram::Splitting& sp) {
  Shadow x;
  for (const auto& f : sp.faces) {
    Shadow::Region r;
    r.chi = f.chi;
    r.gleam2 = 0;
    if (!f.holes.empty()) r.boundary_color = 0;
    x.regions.push_back(r);
  }
  for (size_t fi = 0; fi < sp.faces.size(); ++fi)
    for (size_t h = 0; h < sp.faces[fi].holes.size(); ++h)
      x.boundary_edges.push_back({static_cast<int>(fi), 0});
  linalg::IMatrix inc;
  for (const auto& lp : sp.loops) {
    int annulus = static_cast<int>(x.regions.size());
    x.regions.push_back({0, 0, 1});
    Shadow::Edge e;
    e.regions[0] = lp.side_faces[0];
    e.regions[1] = lp.side_faces[1];
    e.regions[2] = annulus;
    e.chi = 0;
    x.edges.push_back(e);
    x.boundary_edges.push_back({annulus, 0});
  }
  const size_t total = x.regions.size();
  for (const auto& e : x.edges) {
    std::vector<Int> row(total, Int(0));
    row[static_cast<size_t>(e.regions[0])] += 1;
    row[static_cast<size_t>(e.regions[1])] -= 1;
    row[static_cast<size_t>(e.regions[2])] += 1;
    inc.push_back(std::move(row));
  }
  x.incidence = std::move(inc);
  return x;
}

std::string Shadow::to_json() const {
  nlohmann::json j;
  j["regions"] = nlohmann::json::array();
  for (const auto& r : regions) {
    nlohmann::json jr;
    jr["chi"] = r.chi;
    if (r.gleam2 % 2 == 0)
      jr["gleam"] = r.gleam2 / 2;
    else
      jr["gleam"] = std::to_string(r.gleam2) + "/2";
    if (r.boundary_color) jr["color"] = *r.boundary_color;
    j["regions"].push_back(jr);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges)
    j["edges"].push_back({{"regions", {e.regions[0], e.regions[1], e.regions[2]}}, {"chi", e.chi}});
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : vertices) {
    nlohmann::json jv;
    jv["regions"] = std::vector<int>(v.regions, v.regions + 6);
    j["vertices"].push_back(jv);
  }
  nlohmann::json jb;
  jb["edges"] = nlohmann::json::array();
  for (const auto& b : boundary_edges)
    jb["edges"].push_back({{"region", b.region}, {"chi", b.chi}});
  jb["vertices"] = nlohmann::json::array();
  for (const auto& b : boundary_vertices)
    jb["vertices"].push_back({{"regions", {b.regions[0], b.regions[1], b.regions[2]}}});
  j["boundary"] = jb;
  if (incidence) {
    nlohmann::json ji = nlohmann::json::array();
    for (const auto& row : *incidence) {
      nlohmann::json jr = nlohmann::json::array();
      for (const auto& v : row) jr.push_back(v.convert_to<long long>());
      ji.push_back(jr);
    }
    j["incidence"] = ji;
  }
  return j.dump(2);
}

Shadow Shadow::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Shadow x;
  for (const auto& jr : j.at("regions")) {
    Region r;
    r.chi = jr.at("chi").get<int>();
    if (jr.contains("gleam")) {
      const auto& g = jr.at("gleam");
      if (g.is_number_integer()) {
        r.gleam2 = 2 * g.get<std::int64_t>();
      } else {
        std::string s = g.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos)
          r.gleam2 = 2 * std::stoll(s);
        else if (s.substr(slash + 1) == "2")
          r.gleam2 = std::stoll(s.substr(0, slash));
        else
          throw ShadowError("gleam must be an integer or a string p/2");
      }
    }
    if (jr.contains("color")) r.boundary_color = jr.at("color").get<int>();
    x.regions.push_back(r);
  }
  if (j.contains("edges"))
    for (const auto& je : j.at("edges")) {
      Edge e;
      for (int s = 0; s < 3; ++s) e.regions[s] = je.at("regions")[static_cast<size_t>(s)].get<int>();
      e.chi = je.value("chi", 1);
      x.edges.push_back(e);
    }
  if (j.contains("vertices"))
    for (const auto& jv : j.at("vertices")) {
      Vertex v;
      for (int s = 0; s < 6; ++s) v.regions[s] = jv.at("regions")[static_cast<size_t>(s)].get<int>();
      x.vertices.push_back(v);
    }
  if (j.contains("boundary")) {
    const auto& jb = j.at("boundary");
    if (jb.contains("edges"))
      for (const auto& b : jb.at("edges"))
        x.boundary_edges.push_back({b.at("region").get<int>(), b.value("chi", 0)});
    if (jb.contains("vertices"))
      for (const auto& b : jb.at("vertices")) {
        BoundaryVertex v;
        for (int s = 0; s < 3; ++s)
          v.regions[s] = b.at("regions")[static_cast<size_t>(s)].get<int>();
        x.boundary_vertices.push_back(v);
      }
  }
  if (j.contains("incidence")) {
    linalg::IMatrix inc;
    for (const auto& row : j.at("incidence")) {
      std::vector<Int> r;
      for (const auto& v : row) r.push_back(Int(v.get<long long>()));
      inc.push_back(std::move(r));
    }
    x.incidence = std::move(inc);
  }
  x.validate();
  return x;
}

}  // namespace shadow
}  // namespace skeinlab
