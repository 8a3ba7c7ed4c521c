#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fixtures_common.hpp"
#include "skeinlab/diagram_gen.hpp"

using namespace skeinlab;
using namespace skeinlab::diagram;

namespace {
RationalFunc delta() { return RationalFunc::parse("-A^2 - A^-2"); }
}  // namespace

TEST_CASE("psi vanishes for genus at most one and halves the top order") {
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 30) {
    int genus = static_cast<int>(rng() % 2);
    Diagram d = gen::random_diagram(rng, genus, 1 + static_cast<int>(rng() % 4));
    if (!z2_trivial(d)) continue;
    StateMask s = rng() & ((1ull << d.crossing_count()) - 1);
    CHECK(psi(d, s) == 0);
    // psi = ord_infty <D_s> / 2 in general
    Splitting stripped = strip_trivial(resolve(d, s));
    RationalFunc ds = splitting_bracket(stripped);
    if (!ds.is_zero()) {
      bool half = 2 * psi(d, s) == ds.ord_infty();
      CHECK(half);
    }
    ++done;
  }
}

TEST_CASE("psi at genus two follows the parity of the essential curves") {
  std::mt19937_64 rng(12);
  int done = 0;
  while (done < 30) {
    Diagram d = gen::random_diagram(rng, 2, 1 + static_cast<int>(rng() % 4));
    if (!z2_trivial(d)) continue;
    StateMask s = rng() & ((1ull << d.crossing_count()) - 1);
    Splitting sp = resolve(d, s);
    std::int64_t want = sp.p % 2 == 0 ? 0 : -1;
    CHECK(psi(d, s) == want);
    ++done;
  }
}

TEST_CASE("psi rejects Z2-nontrivial diagrams") {
  Diagram core = testutil::make_cores(1);
  CHECK_THROWS_AS(psi(core, 0), std::invalid_argument);
}

TEST_CASE("linking data in the disk") {
  using gen::braid_closure;
  // 0-framed unknot
  Diagram u;
  u.genus = 0;
  u.vertices.push_back(VertexKind::Marker);
  u.edges.push_back({{0, 0}, {0, 1}});
  u.holes = {0};
  LinkingMatrix m = linking_matrix(u);
  REQUIRE(m.m.size() == 1);
  CHECK(m.m[0][0] == 0);
  CHECK(m.signature == 0);

  // Hopf link: |lk| = 1, symmetric, no self-writhe; the sign flips with the
  // mirror (it depends on the component orientations, which are canonical).
  Diagram hopf = braid_closure(2, {1, 1}, false);
  LinkingMatrix h = linking_matrix(hopf);
  REQUIRE(h.m.size() == 2);
  CHECK((h.m[0][1] == 1 || h.m[0][1] == -1));
  CHECK(h.m[1][0] == h.m[0][1]);
  CHECK(h.m[0][0] == 0);
  CHECK(h.m[1][1] == 0);

  // the signature of the linking matrix is orientation-free
  CHECK(h.signature == 0);
}

TEST_CASE("simple alternating connected diagrams are adequate") {
  for (const char* name : {"2_1", "3_1", "necklace_g2"}) {
    std::ifstream in(std::string(SKEINLAB_FIXTURE_DIR) + "/table/" + std::string(name) + ".json");
    std::stringstream ss;
    ss << in.rdbuf();
    Diagram d = Diagram::from_json(ss.str());
    if (!simple(d) || !alternating(d) || !connected(d) || !z2_trivial(d)) continue;
    Adequacy a = adequacy(d);
    CHECK(a.plus);
    CHECK(a.minus);
  }
  // a kink is never plus- and minus-adequate at once
  Diagram tre = gen::braid_closure(2, {1, 1, 1}, false);
  Diagram kinked = gen::add_r1(tre, 0, +1);
  Adequacy a = adequacy(kinked);
  bool both = a.plus && a.minus;
  CHECK_FALSE(both);
}

TEST_CASE("brackets in the solid torus are Laurent polynomials") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 25; ++t) {
    Diagram d = gen::random_diagram(rng, static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 5));
    CHECK(bracket(d).is_laurent());
  }
}

TEST_CASE("order bounds at q = i") {
  std::mt19937_64 rng(14);
  // lower bound 1 - g for every diagram
  for (int t = 0; t < 25; ++t) {
    int genus = static_cast<int>(rng() % 3);
    Diagram d = gen::random_diagram(rng, genus, 1 + static_cast<int>(rng() % 4));
    RationalFunc br = bracket(d);
    if (br.is_zero()) continue;
    CHECK(br.ord_at_i() >= 1 - genus);
  }
  // upper bound: components count for homotopically trivial links, g <= 1
  int done = 0;
  while (done < 15) {
    Diagram d = gen::random_diagram(rng, 1, 1 + static_cast<int>(rng() % 4));
    if (!homotopy_trivial_g1(d)) continue;
    RationalFunc br = bracket(d);
    int k = static_cast<int>(windings_g1(d).size());
    if (!br.is_zero()) CHECK(br.ord_at_i() <= k);
    ++done;
  }
}

TEST_CASE("encircling move invariance on curated pairs") {
  using gen::braid_closure;
  using gen::wrap_word;
  auto slid = [](int strands, std::vector<int> w, int sign) {
    for (int x : wrap_word(strands, sign)) w.push_back(x);
    Diagram b = braid_closure(strands, w, true);
    b = gen::add_r1(b, 0, -sign);
    b = gen::add_r1(b, 0, -sign);
    return b;
  };
  CHECK(bracket(braid_closure(2, {1, 1}, true)) == bracket(slid(2, {1, 1}, +1)));
  CHECK(bracket(braid_closure(4, {1, -2, 3}, true)) == bracket(slid(4, {1, -2, 3}, -1)));
}
