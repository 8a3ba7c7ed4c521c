#include <doctest.h>

#include "skeinlab/diagram.hpp"
#include "skeinlab/qnum.hpp"
#include "skeinlab/tl.hpp"

using namespace skeinlab;
using namespace skeinlab::diagram;

namespace {

RationalFunc delta() { return RationalFunc::parse("-A^2 - A^-2"); }

// k nested circles around the hole of the annulus (the k-core link).
Diagram make_cores(int k) {
  Diagram d;
  d.genus = 1;
  for (int i = 0; i < k; ++i) {
    d.vertices.push_back(VertexKind::Marker);
    d.edges.push_back({{i, 0}, {i, 1}});
  }
  // Orbit faces come out as 2i (side of dart (i,0)) and 2i+1; nest circle
  // i+1 inside circle i.
  for (int i = 0; i + 1 < k; ++i) d.face_merges.push_back({2 * i + 1, 2 * (i + 1)});
  // Canonical classes: 0, then {1,2} -> 1, ..., innermost singleton is k.
  d.holes = {0, k};
  d.prepare();
  return d;
}

// A trivial circle in the disk (g = 0) or beside the hole (g = 1).
Diagram trivial_loop(int genus) {
  Diagram d;
  d.genus = genus;
  d.vertices.push_back(VertexKind::Marker);
  d.edges.push_back({{0, 0}, {0, 1}});
  d.holes.assign(static_cast<size_t>(genus + 1), 0);  // all holes on one side
  d.prepare();
  return d;
}

// The 1-crossing knot winding twice around the hole.
Diagram one_one() {
  Diagram d;
  d.genus = 1;
  d.vertices.push_back(VertexKind::Crossing);
  d.edges.push_back({{0, 1}, {0, 2}});
  d.edges.push_back({{0, 3}, {0, 0}});
  d.holes = {0, 2};
  d.prepare();
  return d;
}

// Unknot in the disk with one curl; sign +1 gives the positive kink.
Diagram curl_unknot(int sign) {
  Diagram d;
  d.genus = 0;
  d.vertices.push_back(VertexKind::Crossing);
  if (sign > 0) {
    d.edges.push_back({{0, 0}, {0, 1}});
    d.edges.push_back({{0, 2}, {0, 3}});
  } else {
    d.edges.push_back({{0, 1}, {0, 2}});
    d.edges.push_back({{0, 3}, {0, 0}});
  }
  d.holes = {0};
  d.prepare();
  return d;
}

Diagram empty_diagram(int genus) {
  Diagram d;
  d.genus = genus;
  d.holes.assign(static_cast<size_t>(genus + 1), 0);
  d.prepare();
  return d;
}

}  // namespace

TEST_CASE("empty diagram and trivial loops") {
  CHECK(bracket(empty_diagram(0)) == RationalFunc::one());
  CHECK(bracket(empty_diagram(3)) == RationalFunc::one());
  CHECK(bracket(trivial_loop(0)) == delta());
  CHECK(bracket(trivial_loop(1)) == delta());
  CHECK(bracket(trivial_loop(2)) == delta());
  auto z = z2_class(trivial_loop(2));
  CHECK(z == std::vector<int>{0, 0});
}

TEST_CASE("resolve on crossingless diagrams") {
  Splitting sp = resolve(trivial_loop(0), 0);
  CHECK(sp.sD == 1);
  CHECK(sp.p == 0);
  Splitting core = resolve(make_cores(1), 0);
  CHECK(core.sD == 0);
  CHECK(core.p == 1);
  CHECK(splitting_bracket(resolve(empty_diagram(2), 0)) == RationalFunc::one());
}

TEST_CASE("parallel cores match the annulus skein values") {
  for (int k = 0; k <= 6; ++k) {
    Diagram d = make_cores(k);
    CHECK(bracket(d) == tl::annulus_parallel_cores(k));
  }
  // 0_1: the single core is Z2-nontrivial and has vanishing bracket
  Diagram core = make_cores(1);
  CHECK(bracket(core).is_zero());
  CHECK(z2_class(core) == std::vector<int>{1});
  CHECK(alternating(core));
  CHECK(!connected(make_cores(2)));
}

TEST_CASE("1_1 bracket and invariants") {
  Diagram d = one_one();
  CHECK(bracket(d) == RationalFunc::parse("-A^3"));
  CHECK(bracket_reference(d) == RationalFunc::parse("-A^3"));
  CHECK(z2_trivial(d));
  CHECK(alternating(d));
  CHECK(connected(d));
  CHECK_FALSE(homotopy_trivial_g1(d));  // winds twice
  CHECK(external_crossing_count(d) == 1);
  CHECK_FALSE(simple(d));
  CHECK(bracket(d).ord_at_i() == 0);
}

TEST_CASE("curls give the Reidemeister I factors") {
  CHECK(bracket(curl_unknot(+1)) == RationalFunc::parse("-A^3") * delta());
  CHECK(bracket(curl_unknot(-1)) == RationalFunc::parse("-A^-3") * delta());
  CHECK(writhe(curl_unknot(+1)) == 1);
  CHECK(writhe(curl_unknot(-1)) == -1);
  CHECK_FALSE(simple(curl_unknot(+1)));  // nugatory crossing
}

TEST_CASE("mirror swaps A and A^-1") {
  for (const Diagram& d : {one_one(), curl_unknot(+1)}) {
    Diagram m = mirror_diagram(d);
    CHECK(bracket(m) == bracket(d).mirrored());
  }
}

TEST_CASE("crossing-parity of the exponents") {
  // <D> = A^{n mod 2} (function of A^2)
  for (const Diagram& d : {one_one(), curl_unknot(+1), make_cores(2)}) {
    RationalFunc br = bracket(d);
    if (br.is_zero()) continue;
    int n = d.crossing_count();
    int denp = static_cast<int>(((br.den().min_exp() % 2) + 2) % 2);
    for (const auto& [e, c] : br.num().terms()) CHECK(((e % 2) + 2) % 2 == (n + denp) % 2);
    for (const auto& [e, c] : br.den().terms()) CHECK(((e % 2) + 2) % 2 == denp);
  }
}

TEST_CASE("splitting bracket factors off trivial loops") {
  Diagram d = one_one();
  for (StateMask s = 0; s < 2; ++s) {
    Splitting sp = resolve(d, s);
    Splitting stripped = strip_trivial(sp);
    CHECK(splitting_bracket(sp) ==
          delta().pow(sp.sD) * splitting_bracket(stripped));
  }
}

TEST_CASE("json round trip") {
  Diagram d = one_one();
  std::string text = d.to_json();
  Diagram back = Diagram::from_json(text);
  CHECK(bracket(back) == bracket(d));
  Diagram cores = make_cores(3);
  CHECK(bracket(Diagram::from_json(cores.to_json())) == bracket(cores));
}

TEST_CASE("validation failures") {
  Diagram d;
  d.genus = 0;
  d.vertices.push_back(VertexKind::Marker);
  d.holes = {0};
  CHECK_THROWS_AS(d.prepare(), ValidationError);  // unused darts

  Diagram two;
  two.genus = 0;
  two.vertices.push_back(VertexKind::Marker);
  two.vertices.push_back(VertexKind::Marker);
  two.edges.push_back({{0, 0}, {0, 1}});
  two.edges.push_back({{1, 0}, {1, 1}});
  two.holes = {0};
  CHECK_THROWS_AS(two.prepare(), ValidationError);  // nesting unspecified
}
