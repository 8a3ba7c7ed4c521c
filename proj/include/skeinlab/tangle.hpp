#pragma once

#include <random>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {
namespace tangle {

// A 2-tangle in the square: a 4-valent ribbon graph whose four loose ends
// sit at the corners NW, NE, SE, SW. The boundary is modelled as a 4-port
// vertex (ports counterclockwise NW=0, NE=1, SE=2, SW=3); edges may
// reference it through darts with vertex = -1.
struct TangleDiagram {
  static constexpr int kBoundary = -1;
  std::vector<diagram::VertexKind> vertices;
  std::vector<std::pair<diagram::Dart, diagram::Dart>> edges;

  void validate() const;

  static TangleDiagram zero_tangle();      // two horizontal arcs
  static TangleDiagram infinity_tangle();  // two vertical arcs
  static TangleDiagram crossing(int sign);

  std::string to_json() const;
  static TangleDiagram from_json(const std::string& text);
};

// Skein expansion onto the crossingless pair: first the coefficient of the
// 0-tangle, then of the infinity-tangle.
std::pair<RationalFunc, RationalFunc> tangle_reduce(const TangleDiagram& t);

// The tangle product (one tangle stacked against the other along the axis
// where the numbers add).
TangleDiagram stack(const TangleDiagram& t1, const TangleDiagram& t2);

// Numerator closure: arcs joining NW-NE and SW-SE.
diagram::Diagram closure_diagram(const TangleDiagram& t);

struct ExtendedRational {
  bool infinite = false;
  Rational value = 0;
  bool operator==(const ExtendedRational& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};
ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);

// -i b/a evaluated exactly at A = e^{i pi/4} by reduction mod A^4 + 1;
// infinity when a vanishes there, error when the value is not rational or
// both coefficients vanish.
ExtendedRational conway_number(const TangleDiagram& t);

// True iff sum alpha_j / beta_j - e != 0 (the non-slice criterion for
// Montesinos links with at least two components).
bool montesinos_obstruction(std::int64_t e, const std::vector<Rational>& fractions);

// Random tangle with the given number of crossings.
TangleDiagram random_tangle(std::mt19937_64& rng, int crossings);

}  // namespace tangle
}  // namespace skeinlab
