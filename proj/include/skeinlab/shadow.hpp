#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/linalg.hpp"

namespace skeinlab {
namespace shadow {

struct ShadowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoundExhaustion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A simple polyhedron with gleams: regions carry an Euler characteristic, a
// half-integer gleam (stored doubled) and an optional boundary color;
// interior edges see three region slots (repeats allowed), interior vertices
// six regions in tetrahedral slot order (a,b,c,d,e,f) with vertex triples
// (a,b,c), (a,e,f), (b,d,f), (c,d,e).
struct Shadow {
  struct Region {
    int chi = 1;
    std::int64_t gleam2 = 0;  // twice the gleam
    std::optional<int> boundary_color;
  };
  struct Edge {
    int regions[3] = {0, 0, 0};
    int chi = 1;  // 1 for an arc, 0 for a circle
  };
  struct Vertex {
    int regions[6] = {0, 0, 0, 0, 0, 0};
  };
  struct BoundaryEdge {
    int region = 0;
    int chi = 0;
  };
  struct BoundaryVertex {
    int regions[3] = {0, 0, 0};
  };

  std::vector<Region> regions;
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;
  std::vector<BoundaryEdge> boundary_edges;
  std::vector<BoundaryVertex> boundary_vertices;
  // Optional signed region-per-column incidence rows, one per interior edge.
  std::optional<linalg::IMatrix> incidence;

  void validate() const;
  // chi(X) = #vertices - sum chi(e) + sum chi(f).
  int euler() const;

  std::string to_json() const;
  static Shadow from_json(const std::string& text);

  static Shadow sphere(std::int64_t gleam);
  static Shadow g_holed_disk(int g);  // boundary colored 0, gleam 0
};

using Coloring = std::vector<int>;

// All admissible colorings with colors <= max_color; throws BoundExhaustion
// naming a region if some coloring reaches the cap (the finiteness proxy for
// collapsibility fails).
std::vector<Coloring> enumerate_colorings(const Shadow& x, int max_color);

// The evaluation <X>_xi over Q(A).
RationalFunc eval_coloring(const Shadow& x, const Coloring& xi);

// Visits the q-admissible colorings at level r (used by the root-of-unity
// evaluation).
void for_each_q_coloring(const Shadow& x, int r,
                         const std::function<void(const Coloring&)>& emit);

// Sum of <X>_xi over all admissible colorings (cap from global_config).
RationalFunc shadow_eval_q(const Shadow& x);

struct OddSurface {
  int chi = 0;
  std::vector<int> regions;
};
// Regions with odd colors; chi = sum chi(f) - sum chi(e over two-odd edges)
// + #vertices with an odd edge triple.
OddSurface odd_surface(const Shadow& x, const Coloring& xi);

// ord_i <X>_xi >= chi(S_xi) - r/2 with r the red boundary vertices.
bool order_theorem_check(const Shadow& x, const Coloring& xi);

struct IntersectionForm {
  linalg::IMatrix h2_basis;                    // rows: integer homology classes
  std::vector<std::vector<Rational>> form;     // Q_X on that basis
  int signature = 0;
};
IntersectionForm intersection_form(const Shadow& x);
int signature(const Shadow& x);

// Identify a disk inside region_x with a disk inside region_y, the new disk
// taking the given gleam and the remainders gl - k.
Shadow connected_sum(const Shadow& x, const Shadow& y, int region_x, int region_y,
                     std::int64_t attach_gleam);
// kind 0 or +-1: connected sum with the sphere of that gleam.
Shadow bubble_move(const Shadow& x, int region, int kind);

// The shadow X_s of a splitting: the g-holed disk with an annulus glued
// along every loop, gleams 0, annuli colored 1, outer boundaries colored 0.
Shadow make_xs_shadow(const diagram::Splitting& sp);

}  // namespace shadow
}  // namespace skeinlab
