#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {
namespace diagram {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A dart is a (vertex, port) pair; vertex v's darts are numbered 4v+p so
// crossings (ports 0..3) and markers (ports 0..1) share one id space.
struct Dart {
  int vertex = -1;
  int port = -1;
  bool operator==(const Dart& o) const { return vertex == o.vertex && port == o.port; }
};

enum class VertexKind { Crossing, Marker };

struct Config {
  int state_cap = 24;       // SKEINLAB_STATE_CAP
  int color_cap = 64;       // SKEINLAB_COLOR_CAP
  bool parallel = true;     // OpenMP over Kauffman states
};

Config& global_config();

// A link diagram in the disk with g holes, encoded as a ribbon graph on the
// sphere plus an assignment of hole indices to faces. Ports at a crossing are
// counterclockwise, with 0 and 2 the overstrand. Free loops are carried by
// 2-port markers. Components that are disconnected as a graph need
// face_merges entries tying their local face sets into the sphere's true
// faces (one merge per extra component).
class Diagram {
 public:
  int genus = 0;
  std::vector<VertexKind> vertices;
  std::vector<std::pair<Dart, Dart>> edges;
  std::vector<int> holes;                       // holes[h] = face index, h = 0..genus
  std::vector<std::pair<int, int>> face_merges; // pairs of orbit-face indices

  int crossing_count() const;
  int valence(int v) const { return vertices[static_cast<size_t>(v)] == VertexKind::Crossing ? 4 : 2; }

  // Validates and caches the combinatorial structure; throws ValidationError.
  void prepare() const;

  // Derived structure (valid after prepare()).
  int face_count() const;                       // true (merged) faces
  int face_of_corner(int v, int p) const;       // sector between ports p, p+1
  int face_class_of_orbit_dart(int dart) const; // true face of the orbit holding this dart
  int alpha(int dart) const;                    // edge mate of a dart (id = 4v+p)
  const std::vector<int>& component_of_vertex() const;
  int component_count() const;

  std::string to_json() const;
  static Diagram from_json(const std::string& text);

 private:
  void build() const;
  mutable bool built_ = false;
  mutable std::vector<int> alpha_;
  mutable std::vector<int> orbit_face_of_dart_;   // indexed by 4v+p
  mutable std::vector<int> class_of_orbit_;
  mutable int n_classes_ = 0;
  mutable std::vector<int> comp_of_vertex_;
  mutable int n_components_ = 0;
};

// s(i) in {+1,-1} per crossing, bit i of mask set meaning +1.
using StateMask = std::uint64_t;

struct Loop {
  bool trivial = false;
  int side_faces[2] = {-1, -1};  // splitting-face ids on the two sides
};

struct SplitFace {
  int chi = 0;              // 2 - boundary circles - holes
  int n_loops = 0;          // adjacent loops (boundary circles)
  std::vector<int> holes;   // hole indices contained
};

// The multicurve after resolving all crossings under a state.
struct Splitting {
  std::vector<Loop> loops;
  std::vector<SplitFace> faces;
  int sD = 0;                // homotopically trivial loops
  int p = 0;                 // non-trivial loops
  std::vector<int> p_i;      // loops parallel to boundary component i (0..g)
  int genus = 0;
};

Splitting resolve(const Diagram& d, StateMask s);

// Splitting with the trivial loops removed and their faces merged.
Splitting strip_trivial(const Splitting& sp);

// Sum over admissible colorings of prod circle(color)^chi over the faces;
// hole-touching faces are colored 0 and colors across each loop differ by 1.
// Equals (-A^2-A^-2)^sD <D_s>.
RationalFunc splitting_bracket(const Splitting& sp);

// Kauffman bracket, normalized so a trivial loop evaluates to -A^2 - A^-2.
RationalFunc bracket(const Diagram& d);
RationalFunc bracket_reference(const Diagram& d);  // serial kernel, kept for tests

// (-A^3)^{-w} <D> / (-A^2-A^-2) for knot diagrams in the disk: the Jones
// polynomial in the Kauffman variable.
RationalFunc jones_kauffman(const Diagram& d);

// Parity of intersections with a dual path from hole i's face to the outer
// face, for i = 1..g. All zero iff the link is Z2-homologically trivial.
std::vector<int> z2_class(const Diagram& d);
bool z2_trivial(const Diagram& d);

// Sum of chi(R) * xi0(R) over the regions of the stripped splitting, with
// xi0 the unique admissible 0/1 coloring. Throws if the diagram is not
// Z2-homologically trivial. Equals ord_infty<D_s>/2.
std::int64_t psi(const Diagram& d, StateMask s);

struct Adequacy {
  bool plus = false;
  bool minus = false;
};
Adequacy adequacy(const Diagram& d);

bool alternating(const Diagram& d);
bool connected(const Diagram& d);
bool simple(const Diagram& d);

// Minimal number of holes of a sub-disk of S_(g) containing the diagram.
int reduced_genus(const Diagram& d);

// Crossings adjacent to two distinct hole-touching regions (the count k in
// the breadth formula 4n + 4 - 4g - 4k).
int external_crossing_count(const Diagram& d);

struct TaitReport {
  bool preconditions_ok = false;
  std::string skipped_reason;
  std::int64_t breadth = 0;
  int n = 0;
  int g = 0;
  int k = 0;
  bool formula_ok = false;       // B == 4n + 4 - 4g - 4k
  std::int64_t upper_bound = 0;  // 2(n + s+D + s-D + psi(s+) + psi(s-))
  bool bound_ok = false;         // B <= upper_bound
};
TaitReport tait_breadth_check(const Diagram& d);

// Winding number of every component about the hole must vanish (g = 1 only).
bool homotopy_trivial_g1(const Diagram& d);

// Writhe and linking data for diagrams in the disk (g = 0), with components
// canonically oriented from their least dart.
int writhe(const Diagram& d);
struct LinkingMatrix {
  std::vector<std::vector<Rational>> m;  // lk off-diagonal, writhe diagonal
  int signature = 0;
};
LinkingMatrix linking_matrix(const Diagram& d);

// Swap all over/underpasses.
Diagram mirror_diagram(const Diagram& d);

// Swap the over/underpass at one crossing.
Diagram switch_crossing(const Diagram& d, int vertex);

// Winding number of each component about hole 1 (g = 1 diagrams).
std::vector<std::int64_t> windings_g1(const Diagram& d);

// Rebuilds face_merges and holes of a surgered copy nd of d. The old
// vertices of nd must keep their indices and ports, and the surgery must be
// local to edges so that every old corner keeps its region.
void remap_regions(const Diagram& d, Diagram& nd);

}  // namespace diagram
}  // namespace skeinlab
