#include "skeinlab/diagram_gen.hpp"

#include <algorithm>

namespace skeinlab {
namespace diagram {
namespace gen {

namespace {

int dart_id(int v, int p) { return 4 * v + p; }

// Dangling strand ends during a Morse build. An end either already carries
// the dart it is wired to below, or is one side of a pending cup wire.
struct EndPool {
  struct End {
    int dart = -1;
    int partner = -1;
  };
  std::vector<End> ends;
  Diagram* d = nullptr;

  int fresh() {
    ends.push_back({});
    return static_cast<int>(ends.size()) - 1;
  }
  void edge(int dart_a, int dart_b) {
    d->edges.push_back({{dart_a / 4, dart_a % 4}, {dart_b / 4, dart_b % 4}});
  }
  void attach(int e, int dd) {
    if (ends[static_cast<size_t>(e)].partner < 0) {
      edge(ends[static_cast<size_t>(e)].dart, dd);
    } else {
      int p = ends[static_cast<size_t>(e)].partner;
      ends[static_cast<size_t>(p)].dart = dd;
      ends[static_cast<size_t>(p)].partner = -1;
    }
  }
  void cap(int a, int b) {
    auto &ea = ends[static_cast<size_t>(a)], &eb = ends[static_cast<size_t>(b)];
    if (ea.partner == b) {
      // a bare circle, carried by a marker
      int m = static_cast<int>(d->vertices.size());
      d->vertices.push_back(VertexKind::Marker);
      edge(dart_id(m, 0), dart_id(m, 1));
      return;
    }
    if (ea.partner < 0) {
      attach(b, ea.dart);
    } else if (eb.partner < 0) {
      attach(a, eb.dart);
    } else {
      ends[static_cast<size_t>(ea.partner)].partner = eb.partner;
      ends[static_cast<size_t>(eb.partner)].partner = ea.partner;
    }
  }
};

struct CrossingPorts {
  int in_left, in_right, out_left, out_right;
};

// Counterclockwise ports with the overstrand on 0-2; the positive layout is
// the one whose trace closure carries writhe +1 per letter.
CrossingPorts ports_for_sign(int sign) {
  if (sign > 0) return {3, 0, 2, 1};  // 0=SE 1=NE 2=NW 3=SW
  return {0, 1, 3, 2};                // 0=SW 1=SE 2=NE 3=NW
}

}  // namespace

Diagram from_word_with_holes(const std::vector<Event>& word, int genus,
                             const std::vector<int>& hole_faces) {
  Diagram d;
  d.genus = genus;
  EndPool pool;
  pool.d = &d;
  std::vector<int> boundary;  // end ids, left to right

  for (const Event& ev : word) {
    const int w = static_cast<int>(boundary.size());
    switch (ev.kind) {
      case Event::Cup: {
        if (ev.pos < 0 || ev.pos > w) throw ValidationError("cup position out of range");
        int e1 = pool.fresh(), e2 = pool.fresh();
        pool.ends[static_cast<size_t>(e1)].partner = e2;
        pool.ends[static_cast<size_t>(e2)].partner = e1;
        boundary.insert(boundary.begin() + ev.pos, {e1, e2});
        break;
      }
      case Event::Cap: {
        if (ev.pos < 0 || ev.pos + 1 >= w) throw ValidationError("cap position out of range");
        pool.cap(boundary[static_cast<size_t>(ev.pos)], boundary[static_cast<size_t>(ev.pos) + 1]);
        boundary.erase(boundary.begin() + ev.pos, boundary.begin() + ev.pos + 2);
        break;
      }
      case Event::Cross: {
        if (ev.pos < 0 || ev.pos + 1 >= w) throw ValidationError("crossing position out of range");
        int c = static_cast<int>(d.vertices.size());
        d.vertices.push_back(VertexKind::Crossing);
        CrossingPorts pp = ports_for_sign(ev.sign);
        pool.attach(boundary[static_cast<size_t>(ev.pos)], dart_id(c, pp.in_left));
        pool.attach(boundary[static_cast<size_t>(ev.pos) + 1], dart_id(c, pp.in_right));
        int l = pool.fresh(), r = pool.fresh();
        pool.ends[static_cast<size_t>(l)].dart = dart_id(c, pp.out_left);
        pool.ends[static_cast<size_t>(r)].dart = dart_id(c, pp.out_right);
        boundary[static_cast<size_t>(ev.pos)] = l;
        boundary[static_cast<size_t>(ev.pos) + 1] = r;
        break;
      }
    }
  }
  if (!boundary.empty()) throw ValidationError("word leaves open strand ends");
  d.holes = hole_faces;
  d.prepare();
  return d;
}

Diagram from_word(const std::vector<Event>& word) {
  return from_word_with_holes(word, 0, {0});
}

std::vector<int> wrap_word(int strands, int sign) {
  std::vector<int> w;
  for (int i = strands - 1; i >= 1; --i) w.push_back(-sign * i);
  for (int i = 1; i <= strands - 1; ++i) w.push_back(-sign * i);
  return w;
}

Diagram braid_closure(int strands, const std::vector<int>& word, bool around_hole) {
  if (strands < 1) throw ValidationError("braid needs at least one strand");
  Diagram d;
  d.genus = around_hole ? 1 : 0;

  if (strands == 1) {
    // closure of the trivial 1-braid: one circle
    if (!word.empty()) throw ValidationError("braid letter out of range");
    d.vertices.push_back(VertexKind::Marker);
    d.edges.push_back({{0, 0}, {0, 1}});
    d.holes = around_hole ? std::vector<int>{0, 1} : std::vector<int>{0};
    d.prepare();
    return d;
  }

  EndPool pool;
  pool.d = &d;
  std::vector<int> bottoms, current;
  for (int j = 0; j < strands; ++j) {
    int e1 = pool.fresh(), e2 = pool.fresh();
    pool.ends[static_cast<size_t>(e1)].partner = e2;
    pool.ends[static_cast<size_t>(e2)].partner = e1;
    bottoms.push_back(e1);
    current.push_back(e2);
  }
  int first_left = -1, first_left_sign = 0;    // first crossing of strands 1,2
  int first_right = -1, first_right_sign = 0;  // first crossing of strands k-1,k
  for (int letter : word) {
    int i = std::abs(letter);
    if (i < 1 || i > strands - 1) throw ValidationError("braid letter out of range");
    int sign = letter > 0 ? +1 : -1;
    int c = static_cast<int>(d.vertices.size());
    d.vertices.push_back(VertexKind::Crossing);
    CrossingPorts pp = ports_for_sign(sign);
    pool.attach(current[static_cast<size_t>(i - 1)], dart_id(c, pp.in_left));
    pool.attach(current[static_cast<size_t>(i)], dart_id(c, pp.in_right));
    int l = pool.fresh(), r = pool.fresh();
    pool.ends[static_cast<size_t>(l)].dart = dart_id(c, pp.out_left);
    pool.ends[static_cast<size_t>(r)].dart = dart_id(c, pp.out_right);
    current[static_cast<size_t>(i - 1)] = l;
    current[static_cast<size_t>(i)] = r;
    if (i == 1 && first_left < 0) {
      first_left = c;
      first_left_sign = sign;
    }
    if (i == strands - 1 && first_right < 0) {
      first_right = c;
      first_right_sign = sign;
    }
  }
  for (int j = 0; j < strands; ++j)
    pool.cap(current[static_cast<size_t>(j)], bottoms[static_cast<size_t>(j)]);

  if (first_left < 0 || first_right < 0)
    throw ValidationError("braid word does not reach the side strands");
  // Probe the face structure with dummy holes, then place the real ones:
  // the braid axis is in the west sector of the first crossing on the left
  // edge, the outer region in the east sector on the right edge.
  Diagram probe = d;
  probe.genus = 0;
  probe.holes = {0};
  probe.prepare();
  int axis = probe.face_of_corner(first_left, first_left_sign > 0 ? 2 : 3);
  int outer = probe.face_of_corner(first_right, first_right_sign > 0 ? 0 : 1);
  d.holes.assign(static_cast<size_t>(d.genus + 1), outer);
  if (around_hole) d.holes[1] = axis;
  d.prepare();
  return d;
}

Diagram random_diagram(std::mt19937_64& rng, int genus, int crossings) {
  for (int attempt = 0; attempt < 5000; ++attempt) {
    std::vector<Event> word;
    int width = 0, placed = 0, guard = 0;
    while ((placed < crossings || width > 0) && ++guard < 500) {
      std::uniform_int_distribution<int> roll(0, 99);
      int r = roll(rng);
      if (width < 2) {
        std::uniform_int_distribution<int> pos(0, width);
        word.push_back({Event::Cup, pos(rng), +1});
        width += 2;
        continue;
      }
      if (placed < crossings && r < 55) {
        std::uniform_int_distribution<int> pos(0, width - 2);
        std::uniform_int_distribution<int> sgn(0, 1);
        word.push_back({Event::Cross, pos(rng), sgn(rng) ? +1 : -1});
        ++placed;
      } else if (r < 75 && width < 8 && placed < crossings) {
        std::uniform_int_distribution<int> pos(0, width);
        word.push_back({Event::Cup, pos(rng), +1});
        width += 2;
      } else {
        std::uniform_int_distribution<int> pos(0, width - 2);
        word.push_back({Event::Cap, pos(rng), +1});
        width -= 2;
      }
    }
    if (width != 0 || placed != crossings) continue;
    try {
      Diagram flat = from_word(word);
      if (flat.component_count() != 1 && crossings > 0) continue;
      std::uniform_int_distribution<int> face(0, flat.face_count() - 1);
      std::vector<int> hs;
      for (int h = 0; h <= genus; ++h) hs.push_back(face(rng));
      return from_word_with_holes(word, genus, hs);
    } catch (const ValidationError&) {
      continue;
    }
  }
  throw std::runtime_error("random_diagram failed to converge");
}

Diagram add_r1(const Diagram& d, int edge_index, int sign) {
  d.prepare();
  Diagram nd;
  nd.genus = d.genus;
  nd.vertices = d.vertices;
  int c = static_cast<int>(nd.vertices.size());
  nd.vertices.push_back(VertexKind::Crossing);
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    if (e == edge_index) continue;
    nd.edges.push_back(d.edges[static_cast<size_t>(e)]);
  }
  auto [da, db] = d.edges[static_cast<size_t>(edge_index)];
  if (sign > 0) {
    nd.edges.push_back({da, {c, 2}});
    nd.edges.push_back({{c, 3}, db});
    nd.edges.push_back({{c, 0}, {c, 1}});
  } else {
    nd.edges.push_back({da, {c, 3}});
    nd.edges.push_back({{c, 0}, db});
    nd.edges.push_back({{c, 1}, {c, 2}});
  }
  remap_regions(d, nd);
  return nd;
}

Diagram add_r2(const Diagram& d, int dart_a, int dart_b) {
  d.prepare();
  if (d.face_class_of_orbit_dart(dart_a) != d.face_class_of_orbit_dart(dart_b))
    throw std::invalid_argument("add_r2: darts do not flank a common face");
  int ea = -1, eb = -1;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    const auto& [x, y] = d.edges[static_cast<size_t>(e)];
    for (const Dart& z : {x, y}) {
      int dd = dart_id(z.vertex, z.port);
      if (dd == dart_a) ea = e;
      if (dd == dart_b) eb = e;
    }
  }
  if (ea < 0 || eb < 0 || ea == eb) throw std::invalid_argument("add_r2: bad darts");

  Dart a1{dart_a / 4, dart_a % 4};
  Dart a2{d.alpha(dart_a) / 4, d.alpha(dart_a) % 4};
  Dart b1{dart_b / 4, dart_b % 4};
  Dart b2{d.alpha(dart_b) / 4, d.alpha(dart_b) % 4};

  // Try both relative orientations of strand b; the sphere condition keeps
  // only the planar one.
  for (int flip = 0; flip < 2; ++flip) {
    Diagram nd;
    nd.genus = d.genus;
    nd.vertices = d.vertices;
    int c1 = static_cast<int>(nd.vertices.size());
    nd.vertices.push_back(VertexKind::Crossing);
    int c2 = c1 + 1;
    nd.vertices.push_back(VertexKind::Crossing);
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
      if (e == ea || e == eb) continue;
      nd.edges.push_back(d.edges[static_cast<size_t>(e)]);
    }
    Dart bb1 = flip ? b2 : b1, bb2 = flip ? b1 : b2;
    // strand a passes over both crossings through the north-south line
    nd.edges.push_back({a1, {c1, 2}});
    nd.edges.push_back({{c1, 0}, {c2, 0}});
    nd.edges.push_back({{c2, 2}, a2});
    // strand b runs west-east underneath
    nd.edges.push_back({bb1, {c1, 3}});
    nd.edges.push_back({{c1, 1}, {c2, 3}});
    nd.edges.push_back({{c2, 1}, bb2});
    try {
      remap_regions(d, nd);
      return nd;
    } catch (const ValidationError&) {
      continue;
    }
  }
  throw std::invalid_argument("add_r2: no planar completion found");
}

}  // namespace gen
}  // namespace diagram
}  // namespace skeinlab
