#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "skeinlab/diagram.hpp"

namespace skeinlab {
namespace diagram {
namespace gen {

// Morse-word construction of diagrams in the disk: a word of elementary
// events acting on a left-to-right list of open strand ends.
//   Cup{i}        insert a min at position i (two new ends)
//   Cap{i}        join the adjacent ends i, i+1 with a max
//   Cross{i, s}   crossing of strands i, i+1; s = +1 when the strand moving
//                 right passes over
struct Event {
  enum Kind { Cup, Cap, Cross } kind;
  int pos = 0;
  int sign = +1;
};

// Builds the diagram described by the word with genus 0 and hole 0 on face
// 0. Throws ValidationError if the word leaves open ends or the picture is
// disconnected.
Diagram from_word(const std::vector<Event>& word);

// Same picture with the given genus and explicit hole placements (one face
// index per hole 0..g).
Diagram from_word_with_holes(const std::vector<Event>& word, int genus,
                             const std::vector<int>& hole_faces);

// Annular closure of a braid word on k strands: letters +-i for the
// elementary crossing of strands i, i+1 (1-based; positive = right-moving
// strand over). With around_hole the braid axis carries hole 1 (genus 1),
// otherwise the closure lives in the disk. The letters must connect all
// strands.
Diagram braid_closure(int strands, const std::vector<int>& word, bool around_hole);

// The pure-braid wrap of the top strand around all others (the strand slides
// over the non-separating sphere): closure(w) and closure(w + wrap) are the
// same link in S^1 x S^2.
std::vector<int> wrap_word(int strands, int sign);

// Random connected diagram with the requested genus and crossing count.
Diagram random_diagram(std::mt19937_64& rng, int genus, int crossings);

// Reidemeister I: replace edge edge_index by a kink of the given sign.
Diagram add_r1(const Diagram& d, int edge_index, int sign);

// Reidemeister II: push the edge of dart_a over the edge of dart_b across a
// face flanking both darts (face_class_of_orbit_dart must agree).
Diagram add_r2(const Diagram& d, int dart_a, int dart_b);

}  // namespace gen
}  // namespace diagram
}  // namespace skeinlab
