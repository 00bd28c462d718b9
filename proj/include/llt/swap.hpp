#pragma once

#include <array>
#include <optional>
#include <vector>

#include "llt/lattice.hpp"
#include "llt/poly.hpp"
#include "llt/shapes.hpp"

namespace llt {

// The two-color machinery: shape 1 is blue (color 1), shape 2 is red
// (color 2).
inline constexpr ColorMask kBlue = 1;
inline constexpr ColorMask kRed = 2;

enum class BoundarySide { top, bottom };

struct BoundaryBead {
  BoundarySide boundary = BoundarySide::top;
  int column = 0;   // 0-based grid column
  int content = 0;  // content label of that column
  ColorMask color = kBlue;
  int label = 0;  // paths strictly to the right on the same boundary, both colors

  bool operator==(const BoundaryBead&) const = default;
};

struct BeadSequence {
  std::vector<BoundaryBead> top;     // left to right
  std::vector<BoundaryBead> bottom;  // left to right

  int size() const { return static_cast<int>(top.size() + bottom.size()); }
  // Cyclic position: top left-to-right, then bottom right-to-left.
  const BoundaryBead& at(int pos) const;
  bool operator==(const BeadSequence&) const = default;
};

// Arcs as pairs of cyclic positions (a < b).  Same-row arcs join different
// colors, cross-row arcs equal colors; chords are pairwise non-crossing in
// the disk.
struct Matching {
  std::vector<std::pair<int, int>> arcs;  // sorted

  bool operator==(const Matching&) const = default;
  bool operator<(const Matching& o) const { return arcs < o.arcs; }
};

// One edge of the grid: vertical-step edge (kind V, index r in 0..rows) or
// horizontal-step edge (kind H, r in 0..rows-1, c in 0..cols).
struct EdgeRef {
  enum Kind { V, H } kind;
  int r, c;
  bool operator==(const EdgeRef&) const = default;
};

// Switch patterns of the walk rules:
//   1: red down through a top edge  -> blue right
//   2: red left through a right edge -> blue up
//   3: blue right through a left edge -> red down
//   4: blue up through a bottom edge -> red left
struct Walk {
  BoundaryBead start, end;
  std::vector<EdgeRef> edges;          // every traversed edge, in order
  std::vector<ColorMask> edge_colors;  // walk color on each edge
  std::vector<int> switch_seq;         // 1..4
  std::array<long, 4> switch_counts{0, 0, 0, 0};
  int segments = 0;  // switch count + 1
};

// Singleton boundary paths of a configuration's boundary (k = 2 only).
std::vector<BoundaryBead> singletons(const LatticeConfig& cfg);

// Bead rows straight from the tuple's boundary data.
BeadSequence bead_sequence(const ShapeTuple& tuple);
BeadSequence bead_sequence_of_config(const LatticeConfig& cfg);

// The walk from a singleton red top bead or singleton blue bottom bead.
Walk walk_from(const LatticeConfig& cfg, const BoundaryBead& start);

// All walks, launch order: top singleton reds left to right, then bottom
// singleton blues left to right.
std::vector<Walk> all_walks(const LatticeConfig& cfg);

// Color-flip of all traversed segments; boundary becomes
// swap_adjacent(tuple, 1).
LatticeConfig phi(const LatticeConfig& cfg);
LatticeConfig flip_walks(const LatticeConfig& cfg, const std::vector<Walk>& walks);

Matching induced_matching(const LatticeConfig& cfg);
Matching matching_from_walks(const BeadSequence& beads, const std::vector<Walk>& walks);

// t-exponent of one arc per the arc-weight table; throws on a half-integer
// exponent (impossible arc).
long arc_weight(const BeadSequence& beads, const std::pair<int, int>& arc);

long matching_weight(const BeadSequence& beads, const Matching& m);

// t-exponent drop under phi: weight(cfg) = t^result * weight(phi(cfg)).
// Equals the arc-weight sum of the induced matching.
long weight_change(const LatticeConfig& cfg);

// All non-crossing matchings (same-row arcs join different colors, cross-row
// arcs equal colors), deterministic order.
std::vector<Matching> enumerate_noncrossing_matchings(const BeadSequence& beads);

bool has_unique_matching(const BeadSequence& beads);

// Closed-form uniqueness test for bead rows (the classification of
// single-row and two-row sequences).  Agrees with has_unique_matching.
bool classify_unique(const BeadSequence& beads);

// Existence criterion: #red - #blue equal on both rows.
bool matching_exists_criterion(const BeadSequence& beads);

// If the tuple's beads have a unique non-crossing matching, returns its
// arc-weight sum S and checks L_tuple == t^S L_swapped exactly (throws
// invariant_error with the counterexample otherwise).
std::optional<long> swap_equivalence_check(const ShapeTuple& tuple, int n);

// The walk-statistics identities (direction count, path count, corner count,
// forbidden switch adjacency) for one walk.
bool walk_statistics_check(const Walk& walk);

}  // namespace llt
