#pragma once

#include <map>
#include <optional>
#include <vector>

#include "llt/poly.hpp"
#include "llt/shapes.hpp"
#include "llt/swap.hpp"

namespace llt {

struct MatchingClass {
  Matching matching;  // shared uncolored key (cyclic positions)
  Polynomial g;       // sum of weights of the configurations inducing it
};

// Entries are pure t-exponents; absent where a matching is not realized.
struct TransferMatrix {
  std::vector<Matching> order;                            // column key
  std::vector<std::vector<std::optional<long>>> entries;  // [tuple][matching]
};

// Partition of the configuration set by induced matching; the g's sum to the
// full LLT polynomial.
std::vector<MatchingClass> group_by_matching(const ShapeTuple& tuple, int n);

// All non-crossing matchings of `num_beads` points on one row, in the
// inductive triple order used for the Catalan family.  Arcs are position
// pairs, position 0 leftmost.
std::vector<Matching> canonical_matchings(int num_beads);

// Canonical coloring of a single-row matching: each arc's left endpoint red,
// right endpoint blue.  Returned as a color per position.
std::vector<ColorMask> canonical_coloring(const Matching& m, int num_beads);

// Transfer matrix of a family sharing one bead geometry (same positions and
// labels, colors differ).  Columns follow `order`; when order is empty the
// single-row canonical order is used.  Verifies the exact reconstruction
// L_i = sum_j t^{w_ij} g_j against group_by_matching.
TransferMatrix transfer_matrix(const std::vector<ShapeTuple>& family, int n,
                               std::vector<Matching> order = {});

// g polynomials of the family from the matrix alone, by forward substitution
// (requires unit diagonal, lower triangular support).
std::vector<Polynomial> solve_g(const TransferMatrix& matrix,
                                const std::vector<Polynomial>& llts);

// Exchange relation for a pair of one-row shapes with interleaved ends
// (g1 < g2 <= b1 < b2):
// L_{(b1/g1, b2/g2)} == L_{(b2/g2, b1/g1)} + (t^{-1} - 1) L_{(b2/g1, b1/g2)}.
bool single_row_exchange_check(int gamma1, int gamma2, int beta1, int beta2, int n);

// L_{((3,2),(2))} == t^{-1} L_{((3,3),(1))} + t L_{((2,2),(3))}.
bool small_relation_check(int n);

// The binom(2n, n) tuples built from 2n strictly decreasing values: each
// n-subset keeps its sorted order and the m-th chosen value v becomes part
// v - n + m.
std::vector<ShapeTuple> catalan_family(const std::vector<int>& values);

// The family member whose bead coloring equals `colors` (per position, left
// to right).
ShapeTuple catalan_member(const std::vector<int>& values, const std::vector<ColorMask>& colors);

struct ColoredBead {
  ColorMask color;
  int label;
  bool operator==(const ColoredBead&) const = default;
};

// Merge beta1 + delta_n and beta2 + delta_n in decreasing order, cancelling
// equal pairs; emitted left to right (ascending part) with path-count labels,
// matching bead_sequence's top row (or, applied to the inners, its bottom
// row).
std::vector<ColoredBead> sorted_bead_row(const Partition& beta1, const Partition& beta2);

}  // namespace llt
