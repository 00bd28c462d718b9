#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "llt/poly.hpp"
#include "llt/shapes.hpp"

namespace llt {

// Subset of the k colors on one edge; bit i-1 = color i.
using ColorMask = std::uint32_t;

struct Face {
  ColorMask I = 0;  // bottom
  ColorMask J = 0;  // left
  ColorMask K = 0;  // top
  ColorMask L = 0;  // right
};

// One full path configuration on the n x (s-r+1) grid.  Row 0 is the bottom
// row (variable x1).  Edges are stored once and shared between faces:
//   v_edges[r][c], r in 0..rows: the horizontal edge below row r at column c
//     (v_edges[0] = gamma boundary, v_edges[rows] = beta boundary);
//   h_edges[r][c], c in 0..cols: the vertical edge left of column c in row r
//     (h_edges[r][0] and h_edges[r][cols] are always empty).
struct LatticeConfig {
  int k = 0;
  int rows = 0, cols = 0;
  int col_offset = 0;  // content label of column c is col_offset + c
  std::vector<std::vector<ColorMask>> v_edges;
  std::vector<std::vector<ColorMask>> h_edges;

  Face face(int r, int c) const {
    return Face{v_edges[r][c], h_edges[r][c], v_edges[r + 1][c], h_edges[r][c + 1]};
  }
  ColorMask bottom(int c) const { return v_edges[0][c]; }
  ColorMask top(int c) const { return v_edges[rows][c]; }

  bool operator==(const LatticeConfig&) const = default;
};

// mu(i) for a list of partitions: bit j-1 set iff i = mu^(j)_m - m + 1 for
// some m.
ColorMask boundary_vector(const std::vector<Partition>& partitions, int i);

// Column content range (r, s): r = min{i : gamma(i) != 0},
// s = max{i : beta(i) != 0}.
std::pair<int, int> column_range(const ShapeTuple& tuple);

// Validity of a single face: conservation I+J = K+L with no color entering
// twice.
bool face_valid(const Face& f);

// x^{|L|} * prod_{i in L} t^{#{colors j > i present in the face}}, with x the
// given variable (1-based) of the alphabet of size n.
Polynomial face_weight(const Face& f, int k, int var_index, int n);

// t-exponent contributed by one face (the x part is |L| on the face's row).
long face_t_exponent(const Face& f);

void for_each_config(const ShapeTuple& tuple, int n,
                     const std::function<void(const LatticeConfig&)>& fn);

std::vector<LatticeConfig> enumerate_configs(const ShapeTuple& tuple, int n);

long config_count(const ShapeTuple& tuple, int n);

// Whole-configuration weight as a monomial.
Monomial config_weight(const LatticeConfig& cfg);

// Z, the partition function: sum of config weights.  Equals llt_poly.
Polynomial partition_function(const ShapeTuple& tuple, int n, int workers = 1);

// Re-checks all config invariants from scratch (boundaries against the
// tuple, face validity, per-color decomposition into up-right paths).
bool config_valid(const LatticeConfig& cfg, const ShapeTuple& tuple);

}  // namespace llt
