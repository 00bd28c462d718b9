#pragma once

#include <string>
#include <vector>

#include "llt/lattice.hpp"
#include "llt/poly.hpp"
#include "llt/swap.hpp"

namespace llt {

// Human-oriented rendering: terms grouped by x-monomial with a parenthesized
// t-polynomial coefficient, canonical order, e.g.
// "t*x1^2 + t*x2^2 + (1 + t)*x1*x2".
std::string render_poly_grouped(const Polynomial& p);

// Lattice-path diagram, blue drawn left of red within each column; optional
// bold overlay of walks.
std::string config_to_svg(const LatticeConfig& cfg, const std::vector<Walk>& overlay = {});
std::string config_to_tikz(const LatticeConfig& cfg, const std::vector<Walk>& overlay = {});

// Two dashed bead rows with labels and matching arcs.
std::string beads_to_svg(const BeadSequence& beads, const Matching* matching = nullptr);
std::string beads_to_tikz(const BeadSequence& beads, const Matching* matching = nullptr);

}  // namespace llt
