#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "llt/lattice.hpp"
#include "llt/poly.hpp"
#include "llt/relations.hpp"
#include "llt/shapes.hpp"
#include "llt/swap.hpp"

namespace llt {

using json = nlohmann::json;

// {"n": int, "terms": [{"t": int, "x": [int,...], "c": int}, ...]} in
// canonical order; coefficients wider than 64 bits are carried as decimal
// strings.
json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const json& j);

// {"shapes": [{"outer": [...], "inner": [...]}, ...]}; inner defaults to
// zeros.
json tuple_to_json(const ShapeTuple& t);
ShapeTuple tuple_from_json(const json& j);
// accepts either the object above or a bare shape array
ShapeTuple tuple_from_json_value(const json& j);

json config_to_json(const LatticeConfig& cfg);

json beads_to_json(const BeadSequence& b);
json matching_to_json(const BeadSequence& beads, const Matching& m);
json walk_to_json(const Walk& w);

json matrix_to_json(const TransferMatrix& m);

json parse_json(const std::string& text);  // throws schema_error

}  // namespace llt
