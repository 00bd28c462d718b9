#pragma once

#include <functional>
#include <string>
#include <vector>

#include "llt/shapes.hpp"

namespace llt {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample or summary
};

// The desk corpus: all tuples with k in {1,2}, part counts <= 2, parts <= 3,
// valid skew pairs.
std::vector<ShapeTuple> desk_corpus();

// Named check suites (corpora): "desk" (oracle equivalence), "identities"
// (running example, small relation, matrix reproduction, row exchange),
// "swap" (bijection, weight law, walk statistics), "beads" (classification),
// "catalan" (family decomposition), "symmetry" (symmetric + inv-coinv),
// "all".
std::vector<CheckResult> run_corpus(const std::string& name, int workers = 1,
                                    const std::function<void(const CheckResult&)>& report = {});

}  // namespace llt
