#pragma once

#include <stdexcept>
#include <string>

namespace llt {

// Malformed external input (JSON schema, unreadable file).
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation called outside its contract (alphabet mismatch, bad index, ...).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked identity or internal invariant was falsified; the message
// carries the counterexample.
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check_invariant(bool ok, const std::string& counterexample) {
  if (!ok) throw invariant_error(counterexample);
}

}  // namespace llt
