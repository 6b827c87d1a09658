#pragma once

#include <vector>

#include "sketchsynth/term.hpp"

namespace synth {

// Run a hole-free program on one input tuple. Pure and deterministic.
// Partial-function violations (empty-list head, out-of-range access,
// arithmetic overflow past int64) yield Value::fail, which absorbs upward;
// only structural misuse (holes, type-mismatched inputs) throws.
Value evaluate(const TermPtr& program, const std::vector<Value>& inputs);

// Ordered outputs of `program` on each probe tuple; Fail entries allowed.
// Two programs with equal signatures on a probe set are treated as
// behaviorally equivalent for deduplication.
std::vector<Value> behavioral_signature(
    const TermPtr& program, const std::vector<std::vector<Value>>& probe_inputs);

}  // namespace synth
