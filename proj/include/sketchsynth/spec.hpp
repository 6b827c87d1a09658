#pragma once

#include <vector>

#include "sketchsynth/eval.hpp"
#include "sketchsynth/term.hpp"

namespace synth {

struct IoExample {
  std::vector<Value> inputs;
  Value output;
};

// A task description: input-output examples over one input signature.
// Validated on construction: at least one example, inputs conform to the
// signature, outputs are non-Fail and share one base type.
class Spec {
 public:
  Spec(InputSignature signature, std::vector<IoExample> examples);

  const InputSignature& signature() const { return signature_; }
  const std::vector<IoExample>& examples() const { return examples_; }
  size_t example_count() const { return examples_.size(); }
  // Common type of the outputs; the root type synthesis searches for.
  const Ty& output_type() const { return output_type_; }

 private:
  InputSignature signature_;
  std::vector<IoExample> examples_;
  Ty output_type_;
};

// True iff the program reproduces every example exactly. Fail results never
// match.
bool check_spec(const TermPtr& program, const Spec& spec);

}  // namespace synth
