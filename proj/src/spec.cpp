#include "sketchsynth/spec.hpp"

namespace synth {

Spec::Spec(InputSignature signature, std::vector<IoExample> examples)
    : signature_(std::move(signature)), examples_(std::move(examples)) {
  if (examples_.empty()) throw DslError("spec needs at least one example");
  for (const IoExample& ex : examples_) {
    if (ex.inputs.size() != signature_.size())
      throw DslError("example has " + std::to_string(ex.inputs.size()) +
                     " inputs, signature wants " + std::to_string(signature_.size()));
    for (size_t i = 0; i < ex.inputs.size(); i++)
      if (!ex.inputs[i].conforms(signature_.at(i)))
        throw DslError("example input" + std::to_string(i) +
                       " does not conform to the signature");
    if (ex.output.is_fail()) throw DslError("example outputs must be non-FAIL");
  }
  output_type_ = examples_[0].output.type();
  for (const IoExample& ex : examples_)
    if (ex.output.type() != output_type_)
      throw DslError("example outputs must share one type");
}

bool check_spec(const TermPtr& program, const Spec& spec) {
  for (const IoExample& ex : spec.examples()) {
    Value got = evaluate(program, ex.inputs);
    if (got.is_fail() || got != ex.output) return false;
  }
  return true;
}

}  // namespace synth
