#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sketchsynth/types.hpp"

namespace synth {

// One DSL primitive. Applied primitives (HEAD, MAP, ...) form interior tree
// nodes with one child per signature argument. Lambdas (INC, isPOS, ADD, ...)
// are leaves whose node type is their full function signature; they only ever
// appear as arguments of higher-order primitives.
struct Primitive {
  std::string name;
  Ty signature;  // always a Func type
  bool is_lambda;
  int index;  // position in the catalog

  size_t arity() const { return is_lambda ? 0 : signature.args().size(); }
  // Type this production yields when chosen at a hole.
  const Ty& production_type() const {
    return is_lambda ? signature : signature.ret();
  }
};

class Catalog {
 public:
  explicit Catalog(std::vector<Primitive> prims);

  const Primitive* find(std::string_view name) const;
  const Primitive& at(size_t idx) const { return prims_.at(idx); }
  size_t size() const { return prims_.size(); }
  const std::vector<Primitive>& primitives() const { return prims_; }

  // The 34-primitive integer-list catalog used throughout this project.
  static const Catalog& list_ops();

 private:
  std::vector<Primitive> prims_;
};

// Production-token numbering shared by the grammar, the enumerator and the
// neural vocabularies: catalog primitives come first, then input variables,
// then the hole marker.
constexpr int kMaxInputs = 2;

inline int input_token(int input_index) { return 34 + input_index; }
inline int hole_token() { return 34 + kMaxInputs; }
inline int production_vocab_size() { return 34 + kMaxInputs; }
inline bool is_input_token(int tok) { return tok >= 34 && tok < 34 + kMaxInputs; }

std::string production_name(int token, const Catalog& catalog);

// Lambda semantics, used by the interpreter when higher-order primitives
// apply their function arguments. Unary lambdas ignore `b`.
Value apply_lambda(const Primitive& lambda, int64_t a, int64_t b = 0);

}  // namespace synth
