#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sketchsynth/catalog.hpp"
#include "sketchsynth/types.hpp"

namespace synth {

class Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind { App, Input, Hole };

// Immutable typed program/sketch tree. A term with no Hole nodes is a
// program; any term is a sketch. Subtrees are shared freely across threads.
class Term {
 public:
  // Checked constructors; throw DslError on arity or type violations.
  static TermPtr app(const Primitive& prim, std::vector<TermPtr> children);
  static TermPtr input(int index, const Ty& ty);
  static TermPtr hole(const Ty& ty);

  TermKind kind() const { return kind_; }
  const Ty& ty() const { return ty_; }
  const Primitive& prim() const;
  int input_index() const;
  const std::vector<TermPtr>& children() const { return children_; }

  bool is_hole() const { return kind_ == TermKind::Hole; }
  bool has_holes() const { return hole_count_ > 0; }
  int hole_count() const { return hole_count_; }
  int node_count() const { return node_count_; }
  int depth() const { return depth_; }

  // Production token at this node (catalog index, input token, or hole token).
  int production_token() const;

  bool structurally_equal(const Term& o) const;

 private:
  Term() = default;
  TermKind kind_ = TermKind::Hole;
  Ty ty_;
  const Primitive* prim_ = nullptr;
  int input_index_ = -1;
  std::vector<TermPtr> children_;
  int node_count_ = 1;
  int depth_ = 1;
  int hole_count_ = 0;
};

bool structurally_equal(const TermPtr& a, const TermPtr& b);

// S-expression text format: "(MAXIMUM (MAP DIV3 (DROP input0 input1)))".
// Lambdas, input variables and <HOLE> print bare; applications are
// parenthesized. parse_program(print_program(t)) reconstructs t; a root-level
// bare hole needs `expect` to fix its type.
TermPtr parse_program(const std::string& text, const Catalog& catalog,
                      const InputSignature& inputs,
                      std::optional<Ty> expect = std::nullopt);
std::string print_program(const TermPtr& term);

// Polish (prefix) token serialization without parentheses; arity-known and
// hence unambiguous. Inverse of deserialize_tokens for every valid term.
std::vector<int> serialize_tokens(const TermPtr& sketch);
TermPtr deserialize_tokens(const std::vector<int>& tokens, const Catalog& catalog,
                           const InputSignature& inputs, const Ty& root_ty);

// Incremental left-to-right replay of a Polish token stream against the
// typed grammar. Drives deserialization, the enumerator's candidate encoding
// and the neural syntax mask.
class GrammarCursor {
 public:
  GrammarCursor(Ty root, const Catalog* catalog, const InputSignature* inputs)
      : catalog_(catalog), inputs_(inputs) {
    pending_.push_back(std::move(root));
  }

  bool done() const { return pending_.empty(); }
  size_t pending_count() const { return pending_.size(); }
  // Type required at the next token position.
  const Ty& next_type() const;
  bool accepts(int token) const;
  void consume(int token);  // throws DslError if the token does not fit

 private:
  const Catalog* catalog_;
  const InputSignature* inputs_;
  std::vector<Ty> pending_;  // top = back
};

}  // namespace synth
