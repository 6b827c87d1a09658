#include "sketchsynth/term.hpp"

#include <algorithm>
#include <sstream>

namespace synth {

TermPtr Term::app(const Primitive& prim, std::vector<TermPtr> children) {
  if (children.size() != prim.arity())
    throw DslError("arity mismatch: " + prim.name + " takes " +
                   std::to_string(prim.arity()) + " args, got " +
                   std::to_string(children.size()));
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::App;
  t->prim_ = &prim;
  t->ty_ = prim.production_type();
  if (!prim.is_lambda) {
    const auto& want = prim.signature.args();
    for (size_t i = 0; i < children.size(); i++) {
      if (!children[i]) throw DslError("null child");
      if (children[i]->ty() != want[i])
        throw DslError("type mismatch: arg " + std::to_string(i) + " of " +
                       prim.name + " wants " + want[i].to_string() + ", got " +
                       children[i]->ty().to_string());
    }
  }
  int nodes = 1, depth = 0, holes = 0;
  for (const auto& c : children) {
    nodes += c->node_count_;
    depth = std::max(depth, c->depth_);
    holes += c->hole_count_;
  }
  t->node_count_ = nodes;
  t->depth_ = depth + 1;
  t->hole_count_ = holes;
  t->children_ = std::move(children);
  return t;
}

TermPtr Term::input(int index, const Ty& ty) {
  if (index < 0 || index >= kMaxInputs)
    throw DslError("input index out of range: " + std::to_string(index));
  if (!ty.is_base()) throw DslError("input must have a base type");
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Input;
  t->input_index_ = index;
  t->ty_ = ty;
  return t;
}

TermPtr Term::hole(const Ty& ty) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Hole;
  t->ty_ = ty;
  t->hole_count_ = 1;
  return t;
}

const Primitive& Term::prim() const {
  if (kind_ != TermKind::App) throw DslError("not an application node");
  return *prim_;
}

int Term::input_index() const {
  if (kind_ != TermKind::Input) throw DslError("not an input node");
  return input_index_;
}

int Term::production_token() const {
  switch (kind_) {
    case TermKind::App: return prim_->index;
    case TermKind::Input: return input_token(input_index_);
    case TermKind::Hole: return hole_token();
  }
  return -1;
}

bool Term::structurally_equal(const Term& o) const {
  if (kind_ != o.kind_ || !(ty_ == o.ty_)) return false;
  switch (kind_) {
    case TermKind::Hole: return true;
    case TermKind::Input: return input_index_ == o.input_index_;
    case TermKind::App: {
      if (prim_ != o.prim_ || children_.size() != o.children_.size()) return false;
      for (size_t i = 0; i < children_.size(); i++)
        if (!children_[i]->structurally_equal(*o.children_[i])) return false;
      return true;
    }
  }
  return false;
}

bool structurally_equal(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return a == b;
  return a->structurally_equal(*b);
}

// ---------------------------------------------------------------------------
// S-expression parsing

namespace {

struct SexprToken {
  std::string text;
  int index;  // 0-based position in the token stream
};

std::vector<SexprToken> lex_sexpr(const std::string& text) {
  std::vector<SexprToken> toks;
  int index = 0;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      i++;
      continue;
    }
    if (c == '(' || c == ')') {
      toks.push_back({std::string(1, c), index++});
      i++;
      continue;
    }
    size_t start = i;
    while (i < text.size() && text[i] != '(' && text[i] != ')' &&
           !isspace(static_cast<unsigned char>(text[i])))
      i++;
    toks.push_back({text.substr(start, i - start), index++});
  }
  return toks;
}

std::optional<int> parse_input_name(const std::string& s) {
  if (s.size() <= 5 || s.compare(0, 5, "input") != 0) return std::nullopt;
  int v = 0;
  for (size_t i = 5; i < s.size(); i++) {
    if (!isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    v = v * 10 + (s[i] - '0');
  }
  return v;
}

class SexprParser {
 public:
  SexprParser(std::vector<SexprToken> toks, const Catalog& catalog,
              const InputSignature& inputs)
      : toks_(std::move(toks)), catalog_(catalog), inputs_(inputs) {}

  TermPtr parse_root(std::optional<Ty> expect) {
    if (toks_.empty()) throw ParseError("empty program text", 0);
    TermPtr t = parse_term(expect);
    if (pos_ != toks_.size())
      throw ParseError("trailing tokens after program", toks_[pos_].index);
    return t;
  }

 private:
  const SexprToken& peek() const {
    if (pos_ >= toks_.size())
      throw ParseError("unexpected end of input",
                       toks_.empty() ? 0 : toks_.back().index + 1);
    return toks_[pos_];
  }

  TermPtr parse_term(std::optional<Ty> expect) {
    const SexprToken& tok = peek();
    if (tok.text == ")") throw ParseError("unexpected ')'", tok.index);
    if (tok.text == "(") {
      pos_++;
      const SexprToken& head = peek();
      if (head.text == "(" || head.text == ")")
        throw ParseError("expected primitive name after '('", head.index);
      const Primitive* prim = catalog_.find(head.text);
      if (!prim) throw ParseError("unknown token '" + head.text + "'", head.index);
      if (prim->is_lambda)
        throw ParseError("arity mismatch: " + prim->name + " takes no arguments",
                         head.index);
      int head_index = head.index;
      pos_++;
      std::vector<TermPtr> children;
      const auto& want = prim->signature.args();
      for (size_t i = 0; i < want.size(); i++) {
        if (pos_ < toks_.size() && toks_[pos_].text == ")")
          throw ParseError("arity mismatch: " + prim->name + " takes " +
                               std::to_string(want.size()) + " args",
                           toks_[pos_].index);
        children.push_back(parse_term(want[i]));
      }
      if (pos_ >= toks_.size() || toks_[pos_].text != ")")
        throw ParseError("arity mismatch: " + prim->name + " takes " +
                             std::to_string(want.size()) + " args",
                         pos_ < toks_.size() ? toks_[pos_].index : head_index);
      pos_++;
      TermPtr t = Term::app(*prim, std::move(children));
      check_expect(t, expect, head_index);
      return t;
    }
    // Bare atom: input variable, lambda, or hole.
    pos_++;
    if (tok.text == "<HOLE>") {
      if (!expect)
        throw ParseError("cannot infer the type of a root-level <HOLE>", tok.index);
      return Term::hole(*expect);
    }
    if (auto idx = parse_input_name(tok.text)) {
      if (*idx >= static_cast<int>(inputs_.size()))
        throw ParseError("input index out of range: " + tok.text, tok.index);
      TermPtr t = Term::input(*idx, inputs_.at(*idx));
      check_expect(t, expect, tok.index);
      return t;
    }
    const Primitive* prim = catalog_.find(tok.text);
    if (!prim) throw ParseError("unknown token '" + tok.text + "'", tok.index);
    if (!prim->is_lambda)
      throw ParseError("arity mismatch: " + prim->name + " takes " +
                           std::to_string(prim->arity()) + " args",
                       tok.index);
    TermPtr t = Term::app(*prim, {});
    check_expect(t, expect, tok.index);
    return t;
  }

  void check_expect(const TermPtr& t, const std::optional<Ty>& expect, int index) {
    if (expect && t->ty() != *expect)
      throw ParseError("type mismatch: expected " + expect->to_string() + ", got " +
                           t->ty().to_string(),
                       index);
  }

  std::vector<SexprToken> toks_;
  size_t pos_ = 0;
  const Catalog& catalog_;
  const InputSignature& inputs_;
};

}  // namespace

TermPtr parse_program(const std::string& text, const Catalog& catalog,
                      const InputSignature& inputs, std::optional<Ty> expect) {
  return SexprParser(lex_sexpr(text), catalog, inputs).parse_root(std::move(expect));
}

namespace {

void print_rec(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Hole:
      out += "<HOLE>";
      return;
    case TermKind::Input:
      out += "input" + std::to_string(t.input_index());
      return;
    case TermKind::App:
      if (t.children().empty()) {
        out += t.prim().name;
        return;
      }
      out += "(" + t.prim().name;
      for (const auto& c : t.children()) {
        out += " ";
        print_rec(*c, out);
      }
      out += ")";
      return;
  }
}

}  // namespace

std::string print_program(const TermPtr& term) {
  if (!term) throw DslError("null term");
  std::string out;
  print_rec(*term, out);
  return out;
}

std::vector<int> serialize_tokens(const TermPtr& sketch) {
  if (!sketch) throw DslError("null term");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(sketch->node_count()));
  std::vector<const Term*> stack{sketch.get()};
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    out.push_back(t->production_token());
    for (auto it = t->children().rbegin(); it != t->children().rend(); ++it)
      stack.push_back(it->get());
  }
  return out;
}

namespace {

TermPtr deserialize_rec(const std::vector<int>& toks, size_t& pos,
                        const Catalog& catalog, const InputSignature& inputs,
                        const Ty& want) {
  if (pos >= toks.size())
    throw DslError("token sequence exhausted with open arity");
  int tok = toks[pos++];
  if (tok == hole_token()) return Term::hole(want);
  if (is_input_token(tok)) {
    int idx = tok - 34;
    if (idx >= static_cast<int>(inputs.size()))
      throw DslError("input token out of signature range");
    if (inputs.at(idx) != want)
      throw DslError("type-invalid production: input" + std::to_string(idx));
    return Term::input(idx, want);
  }
  if (tok < 0 || tok >= static_cast<int>(catalog.size()))
    throw DslError("unknown token id " + std::to_string(tok));
  const Primitive& prim = catalog.at(static_cast<size_t>(tok));
  if (prim.production_type() != want)
    throw DslError("type-invalid production: " + prim.name + " cannot produce " +
                   want.to_string());
  std::vector<TermPtr> children;
  if (!prim.is_lambda)
    for (const Ty& arg : prim.signature.args())
      children.push_back(deserialize_rec(toks, pos, catalog, inputs, arg));
  return Term::app(prim, std::move(children));
}

}  // namespace

TermPtr deserialize_tokens(const std::vector<int>& tokens, const Catalog& catalog,
                           const InputSignature& inputs, const Ty& root_ty) {
  size_t pos = 0;
  TermPtr t = deserialize_rec(tokens, pos, catalog, inputs, root_ty);
  if (pos != tokens.size())
    throw DslError("trailing tokens after complete term");
  return t;
}

const Ty& GrammarCursor::next_type() const {
  if (pending_.empty()) throw DslError("term already arity-complete");
  return pending_.back();
}

bool GrammarCursor::accepts(int token) const {
  if (pending_.empty()) return false;
  const Ty& want = pending_.back();
  if (token == hole_token()) return true;
  if (is_input_token(token)) {
    int idx = token - 34;
    return idx < static_cast<int>(inputs_->size()) && inputs_->at(idx) == want;
  }
  if (token < 0 || token >= static_cast<int>(catalog_->size())) return false;
  return catalog_->at(static_cast<size_t>(token)).production_type() == want;
}

void GrammarCursor::consume(int token) {
  if (!accepts(token))
    throw DslError("token " + production_name(token, *catalog_) +
                   " does not fit the pending type");
  const Ty want = pending_.back();
  pending_.pop_back();
  (void)want;
  if (token == hole_token() || is_input_token(token)) return;
  const Primitive& prim = catalog_->at(static_cast<size_t>(token));
  if (!prim.is_lambda) {
    const auto& args = prim.signature.args();
    for (auto it = args.rbegin(); it != args.rend(); ++it) pending_.push_back(*it);
  }
}

}  // namespace synth
