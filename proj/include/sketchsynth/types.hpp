#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace synth {

// Structural error in how the API was used (ill-typed construction, holes
// where a program was required, malformed token streams). Domain-level
// failures of partial functions are *values* (Value::fail), never exceptions.
struct DslError : std::runtime_error {
  explicit DslError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : DslError {
  ParseError(const std::string& msg, int token_pos)
      : DslError(msg + " (at token " + std::to_string(token_pos) + ")"),
        position(token_pos) {}
  int position;
};

enum class TyKind { Int, Bool, ListInt, Func };

namespace detail {
struct TyFuncSig;
}

// Type of a DSL expression. Base types are Int, Bool, ListInt; Func types
// describe primitive signatures and lambda values. Equality is structural.
class Ty {
 public:
  Ty() : kind_(TyKind::Int) {}

  static Ty intty() { return Ty(TyKind::Int); }
  static Ty boolty() { return Ty(TyKind::Bool); }
  static Ty list() { return Ty(TyKind::ListInt); }
  static Ty func(std::vector<Ty> args, Ty ret);

  TyKind kind() const { return kind_; }
  bool is_base() const { return kind_ != TyKind::Func; }
  bool is_func() const { return kind_ == TyKind::Func; }

  const std::vector<Ty>& args() const;
  const Ty& ret() const;
  size_t arity() const { return is_func() ? args().size() : 0; }

  bool operator==(const Ty& o) const;
  bool operator!=(const Ty& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  explicit Ty(TyKind k) : kind_(k) {}
  const detail::TyFuncSig& fn() const;
  TyKind kind_;
  std::shared_ptr<const detail::TyFuncSig> fn_;
};

namespace detail {
struct TyFuncSig {
  std::vector<Ty> args;
  Ty ret;
};
}

inline const detail::TyFuncSig& Ty::fn() const {
  if (!fn_) throw DslError("not a function type");
  return *fn_;
}
inline const std::vector<Ty>& Ty::args() const { return fn().args; }
inline const Ty& Ty::ret() const { return fn().ret; }

// Ordered input types for a task. Only base types (Int, ListInt) may be
// declared as inputs.
class InputSignature {
 public:
  InputSignature() = default;
  explicit InputSignature(std::vector<Ty> types);

  size_t size() const { return types_.size(); }
  const Ty& at(size_t i) const { return types_.at(i); }
  const std::vector<Ty>& types() const { return types_; }
  bool operator==(const InputSignature& o) const { return types_ == o.types_; }

  std::string to_string() const;

 private:
  std::vector<Ty> types_;
};

// Runtime value. Fail is the explicit result of partial-function violations
// (head of empty list, out-of-range access, arithmetic overflow) and absorbs
// bottom-up through evaluation.
class Value {
 public:
  enum class Kind { Int, Bool, List, Fail };

  Value() : kind_(Kind::Fail) {}
  static Value integer(int64_t v) {
    Value x;
    x.kind_ = Kind::Int;
    x.int_ = v;
    return x;
  }
  static Value boolean(bool b) {
    Value x;
    x.kind_ = Kind::Bool;
    x.int_ = b ? 1 : 0;
    return x;
  }
  static Value list(std::vector<int64_t> xs) {
    Value x;
    x.kind_ = Kind::List;
    x.list_ = std::move(xs);
    return x;
  }
  static Value fail() { return Value(); }

  Kind kind() const { return kind_; }
  bool is_fail() const { return kind_ == Kind::Fail; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_bool() const { return kind_ == Kind::Bool; }
  bool is_list() const { return kind_ == Kind::List; }

  int64_t as_int() const {
    require(Kind::Int);
    return int_;
  }
  bool as_bool() const {
    require(Kind::Bool);
    return int_ != 0;
  }
  const std::vector<int64_t>& as_list() const {
    require(Kind::List);
    return list_;
  }

  // Spec checking rejects Fail results before comparing, so Fail==Fail being
  // true here only matters for behavioral signatures, where it is wanted.
  bool operator==(const Value& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::List) return list_ == o.list_;
    if (kind_ == Kind::Fail) return true;
    return int_ == o.int_;
  }
  bool operator!=(const Value& o) const { return !(*this == o); }

  // Type of a non-fail value.
  Ty type() const;

  // Does this value inhabit the given base type?
  bool conforms(const Ty& ty) const;

  std::string to_string() const;

 private:
  void require(Kind k) const {
    if (kind_ != k) throw DslError("value kind mismatch: " + to_string());
  }
  Kind kind_;
  int64_t int_ = 0;
  std::vector<int64_t> list_;
};

}  // namespace synth
