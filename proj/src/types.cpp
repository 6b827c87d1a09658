#include "sketchsynth/types.hpp"

namespace synth {

Ty Ty::func(std::vector<Ty> args, Ty ret) {
  if (args.empty()) throw DslError("function type needs at least one argument");
  Ty t(TyKind::Func);
  auto sig = std::make_shared<detail::TyFuncSig>();
  sig->args = std::move(args);
  sig->ret = std::move(ret);
  t.fn_ = std::move(sig);
  return t;
}

bool Ty::operator==(const Ty& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ != TyKind::Func) return true;
  if (fn_ == o.fn_) return true;
  return fn().args == o.fn().args && fn().ret == o.fn().ret;
}

std::string Ty::to_string() const {
  switch (kind_) {
    case TyKind::Int: return "int";
    case TyKind::Bool: return "bool";
    case TyKind::ListInt: return "list_int";
    case TyKind::Func: {
      std::string s = "(";
      for (size_t i = 0; i < args().size(); i++) {
        if (i) s += ",";
        s += args()[i].to_string();
      }
      return s + ")->" + ret().to_string();
    }
  }
  return "?";
}

InputSignature::InputSignature(std::vector<Ty> types) : types_(std::move(types)) {
  for (const Ty& t : types_) {
    if (!t.is_base() || t.kind() == TyKind::Bool)
      throw DslError("input types must be int or list_int, got " + t.to_string());
  }
}

std::string InputSignature::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < types_.size(); i++) {
    if (i) s += ",";
    s += types_[i].to_string();
  }
  return s + ")";
}

Ty Value::type() const {
  switch (kind_) {
    case Kind::Int: return Ty::intty();
    case Kind::Bool: return Ty::boolty();
    case Kind::List: return Ty::list();
    case Kind::Fail: throw DslError("fail value has no type");
  }
  throw DslError("bad value kind");
}

bool Value::conforms(const Ty& ty) const {
  if (is_fail()) return false;
  return type() == ty;
}

std::string Value::to_string() const {
  switch (kind_) {
    case Kind::Int: return std::to_string(int_);
    case Kind::Bool: return int_ ? "true" : "false";
    case Kind::Fail: return "FAIL";
    case Kind::List: {
      std::string s = "[";
      for (size_t i = 0; i < list_.size(); i++) {
        if (i) s += ",";
        s += std::to_string(list_[i]);
      }
      return s + "]";
    }
  }
  return "?";
}

}  // namespace synth
