#include "sketchsynth/eval.hpp"

#include <algorithm>

namespace synth {

namespace {

Value eval_rec(const Term& t, const std::vector<Value>& inputs) {
  switch (t.kind()) {
    case TermKind::Hole:
      throw DslError("cannot evaluate a sketch: hole present");
    case TermKind::Input: {
      int idx = t.input_index();
      if (idx >= static_cast<int>(inputs.size()))
        throw DslError("missing input" + std::to_string(idx));
      const Value& v = inputs[static_cast<size_t>(idx)];
      if (!v.conforms(t.ty()))
        throw DslError("input" + std::to_string(idx) + " has wrong type");
      return v;
    }
    case TermKind::App:
      break;
  }

  const Primitive& prim = t.prim();
  if (prim.is_lambda)
    throw DslError("lambda " + prim.name + " evaluated outside a higher-order call");

  const auto& kids = t.children();
  // Higher-order primitives take their lambda child syntactically; everything
  // else is evaluated strictly, with Fail short-circuiting.
  auto eval_child = [&](size_t i) { return eval_rec(*kids[i], inputs); };

  switch (prim.index) {
    case 0: {  // HEAD
      Value xs = eval_child(0);
      if (xs.is_fail() || xs.as_list().empty()) return Value::fail();
      return Value::integer(xs.as_list().front());
    }
    case 1: {  // LAST
      Value xs = eval_child(0);
      if (xs.is_fail() || xs.as_list().empty()) return Value::fail();
      return Value::integer(xs.as_list().back());
    }
    case 2: {  // TAKE: prefix of length clamp(n, 0, len)
      Value n = eval_child(0);
      if (n.is_fail()) return Value::fail();
      Value xs = eval_child(1);
      if (xs.is_fail()) return Value::fail();
      const auto& v = xs.as_list();
      int64_t k = std::clamp<int64_t>(n.as_int(), 0, static_cast<int64_t>(v.size()));
      return Value::list(std::vector<int64_t>(v.begin(), v.begin() + k));
    }
    case 3: {  // DROP
      Value n = eval_child(0);
      if (n.is_fail()) return Value::fail();
      Value xs = eval_child(1);
      if (xs.is_fail()) return Value::fail();
      const auto& v = xs.as_list();
      int64_t k = std::clamp<int64_t>(n.as_int(), 0, static_cast<int64_t>(v.size()));
      return Value::list(std::vector<int64_t>(v.begin() + k, v.end()));
    }
    case 4: {  // ACCESS: xs[n], Fail when out of range
      Value n = eval_child(0);
      if (n.is_fail()) return Value::fail();
      Value xs = eval_child(1);
      if (xs.is_fail()) return Value::fail();
      const auto& v = xs.as_list();
      int64_t k = n.as_int();
      if (k < 0 || k >= static_cast<int64_t>(v.size())) return Value::fail();
      return Value::integer(v[static_cast<size_t>(k)]);
    }
    case 5: {  // MINIMUM
      Value xs = eval_child(0);
      if (xs.is_fail() || xs.as_list().empty()) return Value::fail();
      return Value::integer(*std::min_element(xs.as_list().begin(), xs.as_list().end()));
    }
    case 6: {  // MAXIMUM
      Value xs = eval_child(0);
      if (xs.is_fail() || xs.as_list().empty()) return Value::fail();
      return Value::integer(*std::max_element(xs.as_list().begin(), xs.as_list().end()));
    }
    case 7: {  // REVERSE
      Value xs = eval_child(0);
      if (xs.is_fail()) return Value::fail();
      std::vector<int64_t> v = xs.as_list();
      std::reverse(v.begin(), v.end());
      return Value::list(std::move(v));
    }
    case 8: {  // SORT
      Value xs = eval_child(0);
      if (xs.is_fail()) return Value::fail();
      std::vector<int64_t> v = xs.as_list();
      std::sort(v.begin(), v.end());
      return Value::list(std::move(v));
    }
    case 9: {  // SUM
      Value xs = eval_child(0);
      if (xs.is_fail()) return Value::fail();
      int64_t acc = 0;
      for (int64_t x : xs.as_list())
        if (__builtin_add_overflow(acc, x, &acc)) return Value::fail();
      return Value::integer(acc);
    }
    case 10: {  // MAP
      const Primitive& lam = kids[0]->prim();
      Value xs = eval_child(1);
      if (xs.is_fail()) return Value::fail();
      std::vector<int64_t> out;
      out.reserve(xs.as_list().size());
      for (int64_t x : xs.as_list()) {
        Value y = apply_lambda(lam, x);
        if (y.is_fail()) return Value::fail();
        out.push_back(y.as_int());
      }
      return Value::list(std::move(out));
    }
    case 11: {  // FILTER
      const Primitive& lam = kids[0]->prim();
      Value xs = eval_child(1);
      if (xs.is_fail()) return Value::fail();
      std::vector<int64_t> out;
      for (int64_t x : xs.as_list())
        if (apply_lambda(lam, x).as_bool()) out.push_back(x);
      return Value::list(std::move(out));
    }
    case 12: {  // COUNT
      const Primitive& lam = kids[0]->prim();
      Value xs = eval_child(1);
      if (xs.is_fail()) return Value::fail();
      int64_t n = 0;
      for (int64_t x : xs.as_list())
        if (apply_lambda(lam, x).as_bool()) n++;
      return Value::integer(n);
    }
    case 13: {  // ZIPWITH: truncates to the shorter list
      const Primitive& lam = kids[0]->prim();
      Value xs = eval_child(1);
      if (xs.is_fail()) return Value::fail();
      Value ys = eval_child(2);
      if (ys.is_fail()) return Value::fail();
      const auto& a = xs.as_list();
      const auto& b = ys.as_list();
      size_t n = std::min(a.size(), b.size());
      std::vector<int64_t> out;
      out.reserve(n);
      for (size_t i = 0; i < n; i++) {
        Value y = apply_lambda(lam, a[i], b[i]);
        if (y.is_fail()) return Value::fail();
        out.push_back(y.as_int());
      }
      return Value::list(std::move(out));
    }
    case 14: {  // SCANL1: running fold, Fail on the empty list
      const Primitive& lam = kids[0]->prim();
      Value xs = eval_child(1);
      if (xs.is_fail()) return Value::fail();
      const auto& v = xs.as_list();
      if (v.empty()) return Value::fail();
      std::vector<int64_t> out;
      out.reserve(v.size());
      int64_t acc = v[0];
      out.push_back(acc);
      for (size_t i = 1; i < v.size(); i++) {
        Value y = apply_lambda(lam, acc, v[i]);
        if (y.is_fail()) return Value::fail();
        acc = y.as_int();
        out.push_back(acc);
      }
      return Value::list(std::move(out));
    }
    default:
      throw DslError("no interpreter case for " + prim.name);
  }
}

}  // namespace

Value evaluate(const TermPtr& program, const std::vector<Value>& inputs) {
  if (!program) throw DslError("null term");
  if (program->has_holes())
    throw DslError("cannot evaluate a sketch: hole present");
  return eval_rec(*program, inputs);
}

std::vector<Value> behavioral_signature(
    const TermPtr& program, const std::vector<std::vector<Value>>& probe_inputs) {
  std::vector<Value> sig;
  sig.reserve(probe_inputs.size());
  for (const auto& probe : probe_inputs) sig.push_back(evaluate(program, probe));
  return sig;
}

}  // namespace synth
