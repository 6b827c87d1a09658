#include "sketchsynth/catalog.hpp"

#include <limits>

namespace synth {

namespace {

// Floor division, rounding toward minus infinity.
int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q--;
  return q;
}

bool mul_overflows(int64_t a, int64_t b, int64_t* out) {
  return __builtin_mul_overflow(a, b, out);
}

Catalog build_list_ops() {
  const Ty I = Ty::intty();
  const Ty L = Ty::list();
  const Ty B = Ty::boolty();
  const Ty F_ii = Ty::func({I}, I);
  const Ty F_ib = Ty::func({I}, B);
  const Ty F_iii = Ty::func({I, I}, I);

  std::vector<Primitive> p;
  auto fn = [&](const char* name, std::vector<Ty> args, Ty ret) {
    p.push_back({name, Ty::func(std::move(args), std::move(ret)), false,
                 static_cast<int>(p.size())});
  };
  auto lam = [&](const char* name, const Ty& sig) {
    p.push_back({name, sig, true, static_cast<int>(p.size())});
  };

  // First-order list functions.
  fn("HEAD", {L}, I);
  fn("LAST", {L}, I);
  fn("TAKE", {I, L}, L);
  fn("DROP", {I, L}, L);
  fn("ACCESS", {I, L}, I);
  fn("MINIMUM", {L}, I);
  fn("MAXIMUM", {L}, I);
  fn("REVERSE", {L}, L);
  fn("SORT", {L}, L);
  fn("SUM", {L}, I);
  // Higher-order list functions.
  fn("MAP", {F_ii, L}, L);
  fn("FILTER", {F_ib, L}, L);
  fn("COUNT", {F_ib, L}, I);
  fn("ZIPWITH", {F_iii, L, L}, L);
  fn("SCANL1", {F_iii, L}, L);
  // int -> int lambdas.
  lam("INC", F_ii);
  lam("DEC", F_ii);
  lam("MUL2", F_ii);
  lam("DIV2", F_ii);
  lam("MUL3", F_ii);
  lam("DIV3", F_ii);
  lam("MUL4", F_ii);
  lam("DIV4", F_ii);
  lam("NEG", F_ii);
  lam("SQR", F_ii);
  // int -> bool lambdas.
  lam("isPOS", F_ib);
  lam("isNEG", F_ib);
  lam("isODD", F_ib);
  lam("isEVEN", F_ib);
  // (int,int) -> int lambdas.
  lam("ADD", F_iii);
  lam("SUB", F_iii);
  lam("MUL", F_iii);
  lam("MIN", F_iii);
  lam("MAX", F_iii);

  return Catalog(std::move(p));
}

}  // namespace

Catalog::Catalog(std::vector<Primitive> prims) : prims_(std::move(prims)) {
  for (size_t i = 0; i < prims_.size(); i++) {
    if (prims_[i].index != static_cast<int>(i))
      throw DslError("catalog indices must be contiguous");
    for (size_t j = 0; j < i; j++)
      if (prims_[j].name == prims_[i].name)
        throw DslError("duplicate primitive name " + prims_[i].name);
  }
}

const Primitive* Catalog::find(std::string_view name) const {
  for (const Primitive& prim : prims_)
    if (prim.name == name) return &prim;
  return nullptr;
}

const Catalog& Catalog::list_ops() {
  static const Catalog c = build_list_ops();
  return c;
}

std::string production_name(int token, const Catalog& catalog) {
  if (token >= 0 && token < static_cast<int>(catalog.size()))
    return catalog.at(token).name;
  if (is_input_token(token)) return "input" + std::to_string(token - 34);
  if (token == hole_token()) return "<HOLE>";
  return "?tok" + std::to_string(token);
}

Value apply_lambda(const Primitive& lambda, int64_t a, int64_t b) {
  int64_t r = 0;
  switch (lambda.index) {
    case 15: /* INC */ if (__builtin_add_overflow(a, int64_t{1}, &r)) return Value::fail(); return Value::integer(r);
    case 16: /* DEC */ if (__builtin_sub_overflow(a, int64_t{1}, &r)) return Value::fail(); return Value::integer(r);
    case 17: /* MUL2 */ if (mul_overflows(a, 2, &r)) return Value::fail(); return Value::integer(r);
    case 18: /* DIV2 */ return Value::integer(floor_div(a, 2));
    case 19: /* MUL3 */ if (mul_overflows(a, 3, &r)) return Value::fail(); return Value::integer(r);
    case 20: /* DIV3 */ return Value::integer(floor_div(a, 3));
    case 21: /* MUL4 */ if (mul_overflows(a, 4, &r)) return Value::fail(); return Value::integer(r);
    case 22: /* DIV4 */ return Value::integer(floor_div(a, 4));
    case 23: /* NEG */ if (a == std::numeric_limits<int64_t>::min()) return Value::fail(); return Value::integer(-a);
    case 24: /* SQR */ if (mul_overflows(a, a, &r)) return Value::fail(); return Value::integer(r);
    case 25: /* isPOS */ return Value::boolean(a > 0);
    case 26: /* isNEG */ return Value::boolean(a < 0);
    case 27: /* isODD */ return Value::boolean(((a % 2) + 2) % 2 == 1);
    case 28: /* isEVEN */ return Value::boolean(((a % 2) + 2) % 2 == 0);
    case 29: /* ADD */ if (__builtin_add_overflow(a, b, &r)) return Value::fail(); return Value::integer(r);
    case 30: /* SUB */ if (__builtin_sub_overflow(a, b, &r)) return Value::fail(); return Value::integer(r);
    case 31: /* MUL */ if (mul_overflows(a, b, &r)) return Value::fail(); return Value::integer(r);
    case 32: /* MIN */ return Value::integer(a < b ? a : b);
    case 33: /* MAX */ return Value::integer(a > b ? a : b);
    default:
      throw DslError("not a lambda: " + lambda.name);
  }
}

}  // namespace synth
