#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sketchsynth/catalog.hpp"
#include "sketchsynth/term.hpp"
#include "sketchsynth/types.hpp"

namespace synth::testing {

inline Value L(std::vector<int64_t> xs) { return Value::list(std::move(xs)); }
inline Value I(int64_t x) { return Value::integer(x); }

inline InputSignature sig_int_list() {
  return InputSignature({Ty::intty(), Ty::list()});
}
inline InputSignature sig_list() { return InputSignature({Ty::list()}); }
inline InputSignature sig_list_list() {
  return InputSignature({Ty::list(), Ty::list()});
}

// Productions usable at a hole of the given type, in catalog-then-input
// order. Independent of the implementation in weights.cpp; tests use this as
// the ground-truth scan of the catalog signatures.
inline std::vector<int> scan_compatible(const Ty& ty, const InputSignature& sig,
                                        const Catalog& catalog) {
  std::vector<int> out;
  for (const Primitive& p : catalog.primitives())
    if (p.production_type() == ty) out.push_back(p.index);
  for (size_t i = 0; i < sig.size(); i++)
    if (sig.at(i) == ty) out.push_back(input_token(static_cast<int>(i)));
  return out;
}

// Uniformly samples a type-correct term of the requested type with depth
// budget `max_depth` (nodes on a root-to-leaf path). May place holes when
// `hole_prob` > 0.
inline TermPtr random_term(std::mt19937_64& rng, const Ty& ty,
                           const InputSignature& sig, const Catalog& catalog,
                           int max_depth, double hole_prob = 0.0) {
  if (hole_prob > 0.0 &&
      std::uniform_real_distribution<double>(0, 1)(rng) < hole_prob)
    return Term::hole(ty);
  std::vector<int> compat = scan_compatible(ty, sig, catalog);
  std::vector<int> usable;
  for (int tok : compat) {
    if (is_input_token(tok)) {
      usable.push_back(tok);
      continue;
    }
    const Primitive& p = catalog.at(static_cast<size_t>(tok));
    if (p.arity() == 0 || max_depth > 1) usable.push_back(tok);
  }
  if (usable.empty()) {
    // No leaf fits here (e.g. an int position without an int input); take the
    // smallest-arity production and let the children close out with leaves.
    int best = compat.at(0);
    size_t best_arity = catalog.at(static_cast<size_t>(best)).arity();
    for (int tok : compat) {
      size_t a = catalog.at(static_cast<size_t>(tok)).arity();
      if (a < best_arity) {
        best = tok;
        best_arity = a;
      }
    }
    usable.push_back(best);
    max_depth = 2;
  }
  int tok = usable[std::uniform_int_distribution<size_t>(0, usable.size() - 1)(rng)];
  if (is_input_token(tok)) return Term::input(tok - 34, ty);
  const Primitive& p = catalog.at(static_cast<size_t>(tok));
  std::vector<TermPtr> kids;
  if (!p.is_lambda)
    for (const Ty& arg : p.signature.args())
      kids.push_back(random_term(rng, arg, sig, catalog, max_depth - 1, hole_prob));
  return Term::app(p, std::move(kids));
}

}  // namespace synth::testing
