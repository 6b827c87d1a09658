#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "sketchsynth/eval.hpp"
#include "sketchsynth/term.hpp"

using namespace synth;
using namespace synth::testing;

namespace {
const Catalog& cat = Catalog::list_ops();
}

TEST_CASE("catalog has 34 uniquely named primitives") {
  CHECK(cat.size() == 34);
  CHECK(cat.find("MAP") != nullptr);
  CHECK(cat.find("MAP")->arity() == 2);
  CHECK(cat.find("ZIPWITH")->arity() == 3);
  CHECK(cat.find("INC")->is_lambda);
  CHECK(cat.find("INC")->arity() == 0);
  int lambdas = 0;
  for (const auto& p : cat.primitives()) lambdas += p.is_lambda ? 1 : 0;
  CHECK(lambdas == 19);
}

TEST_CASE("parse: sample row 1 program is well typed") {
  auto t = parse_program("(MAXIMUM (MAP DIV3 (DROP input0 input1)))", cat,
                         sig_int_list());
  CHECK(t->ty() == Ty::intty());
  CHECK(t->node_count() == 6);
  CHECK(!t->has_holes());
}

TEST_CASE("parse: bare input is the identity term") {
  auto t = parse_program("input0", cat, sig_list());
  CHECK(t->kind() == TermKind::Input);
  CHECK(t->ty() == Ty::list());
}

TEST_CASE("parse: arity mismatch is reported with position") {
  CHECK_THROWS_WITH_AS(parse_program("(MAP INC)", cat, sig_list()),
                       doctest::Contains("arity mismatch"), ParseError);
  try {
    parse_program("(MAP INC)", cat, sig_list());
  } catch (const ParseError& e) {
    CHECK(e.position == 3);  // the ')'
  }
}

TEST_CASE("parse: unknown token and type mismatch") {
  CHECK_THROWS_WITH_AS(parse_program("(MAP FROB input0)", cat, sig_list()),
                       doctest::Contains("unknown token"), ParseError);
  CHECK_THROWS_WITH_AS(parse_program("(MAP input0 input0)", cat, sig_list()),
                       doctest::Contains("type mismatch"), ParseError);
  CHECK_THROWS_WITH_AS(parse_program("(HEAD input0)", cat, sig_int_list()),
                       doctest::Contains("type mismatch"), ParseError);
  CHECK_THROWS_WITH_AS(parse_program("input3", cat, sig_list()),
                       doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(parse_program("(INC input0)", cat, sig_int_list()),
                       doctest::Contains("arity mismatch"), ParseError);
}

TEST_CASE("print: leaves print bare, applications parenthesized") {
  CHECK(print_program(Term::input(0, Ty::list())) == "input0");
  CHECK(print_program(Term::hole(Ty::intty())) == "<HOLE>");
  auto t = parse_program("(MAXIMUM (MAP DIV3 (DROP input0 input1)))", cat,
                         sig_int_list());
  CHECK(print_program(t) == "(MAXIMUM (MAP DIV3 (DROP input0 input1)))");
}

TEST_CASE("parse/print round trip on random sketches") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; i++) {
    InputSignature sig = (i % 2) ? sig_int_list() : sig_list_list();
    Ty root = (i % 4 < 2) ? Ty::list() : Ty::intty();
    auto t = random_term(rng, root, sig, cat, 5, i % 3 ? 0.15 : 0.0);
    auto back = parse_program(print_program(t), cat, sig, root);
    CHECK(structurally_equal(t, back));
  }
}

TEST_CASE("evaluate: sample row 1") {
  auto t = parse_program("(MAXIMUM (MAP DIV3 (DROP input0 input1)))", cat,
                         sig_int_list());
  CHECK(evaluate(t, {I(1), L({-101, 63, 64, 79, 119, 91, -56, 47, -74, -33})}) ==
        I(39));
  CHECK(evaluate(t, {I(4), L({-6, -96, -45, 17, 26, -38, 17, -18, -112, -48})}) ==
        I(8));
}

TEST_CASE("evaluate: sample row 2") {
  auto t = parse_program("(TAKE input0 (MAP SQR (MAP DEC input1)))", cat,
                         sig_int_list());
  CHECK(evaluate(t, {I(2), L({-9, 5, -8, -9, 9, -3, 7, -5, -10, 1})}) ==
        L({100, 16}));
  CHECK(evaluate(t, {I(3), L({-5, -8, 0, 10, 2, -7, -3, -5, 6, 2})}) ==
        L({36, 81, 1}));
}

TEST_CASE("evaluate: partial functions fail on empty input") {
  auto head = parse_program("(HEAD input0)", cat, sig_list());
  CHECK(evaluate(head, {L({})}).is_fail());
  for (const char* text :
       {"(LAST input0)", "(MINIMUM input0)", "(MAXIMUM input0)",
        "(SCANL1 ADD input0)"}) {
    auto t = parse_program(text, cat, sig_list());
    CHECK(evaluate(t, {L({})}).is_fail());
  }
  auto sum = parse_program("(SUM input0)", cat, sig_list());
  CHECK(evaluate(sum, {L({})}) == I(0));
}

TEST_CASE("evaluate: access, take, drop edge semantics") {
  auto acc = parse_program("(ACCESS input0 input1)", cat, sig_int_list());
  CHECK(evaluate(acc, {I(0), L({5, 6})}) == I(5));
  CHECK(evaluate(acc, {I(2), L({5, 6})}).is_fail());
  CHECK(evaluate(acc, {I(-1), L({5, 6})}).is_fail());
  auto take = parse_program("(TAKE input0 input1)", cat, sig_int_list());
  CHECK(evaluate(take, {I(5), L({1, 2})}) == L({1, 2}));
  CHECK(evaluate(take, {I(-3), L({1, 2})}) == L({}));
  auto drop = parse_program("(DROP input0 input1)", cat, sig_int_list());
  CHECK(evaluate(drop, {I(5), L({1, 2})}) == L({}));
  CHECK(evaluate(drop, {I(-3), L({1, 2})}) == L({1, 2}));
}

TEST_CASE("evaluate: floor division and parity on negatives") {
  auto div = parse_program("(MAP DIV3 input0)", cat, sig_list());
  CHECK(evaluate(div, {L({-7, -6, 7})}) == L({-3, -2, 2}));
  auto div4 = parse_program("(MAP DIV4 input0)", cat, sig_list());
  CHECK(evaluate(div4, {L({-1, -5, 9})}) == L({-1, -2, 2}));
  auto odd = parse_program("(FILTER isODD input0)", cat, sig_list());
  CHECK(evaluate(odd, {L({-3, -2, 0, 1, 2})}) == L({-3, 1}));
  auto even = parse_program("(FILTER isEVEN input0)", cat, sig_list());
  CHECK(evaluate(even, {L({-3, -2, 0, 1, 2})}) == L({-2, 0, 2}));
}

TEST_CASE("evaluate: scanl1, zipwith, count") {
  auto scan = parse_program("(SCANL1 ADD input0)", cat, sig_list());
  CHECK(evaluate(scan, {L({1, 2, 3, 4})}) == L({1, 3, 6, 10}));
  auto zip = parse_program("(ZIPWITH SUB input0 input1)", cat, sig_list_list());
  CHECK(evaluate(zip, {L({5, 6, 7}), L({1, 1})}) == L({4, 5}));
  auto cnt = parse_program("(COUNT isPOS input0)", cat, sig_list());
  CHECK(evaluate(cnt, {L({-1, 2, 3, -4, 0})}) == I(2));
}

TEST_CASE("evaluate: int64 overflow becomes Fail, never UB") {
  // SQR^4 of anything >= 3 digits overflows int64.
  auto t = parse_program("(MAP SQR (MAP SQR (MAP SQR (MAP SQR input0))))", cat,
                         sig_list());
  CHECK(evaluate(t, {L({128})}).is_fail());
  CHECK(evaluate(t, {L({1})}) == L({1}));
}

TEST_CASE("evaluate: structural misuse throws, domain failure does not") {
  auto sketch = parse_program("(MAP <HOLE> input0)", cat, sig_list());
  CHECK_THROWS_AS(evaluate(sketch, {L({1})}), DslError);
  auto head = parse_program("(HEAD input0)", cat, sig_list());
  CHECK_THROWS_AS(evaluate(head, {I(3)}), DslError);  // wrong input type
  CHECK_THROWS_AS(evaluate(head, {}), DslError);      // missing input
}

TEST_CASE("evaluate: deterministic pure function") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; i++) {
    auto t = random_term(rng, Ty::list(), sig_list(), cat, 5);
    std::vector<Value> in = {L({3, -1, 4, 1, -5, 9, 2, -6})};
    CHECK(evaluate(t, in) == evaluate(t, in));
  }
}

TEST_CASE("fail absorption: failing subterm fails the program") {
  std::mt19937_64 rng(13);
  const Primitive& maxi = *cat.find("MAXIMUM");
  const Primitive& mapp = *cat.find("MAP");
  const Primitive& inc = *cat.find("INC");
  // (HEAD input0) on [] fails; anything wrapping it must fail too.
  auto failing = parse_program("(TAKE (HEAD input0) input0)", cat, sig_list());
  std::vector<Value> in = {L({})};
  CHECK(evaluate(failing, in).is_fail());
  auto wrapped = Term::app(maxi, {failing});
  CHECK(evaluate(wrapped, in).is_fail());
  auto mapped = Term::app(mapp, {Term::app(inc, {}), failing});
  CHECK(evaluate(mapped, in).is_fail());
  (void)rng;
}

TEST_CASE("serialize: polish order without parentheses") {
  auto t = parse_program("(MAP INC input0)", cat, sig_list());
  std::vector<int> want = {cat.find("MAP")->index, cat.find("INC")->index,
                           input_token(0)};
  CHECK(serialize_tokens(t) == want);
  auto s = parse_program("(MAP <HOLE> input0)", cat, sig_list());
  std::vector<int> want2 = {cat.find("MAP")->index, hole_token(), input_token(0)};
  CHECK(serialize_tokens(s) == want2);
}

TEST_CASE("deserialize: exhausted and overlong sequences are errors") {
  std::vector<int> short_seq = {cat.find("MAP")->index, cat.find("INC")->index};
  CHECK_THROWS_WITH_AS(
      deserialize_tokens(short_seq, cat, sig_list(), Ty::list()),
      doctest::Contains("exhausted"), DslError);
  std::vector<int> long_seq = {input_token(0), input_token(0)};
  CHECK_THROWS_WITH_AS(deserialize_tokens(long_seq, cat, sig_list(), Ty::list()),
                       doctest::Contains("trailing"), DslError);
  std::vector<int> bad_type = {cat.find("MAP")->index, cat.find("isPOS")->index,
                               input_token(0)};
  CHECK_THROWS_WITH_AS(deserialize_tokens(bad_type, cat, sig_list(), Ty::list()),
                       doctest::Contains("type-invalid"), DslError);
}

TEST_CASE("serialize/deserialize round trip on random sketches") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; i++) {
    InputSignature sig = (i % 2) ? sig_int_list() : sig_list();
    Ty root = (i % 4 < 2) ? Ty::list() : Ty::intty();
    auto t = random_term(rng, root, sig, cat, 5, i % 3 ? 0.2 : 0.0);
    auto back = deserialize_tokens(serialize_tokens(t), cat, sig, root);
    CHECK(structurally_equal(t, back));
  }
}

TEST_CASE("grammar cursor tracks pending types") {
  InputSignature sig = sig_list();
  GrammarCursor cur(Ty::list(), &cat, &sig);
  CHECK(!cur.done());
  CHECK(cur.next_type() == Ty::list());
  CHECK(cur.accepts(cat.find("MAP")->index));
  CHECK(!cur.accepts(cat.find("HEAD")->index));  // produces int
  cur.consume(cat.find("MAP")->index);
  CHECK(cur.next_type() == Ty::func({Ty::intty()}, Ty::intty()));
  CHECK(cur.accepts(cat.find("INC")->index));
  CHECK(cur.accepts(hole_token()));
  CHECK(!cur.accepts(cat.find("isPOS")->index));
  cur.consume(hole_token());
  cur.consume(input_token(0));
  CHECK(cur.done());
  CHECK_THROWS_AS(cur.next_type(), DslError);
}

TEST_CASE("behavioral signature: identical programs match, different differ") {
  auto inc = parse_program("(MAP INC input0)", cat, sig_list());
  auto inc2 = parse_program("(MAP INC input0)", cat, sig_list());
  auto dec = parse_program("(MAP DEC input0)", cat, sig_list());
  std::vector<std::vector<Value>> probes = {{L({1, 2})}};
  CHECK(behavioral_signature(inc, probes) == behavioral_signature(inc2, probes));
  CHECK(behavioral_signature(inc, probes) != behavioral_signature(dec, probes));
  CHECK(behavioral_signature(inc, probes)[0] == L({2, 3}));
  CHECK(behavioral_signature(dec, probes)[0] == L({0, 1}));
}

TEST_CASE("behavioral signature: double reverse equals identity") {
  auto rr = parse_program("(REVERSE (REVERSE input0))", cat, sig_list());
  auto id = parse_program("input0", cat, sig_list());
  std::mt19937_64 rng(23);
  std::vector<std::vector<Value>> probes;
  for (int i = 0; i < 10; i++) {
    std::vector<int64_t> xs;
    for (int j = 0; j < 8; j++)
      xs.push_back(std::uniform_int_distribution<int64_t>(-50, 50)(rng));
    probes.push_back({L(xs)});
  }
  CHECK(behavioral_signature(rr, probes) == behavioral_signature(id, probes));
}
