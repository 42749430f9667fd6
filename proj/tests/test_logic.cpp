#include "doctest.h"

#include "epikit/logic.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace epikit;
using fixtures::abc;
using fixtures::ab;
using fixtures::sig;

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(Signature({}), InvalidArgument);
  CHECK_THROWS_AS(Signature({"a", "a"}), InvalidArgument);
  CHECK_THROWS_AS(Signature({"1a"}), InvalidArgument);
  CHECK_THROWS_AS(Signature({"top"}), InvalidArgument);
  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("p" + std::to_string(i));
  CHECK_THROWS_AS(Signature{many}, InvalidArgument);
  many.pop_back();
  CHECK(Signature{many}.universe_size() == 65536u);
}

TEST_CASE("world encoding puts the first atom in the top bit") {
  CHECK(parse_world("!a !b !c", abc()).index == 0u);
  CHECK(parse_world("a !b !c", abc()).index == 4u);
  CHECK(parse_world("!a !b c", abc()).index == 1u);
  CHECK(world_to_string(abc(), 6) == "a b !c");
  CHECK_THROWS_AS(parse_world("a b", abc()), InvalidArgument);
  CHECK_THROWS_AS(parse_world("b a c", abc()), InvalidArgument);
}

TEST_CASE("formula parsing agrees with truth tables") {
  struct Case {
    const char* text;
    std::function<bool(const std::vector<bool>&)> eval;
  };
  std::vector<Case> cases = {
      {"a & !b | c", [](auto& v) { return (v[0] && !v[1]) || v[2]; }},
      {"a -> b -> c", [](auto& v) { return !v[0] || !v[1] || v[2]; }},
      {"(a -> b) -> c", [](auto& v) { return (v[0] && !v[1]) || v[2]; }},
      {"a <-> !c", [](auto& v) { return v[0] != v[2]; }},
      {"!(a | b) & top", [](auto& v) { return !v[0] && !v[1]; }},
      {"a | bot", [](auto& v) { return bool(v[0]); }},
      {"a | b -> c", [](auto& v) { return !(v[0] || v[1]) || v[2]; }},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    Formula f = parse_formula(c.text, abc());
    auto expect = oracle::worlds_where(3, c.eval);
    for (std::uint32_t w = 0; w < 8; ++w) CHECK(f.models().test(w) == expect[w]);
  }
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_formula("a & q", abc());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4u);
  }
  CHECK_THROWS_AS(parse_formula("a &", abc()), ParseError);
  CHECK_THROWS_AS(parse_formula("(a", abc()), ParseError);
  CHECK_THROWS_AS(parse_formula("a b", abc()), ParseError);
}

TEST_CASE("CDNF is canonical") {
  CHECK(parse_formula("a & b", ab()).to_cdnf() == "(a & b)");
  CHECK(parse_formula("b & a | a & b", ab()).to_cdnf() == "(a & b)");
  CHECK(parse_formula("a <-> b", ab()).to_cdnf() == "(!a & !b) | (a & b)");
  CHECK(Formula::bottom(ab()).to_cdnf() == "bot");
  // Round trip.
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    WorldSet s(4);
    for (std::uint32_t w = 0; w < 4; ++w)
      if ((bits >> w) & 1) s.set(w);
    Formula f(ab(), s);
    CHECK(parse_formula(f.to_cdnf(), ab()) == f);
  }
}

TEST_CASE("short display form") {
  CHECK(parse_formula("a & b | a & !b", ab()).to_string() == "a");
  CHECK(parse_formula("!(a & b)", ab()).to_string() == "!a | !b");
  CHECK(parse_formula("a <-> b", ab()).to_string() == "(!a & !b) | (a & b)");
  CHECK(parse_formula("p & b | p & f | b & f", sig("p b f")).to_string() ==
        "(p & b) | (p & f) | (b & f)");
  CHECK(Formula::top(ab()).to_string() == "top");
  CHECK(Formula::bottom(ab()).to_string() == "bot");
  for (const Signature* s : {&ab(), &abc()}) {
    const std::uint32_t u = s->universe_size();
    for (std::uint32_t bits = 0; bits < (1u << u); ++bits) {
      WorldSet ws(u);
      for (std::uint32_t w = 0; w < u; ++w)
        if ((bits >> w) & 1) ws.set(w);
      Formula f(*s, ws);
      CHECK(parse_formula(f.to_string(), *s) == f);
      for (std::uint32_t a = 1; a < (1u << u); a += 37) {
        WorldSet as(u);
        for (std::uint32_t w = 0; w < u; ++w)
          if ((a >> w) & 1) as.set(w);
        Conditional c(f, Formula(*s, as));
        CHECK(parse_conditional(c.to_string(), *s) == c);
      }
    }
  }
}

TEST_CASE("entailment, closure and belief sets") {
  Formula a = parse_formula("a", ab()), b = parse_formula("b", ab());
  CHECK(entails(a & b, a));
  CHECK_FALSE(entails(a, a & b));
  std::vector<Formula> fs{a, b};
  BeliefSet k = closure_from(fs, ab());
  CHECK(k.models().members() == std::vector<std::uint32_t>{3});
  CHECK(k.contains(a | b));
  CHECK_FALSE(k.contains(!a));
  CHECK(k.to_string() == "Th(a & b)");
  std::vector<Formula> inconsistent{a, !a};
  CHECK_FALSE(closure_from(inconsistent, ab()).consistent());
  std::vector<World> ws{parse_world("a !b", ab()), parse_world("!a b", ab())};
  CHECK(theory(ws, ab()).as_formula() == parse_formula("a <-> !b", ab()));
}

TEST_CASE("signature mismatch is reported") {
  Formula a = parse_formula("a", ab());
  Formula x = parse_formula("a", abc());
  CHECK_THROWS_AS((void)(a & x), SignatureMismatch);
  CHECK_THROWS_AS((void)entails(a, x), SignatureMismatch);
}

TEST_CASE("conditionals are three-valued") {
  Conditional c = parse_conditional("(b | a)", ab());
  CHECK(eval_conditional(parse_world("a b", ab()), c) == ConditionalValue::kVerifies);
  CHECK(eval_conditional(parse_world("a !b", ab()), c) == ConditionalValue::kFalsifies);
  CHECK(eval_conditional(parse_world("!a b", ab()), c) == ConditionalValue::kNotApplicable);
  CHECK(c.to_string() == "(b | a)");
  CHECK(parse_conditional(c.to_string(), ab()) == c);
  Conditional d = parse_conditional("(a | b | !a & !b)", ab());
  CHECK(d.to_string() == "((a | b) | !a & !b)");
  CHECK(parse_conditional(d.to_string(), ab()) == d);
}

TEST_CASE("conditional parsing picks the separating bar") {
  Conditional c = parse_conditional("(a | b | !a)", ab());
  CHECK(c.consequent() == parse_formula("a | b", ab()));
  CHECK(c.antecedent() == parse_formula("!a", ab()));
  Conditional d = parse_conditional("((a | b) | top)", ab());
  CHECK(d.antecedent().tautology());
  CHECK_THROWS_AS(parse_conditional("(a & b)", ab()), ParseError);
}

TEST_CASE("essential atoms and vocabulary") {
  CHECK(essential_atoms(parse_formula("a | (b & !b)", abc())) == std::vector<std::size_t>{0});
  CHECK(essential_atoms(parse_formula("top", abc())).empty());
  std::vector<std::size_t> cell{1, 2};
  CHECK(within_vocabulary(parse_formula("b -> c", abc()), cell));
  CHECK_FALSE(within_vocabulary(parse_formula("a -> c", abc()), cell));
}

TEST_CASE("projection and embedding are inverse") {
  std::vector<std::size_t> cell{0, 2};
  for (std::uint32_t w = 0; w < 8; ++w) {
    std::uint32_t sub = project_world(abc(), w, cell);
    CHECK(embed_world(abc(), sub, cell, w) == w);
  }
  // a !c projects to the sub-world (a, !c) = 0b10.
  CHECK(project_world(abc(), parse_world("a b !c", abc()).index, cell) == 2u);
  WorldSet sub(4);
  sub.set(2);
  CHECK(Formula(abc(), cylinder(abc(), sub, cell)) == parse_formula("a & !c", abc()));
  CHECK(project(abc(), parse_formula("a & !c", abc()).models(), cell) == sub);
}
