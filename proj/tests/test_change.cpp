#include "doctest.h"

#include "epikit/change.hpp"
#include "epikit/harness.hpp"
#include "fixtures.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace epikit;
using namespace fixtures;

namespace {

TotalPreorder base_tpo() {
  return tpo(R"(
    0: a b
    1: a !b, !a b
    2: !a !b
  )", ab());
}

oracle::Mask mask_of(const WorldSet& s) {
  oracle::Mask m(s.capacity());
  for (std::uint32_t w = 0; w < s.capacity(); ++w) m[w] = s.test(w);
  return m;
}

}  // namespace

TEST_CASE("natural and lexicographic revision") {
  CHECK(revise_tpo(base_tpo(), f("!a & !b", ab()), RevisionMode::kNatural) ==
        tpo("0: !a !b\n1: a b\n2: a !b, !a b", ab()));
  CHECK(revise_tpo(base_tpo(), f("b", ab()), RevisionMode::kLexicographic) ==
        tpo("0: a b\n1: !a b\n2: a !b\n3: !a !b", ab()));
  CHECK(revise_tpo(base_tpo(), f("a & b", ab()), RevisionMode::kNatural) == base_tpo());
  CHECK_THROWS_AS(revise_tpo(base_tpo(), f("bot", ab()), RevisionMode::kNatural),
                  PreconditionError);
}

TEST_CASE("contractions") {
  CHECK(contract_tpo(base_tpo(), f("a", ab()), ContractionMode::kNatural) ==
        tpo("0: a b, !a b\n1: a !b\n2: !a !b", ab()));
  CHECK(contract_tpo(base_tpo(), f("a", ab()), ContractionMode::kModerate) ==
        tpo("0: a b, !a b\n1: !a !b\n2: a !b", ab()));
  CHECK(contract_tpo(base_tpo(), f("a", ab()), ContractionMode::kLexicographic) ==
        tpo("0: a b, !a b\n1: a !b, !a !b", ab()));
  CHECK_THROWS_AS(contract_tpo(base_tpo(), f("a | !a", ab()), ContractionMode::kModerate),
                  PreconditionError);
}

TEST_CASE("success of revision and contraction") {
  std::mt19937_64 rng(21);
  Formula top = Formula::top(abc());
  for (int i = 0; i < 200; ++i) {
    TotalPreorder t = gen::tpo(rng, abc());
    Formula a = gen::satisfiable(rng, abc());
    for (auto mode : {RevisionMode::kNatural, RevisionMode::kLexicographic})
      CHECK(tpo_accepts(revise_tpo(t, a, mode), Conditional(a, top)));
    if (a.tautology()) continue;
    for (auto mode : {ContractionMode::kNatural, ContractionMode::kModerate,
                      ContractionMode::kLexicographic}) {
      TotalPreorder c = contract_tpo(t, a, mode);
      CHECK(c.layers().front().intersects((!a).models()));
    }
  }
}

TEST_CASE("expansion and trivial update") {
  CHECK(expansion(th("a", ab()), f("b", ab())) == th("a & b", ab()));
  CHECK_FALSE(expansion(th("a", ab()), f("!a", ab())).consistent());
  CHECK(expansion(th("d", cd()), Formula::top(cd())) == th("d", cd()));
  CHECK(trivial_update(th("d", cd()), f("!d", cd())) == th("!d", cd()));
  CHECK(trivial_update(th("a", ab()), f("b", ab())) == th("a & b", ab()));
  CHECK(trivial_update(th("a & b", ab()), f("!a", ab())) == th("!a", ab()));
  CHECK(trivial_update(th("bot", ab()), f("a", ab())) == th("a", ab()));
  CHECK_THROWS_AS(trivial_update(th("a", ab()), f("bot", ab())), PreconditionError);
}

TEST_CASE("dalal revision") {
  CHECK(dalal_revision(th("a & b", ab()), f("!a | !b", ab())) == th("a & !b | !a & b", ab()));
  CHECK(dalal_revision(th("a & b", ab()), f("!a & !b", ab())) == th("!a & !b", ab()));
  CHECK(dalal_revision(th("a", ab()), f("b", ab())) == th("a & b", ab()));
  CHECK_THROWS_AS(dalal_revision(th("bot", ab()), f("a", ab())), PreconditionError);
  CHECK_THROWS_AS(dalal_revision(th("a", ab()), f("bot", ab())), PreconditionError);
}

TEST_CASE("dalal revision agrees with the Hamming oracle") {
  std::mt19937_64 rng(8);
  Signature s = sig("a b c d");
  for (int i = 0; i < 300; ++i) {
    BeliefSet k(s, gen::world_set(rng, 16));
    Formula a = gen::satisfiable(rng, s);
    if (!k.consistent()) continue;
    CHECK(mask_of(dalal_revision(k, a).models()) == oracle::dalal(mask_of(k.models()), mask_of(a.models())));
  }
}

TEST_CASE("expansion and trivial update coincide on consistent inputs") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    BeliefSet k(abc(), gen::world_set(rng, 8));
    Formula a = gen::satisfiable(rng, abc());
    if (k.models().intersects(a.models())) CHECK(expansion(k, a) == trivial_update(k, a));
  }
}

TEST_CASE("operator identifiers round trip") {
  for (auto op : kAllChangeOps) CHECK(parse_change_op(to_string(op)) == op);
  CHECK_FALSE(parse_change_op("nope").has_value());
  CHECK_THROWS_AS(apply_beliefset_op(ChangeOp::kNaturalRevision, th("a", ab()), f("a", ab())),
                  InvalidArgument);
  CHECK_THROWS_AS(apply_tpo_op(ChangeOp::kDalal, base_tpo(), f("a", ab())), InvalidArgument);
}

TEST_CASE("language independence of the operators, two atoms") {
  for (auto op : kAllChangeOps) {
    CAPTURE(to_string(op));
    CheckReport r = check_li_change(op, ab(), Strategy::exhaustive_suite());
    if (op == ChangeOp::kDalal) {
      CHECK(r.verdict == Verdict::kViolated);
    } else {
      CHECK(r.verdict == Verdict::kHolds);
      CHECK(r.violations.empty());
    }
    CHECK(r.instances > 0u);
  }
}

TEST_CASE("dalal counterexample from a fixed witness") {
  // Swapping a!b with !a!b keeps K = {ab} but moves the closest A-world.
  BeliefSet k = th("a & b", ab());
  Formula a = f("a & !b | !a & !b", ab());
  ModelTransformation phi = io::parse_transformation(R"(
    from: a b
    to: a b
    a b -> a b
    a !b -> !a !b
    !a b -> !a b
    !a !b -> a !b
  )");
  BeliefSet lhs = apply(phi, dalal_revision(k, a));
  BeliefSet rhs = dalal_revision(apply(phi, k), apply(phi, a));
  CHECK(lhs == th("!a & !b", ab()));
  CHECK(rhs == th("a & !b", ab()));
}

TEST_CASE("language independence, three atoms, randomized") {
  for (auto op : kAllChangeOps) {
    if (op == ChangeOp::kDalal) continue;
    CAPTURE(to_string(op));
    CheckReport r = check_li_change(op, abc(), Strategy::randomized(5, 300));
    CHECK(r.verdict == Verdict::kHolds);
    CHECK(r.instances == 300u);
  }
}

TEST_CASE("violations replay and randomized runs are seed-deterministic") {
  CheckReport r = check_li_change(ChangeOp::kDalal, ab(), Strategy::exhaustive_suite());
  REQUIRE_FALSE(r.violations.empty());
  for (std::size_t i = 0; i < r.violations.size(); i += 7) {
    auto [lhs, rhs] = replay_li_change(ChangeOp::kDalal, ab(), r.violations[i]);
    CHECK(lhs == r.violations[i].lhs);
    CHECK(rhs == r.violations[i].rhs);
  }
  CheckReport x = check_li_change(ChangeOp::kDalal, abc(), Strategy::randomized(77, 500));
  CheckReport y = check_li_change(ChangeOp::kDalal, abc(), Strategy::randomized(77, 500));
  REQUIRE(x.violations.size() == y.violations.size());
  for (std::size_t i = 0; i < x.violations.size(); ++i) {
    CHECK(x.violations[i].inputs == y.violations[i].inputs);
    CHECK(x.violations[i].lhs == y.violations[i].lhs);
  }
}
