#include "doctest.h"

#include "epikit/harness.hpp"
#include "epikit/transform.hpp"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace epikit;
using namespace fixtures;

namespace {

World world(const std::string& text, const Signature& s) { return parse_world(text, s); }

}  // namespace

TEST_CASE("example transformation maps the ranking function") {
  CHECK(apply(phi_abc_xyz(), kappa_abc()) == kappa_xyz());
  CHECK(apply(inverse(phi_abc_xyz()), kappa_xyz()) == kappa_abc());
  CHECK(apply(inverse(phi_abc_xyz()), world("!x !y !z", xyz())) == world("a b c", abc()));
}

TEST_CASE("renaming-induced transformations") {
  CHECK(apply(sigma_xyz_abc(), world("x y !z", xyz())) == world("a b !c", abc()));
  CHECK(from_renaming(ab(), ab(), {{"a", "a"}, {"b", "b"}}).is_identity());
  auto swap = from_renaming(ab(), ab(), {{"a", "b"}, {"b", "a"}});
  CHECK(apply(swap, world("a !b", ab())) == world("!a b", ab()));
  CHECK(inverse(swap) == swap);
  CHECK_THROWS_AS(from_renaming(ab(), ab(), {{"a", "b"}, {"b", "b"}}), InvalidArgument);
  CHECK_THROWS_AS(from_renaming(ab(), ab(), {{"a", "b"}}), InvalidArgument);
}

TEST_CASE("composition through the renaming") {
  auto psi = compose(sigma_xyz_abc(), phi_abc_xyz());
  CHECK(psi.source() == abc());
  CHECK(psi.target() == abc());
  CHECK(apply(psi, world("a b c", abc())) == world("!a !b !c", abc()));
  CHECK(compose(phi_abc_xyz(), ModelTransformation::identity(abc())) == phi_abc_xyz());
  CHECK(compose(inverse(phi_abc_xyz()), phi_abc_xyz()).is_identity());
  CHECK_THROWS_AS(compose(phi_abc_xyz(), phi_abc_xyz()), SignatureMismatch);
}

TEST_CASE("transformation of the relevance example belief set") {
  BeliefSet k = th("a & !b | !a & b", ab());
  CHECK(apply(phi_ab_cd(), k) == th("d", cd()));
}

TEST_CASE("transformation validation") {
  CHECK_THROWS_AS(ModelTransformation(ab(), ab(), {0, 0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(ModelTransformation(ab(), abc(), {0, 1, 2, 3}), InvalidArgument);
  CHECK_THROWS_AS(io::parse_transformation("from: a\nto: b\na -> b\n!a -> b"), InvalidArgument);
  CHECK_THROWS_AS(apply(phi_abc_xyz(), kappa_xyz()), SignatureMismatch);
}

TEST_CASE("enumeration") {
  Signature one = sig("p");
  CHECK(all_transformations(one, one).size() == 2u);
  auto all = all_transformations(ab(), ab());
  CHECK(all.size() == 24u);
  CHECK(all.front().is_identity());
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].table() < all[i].table());
  CHECK_THROWS_AS(enumerate_transformations(sig("a b c d"), sig("a b c d"),
                                            [](const ModelTransformation&) { return true; }),
                  InvalidArgument);
}

TEST_CASE("random transformations are seed-deterministic") {
  CHECK(random_transformation(abc(), xyz(), 42) == random_transformation(abc(), xyz(), 42));
  Signature one = sig("p");
  bool seen[2] = {false, false};
  for (std::uint64_t seed = 0; seed < 32; ++seed)
    seen[random_transformation(one, one, seed).is_identity()] = true;
  CHECK(seen[0]);
  CHECK(seen[1]);
  CHECK_THROWS_AS(random_transformation(ab(), abc(), 1), InvalidArgument);
}

// Preservation of satisfaction, entailment and acceptance, exhaustive over
// two atoms.
TEST_CASE("preservation suite, two atoms") {
  const auto phis = all_transformations(ab(), ab());
  const auto sets = all_world_sets(ab());
  std::mt19937_64 rng(3);
  std::vector<RankingFunction> ks{RankingFunction::uniform(ab())};
  for (int i = 0; i < 8; ++i) ks.push_back(gen::ocf(rng, ab(), 3, true));
  const auto tpos = all_preorders(ab());
  std::size_t violations = 0;
  for (const auto& phi : phis) {
    for (const auto& s : sets) {
      Formula a(ab(), s);
      Formula pa = apply(phi, a);
      for (std::uint32_t w = 0; w < 4; ++w)
        violations += models(World(ab(), w), a) != models(apply(phi, World(ab(), w)), pa);
      for (const auto& s2 : sets) {
        Formula b(ab(), s2);
        violations += entails(a, b) != entails(pa, apply(phi, b));
        if (!a.satisfiable()) continue;
        Conditional c(b, a);
        Conditional pc = apply(phi, c);
        for (const auto& k : ks) violations += ocf_accepts(k, c) != ocf_accepts(apply(phi, k), pc);
        for (const auto& t : tpos) violations += tpo_accepts(t, c) != tpo_accepts(apply(phi, t), pc);
      }
    }
  }
  CHECK(violations == 0u);
}

TEST_CASE("preservation suite, three atoms, randomized") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    auto phi = random_transformation(abc(), xyz(), rng());
    Formula a = gen::satisfiable(rng, abc()), b = gen::formula(rng, abc());
    World w(abc(), static_cast<std::uint32_t>(rng() % 8));
    CHECK(models(w, a) == models(apply(phi, w), apply(phi, a)));
    CHECK(entails(a, b) == entails(apply(phi, a), apply(phi, b)));
    Conditional c(b, a);
    RankingFunction k = gen::ocf(rng, abc(), 5, true);
    TotalPreorder t = gen::tpo(rng, abc());
    CHECK(ocf_accepts(k, c) == ocf_accepts(apply(phi, k), apply(phi, c)));
    CHECK(tpo_accepts(t, c) == tpo_accepts(apply(phi, t), apply(phi, c)));
    BeliefSet kb(abc(), gen::world_set(rng, 8));
    CHECK(kb.contains(b) == apply(phi, kb).contains(apply(phi, b)));
    for (std::uint32_t v = 0; v < 8; ++v) CHECK(k.rank(v) == apply(phi, k).rank(phi(v)));
  }
}

TEST_CASE("group laws and functoriality") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto f = random_transformation(abc(), xyz(), rng());
    auto g = random_transformation(xyz(), abc(), rng());
    auto h = random_transformation(abc(), abc(), rng());
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK(compose(f, ModelTransformation::identity(abc())) == f);
    CHECK(compose(ModelTransformation::identity(xyz()), f) == f);
    CHECK(compose(f, inverse(f)).is_identity());
    CHECK(inverse(inverse(f)) == f);

    auto gf = compose(g, f);
    RankingFunction k = gen::ocf(rng, abc(), 4, true);
    TotalPreorder t = gen::tpo(rng, abc());
    Formula a = gen::formula(rng, abc());
    BeliefSet kb(abc(), gen::world_set(rng, 8));
    Conditional c = gen::conditional(rng, abc());
    CHECK(apply(gf, k) == apply(g, apply(f, k)));
    CHECK(apply(gf, t) == apply(g, apply(f, t)));
    CHECK(apply(gf, a) == apply(g, apply(f, a)));
    CHECK(apply(gf, kb) == apply(g, apply(f, kb)));
    CHECK(apply(gf, c) == apply(g, apply(f, c)));
    CHECK(apply(f, t).layer_sizes() == t.layer_sizes());
  }
}
