#include "doctest.h"

#include "epikit/io.hpp"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace epikit;
using namespace fixtures;

TEST_CASE("ocf text round trip") {
  std::string text = io::format_ocf(kappa_abc());
  CHECK(io::parse_ocf(text, abc()) == kappa_abc());
  CHECK(text.rfind("0: !a b c\n1: a !b !c, a !b c\n", 0) == 0);
  Signature a = sig("a");
  CHECK(io::format_ocf(io::parse_ocf("# comment\n0: a\n\ninf: !a\n", a)) == "0: a\ninf: !a\n");
  CHECK_THROWS_AS(io::parse_ocf("x: a\n0: !a", a), InvalidArgument);
  CHECK_THROWS_AS(io::parse_ocf("0 a, !a", a), InvalidArgument);
}

TEST_CASE("other formats round trip") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    TotalPreorder t = gen::tpo(rng, abc());
    CHECK(io::parse_tpo(io::format_tpo(t), abc()) == t);
    BeliefSet k(abc(), gen::world_set(rng, 8));
    CHECK(io::parse_beliefset(io::format_beliefset(k), abc()) == k);
    BeliefBase d = gen::base(rng, abc(), 3);
    CHECK(io::parse_base(io::format_base(d), abc()).conditionals() == d.conditionals());
    auto phi = random_transformation(abc(), xyz(), rng());
    CHECK(io::parse_transformation(io::format_transformation(phi)) == phi);
  }
  SplittingCertificate cert(parse_partition("a | b", ab()), phi_ab_endo());
  auto back = io::parse_certificate(io::format_certificate(cert));
  CHECK(back.partition == cert.partition);
  CHECK(back.transformation == cert.transformation);
  CHECK(io::parse_signature("a, b  c\n") == abc());
}

TEST_CASE("belief set files take the closure of their lines") {
  CHECK(io::parse_beliefset("a\nb | c\n", abc()) == th("a & (b | c)", abc()));
  CHECK(io::parse_beliefset("", ab()).models().is_full());
}

TEST_CASE("transformation files are validated") {
  CHECK_THROWS_AS(io::parse_transformation("to: a\n a -> a\n!a -> !a"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_transformation("from: a\nto: a\na -> a\na -> !a"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_transformation("from: a\nto: a\na -> a"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_transformation("from: a\nto: a b\na -> a b\n!a -> !a b"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_certificate("from: a\nto: a\na -> a\n!a -> !a"), InvalidArgument);
  CHECK_THROWS_AS(io::read_file("/nonexistent/epikit"), InvalidArgument);
}
