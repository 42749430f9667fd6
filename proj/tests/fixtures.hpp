#pragma once

// Shared test objects: the two ranking functions and the transformation of
// the three-atom running example, the two-atom transformation used for the
// relevance-postulate example, and the penguin base.

#include <string>

#include "epikit/io.hpp"

namespace fixtures {

using namespace epikit;

inline Signature sig(const std::string& atoms) { return io::parse_signature(atoms); }

inline const Signature& abc() {
  static const Signature s = sig("a b c");
  return s;
}
inline const Signature& xyz() {
  static const Signature s = sig("x y z");
  return s;
}
inline const Signature& ab() {
  static const Signature s = sig("a b");
  return s;
}
inline const Signature& cd() {
  static const Signature s = sig("c d");
  return s;
}
inline const Signature& pbf() {
  static const Signature s = sig("p b f");
  return s;
}

inline RankingFunction kappa_abc() {
  return io::parse_ocf(R"(
    0: !a b c
    1: a !b c, a !b !c
    2: !a !b !c, !a !b c
    3: a b c
    4: a b !c
    5: !a b !c
  )", abc());
}

inline RankingFunction kappa_xyz() {
  return io::parse_ocf(R"(
    0: x y !z
    1: x y z, !x y !z
    2: x !y !z, !x y z
    3: !x !y !z
    4: x !y z
    5: !x !y z
  )", xyz());
}

inline ModelTransformation phi_abc_xyz() {
  return io::parse_transformation(R"(
    from: a b c
    to: x y z
    a b c -> !x !y !z
    !a b c -> x y !z
    a b !c -> x !y z
    !a b !c -> !x !y z
    a !b c -> x y z
    !a !b c -> !x y z
    a !b !c -> !x y !z
    !a !b !c -> x !y !z
  )");
}

// The renaming x->a, y->b, z->c.
inline ModelTransformation sigma_xyz_abc() {
  return from_renaming(xyz(), abc(), {{"x", "a"}, {"y", "b"}, {"z", "c"}});
}

// ab -> c!d, a!b -> cd, !ab -> !cd, !a!b -> !c!d
inline ModelTransformation phi_ab_cd() {
  return io::parse_transformation(R"(
    from: a b
    to: c d
    a b -> c !d
    a !b -> c d
    !a b -> !c d
    !a !b -> !c !d
  )");
}

// The same map as an endo-transformation of {a, b} (c->a, d->b).
inline ModelTransformation phi_ab_endo() {
  return compose(from_renaming(cd(), ab(), {{"c", "a"}, {"d", "b"}}), phi_ab_cd());
}

inline BeliefBase penguin() {
  return io::parse_base(R"(
    (f | b)
    (b | p)
    (!f | p)
  )", pbf());
}

inline Formula f(const std::string& text, const Signature& s) { return parse_formula(text, s); }

inline BeliefSet th(const std::string& text, const Signature& s) {
  return BeliefSet(s, parse_formula(text, s).models());
}

inline TotalPreorder tpo(const std::string& text, const Signature& s) {
  return io::parse_tpo(text, s);
}

}  // namespace fixtures
