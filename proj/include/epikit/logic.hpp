#pragma once

// Propositional substrate: signatures, worlds, formulas held as model sets,
// belief sets and conditionals.
//
// World encoding: over a signature (a_0, ..., a_{n-1}) a world is the
// integer whose bit (n-1-i) is set iff a_i is true. Index 0 is the
// all-false world; ascending index order is truth-table order with the
// first atom most significant.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epikit/error.hpp"
#include "epikit/world_set.hpp"

namespace epikit {

inline constexpr std::size_t kMaxAtoms = 16;

class Signature {
 public:
  // Throws InvalidArgument on empty, duplicate, malformed or >16 atoms.
  explicit Signature(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_->size(); }
  std::uint32_t universe_size() const { return std::uint32_t{1} << size(); }
  const std::string& atom(std::size_t i) const { return (*atoms_)[i]; }
  std::span<const std::string> atoms() const { return *atoms_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Bit of atom i inside a world index.
  std::uint32_t bit(std::size_t i) const {
    return std::uint32_t{1} << (size() - 1 - i);
  }

  // The signature made of the given atom positions, kept in signature order.
  Signature restrict_to(std::span<const std::size_t> positions) const;

  std::string to_string() const;  // "a b c"

  bool operator==(const Signature& o) const {
    return atoms_ == o.atoms_ || *atoms_ == *o.atoms_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
};

void require_same(const Signature& a, const Signature& b, const char* what);

struct World {
  Signature sig;
  std::uint32_t index;

  World(Signature s, std::uint32_t i);

  bool value(std::size_t atom) const { return index & sig.bit(atom); }

  // Literal form, e.g. "a !b c".
  std::string to_string() const;
  bool operator==(const World& o) const {
    return index == o.index && sig == o.sig;
  }
};

// Parses a world literal ("a !b c"): every atom in signature order, each
// plain or '!'-prefixed.
World parse_world(std::string_view text, const Signature& sig);
std::string world_to_string(const Signature& sig, std::uint32_t index);

std::vector<World> universe(const Signature& sig);

class Formula {
 public:
  Formula(Signature sig, WorldSet models);

  static Formula top(const Signature& sig);
  static Formula bottom(const Signature& sig);
  static Formula atom(const Signature& sig, std::size_t i);
  static Formula of_worlds(const Signature& sig,
                           std::span<const std::uint32_t> worlds);

  const Signature& signature() const { return sig_; }
  const WorldSet& models() const { return models_; }

  bool satisfiable() const { return !models_.empty(); }
  bool tautology() const { return models_.is_full(); }

  Formula operator!() const;
  friend Formula operator&(const Formula& a, const Formula& b);
  friend Formula operator|(const Formula& a, const Formula& b);

  // Canonical DNF: disjunction of full conjunctions, worlds ascending,
  // literals in signature order; "bot" when unsatisfiable.
  std::string to_cdnf() const;
  // Short equivalent form for display: a greedy cover by prime implicants,
  // e.g. "!a" or "(a & !b) | c". Parses back to the same formula.
  std::string to_string() const;

  bool operator==(const Formula& o) const {
    return sig_ == o.sig_ && models_ == o.models_;
  }

 private:
  Signature sig_;
  WorldSet models_;
};

Formula parse_formula(std::string_view text, const Signature& sig);

bool models(const World& w, const Formula& f);
bool entails(const Formula& f, const Formula& g);

// Atoms a formula's truth value depends on (flip-sensitive positions).
std::vector<std::size_t> essential_atoms(const Formula& f);
// True iff the formula is expressible over the given atom positions.
bool within_vocabulary(const Formula& f, std::span<const std::size_t> cell);

// A deductively closed theory, represented by its model set. An empty
// model set is the inconsistent theory.
class BeliefSet {
 public:
  BeliefSet(Signature sig, WorldSet models);

  const Signature& signature() const { return sig_; }
  const WorldSet& models() const { return models_; }
  bool consistent() const { return !models_.empty(); }
  bool contains(const Formula& f) const;
  // Cn of the model set's characteristic formula.
  Formula as_formula() const { return Formula(sig_, models_); }

  std::string to_string() const;  // "Th{...}" in CDNF

  bool operator==(const BeliefSet& o) const {
    return sig_ == o.sig_ && models_ == o.models_;
  }

 private:
  Signature sig_;
  WorldSet models_;
};

// Th(I): the theory of a set of worlds.
BeliefSet theory(std::span<const World> worlds, const Signature& sig);
// Cn(S): closure of a list of formulas over a shared signature.
BeliefSet closure_from(std::span<const Formula> formulas, const Signature& sig);

enum class ConditionalValue { kVerifies, kFalsifies, kNotApplicable };

class Conditional {
 public:
  // (consequent | antecedent)
  Conditional(Formula consequent, Formula antecedent);

  const Formula& consequent() const { return consequent_; }
  const Formula& antecedent() const { return antecedent_; }
  const Signature& signature() const { return antecedent_.signature(); }

  // Worlds satisfying A & B.
  WorldSet verifying() const { return antecedent_.models() & consequent_.models(); }
  // Worlds satisfying A & !B.
  WorldSet falsifying() const { return antecedent_.models() - consequent_.models(); }

  // "(B | A)"; a side that is a disjunction is parenthesized
  std::string to_string() const;

  bool operator==(const Conditional& o) const {
    return consequent_ == o.consequent_ && antecedent_ == o.antecedent_;
  }

 private:
  Formula consequent_;
  Formula antecedent_;
};

ConditionalValue eval_conditional(const World& w, const Conditional& c);

// "(B | A)" with the formula grammar on both sides.
Conditional parse_conditional(std::string_view text, const Signature& sig);

// ---- projections between a signature and one of its sub-signatures ----

// Index of the sub-world obtained by keeping only the given atom positions.
std::uint32_t project_world(const Signature& sig, std::uint32_t world,
                            std::span<const std::size_t> cell);
// Full world agreeing with `sub_world` on `cell` and with `rest` elsewhere.
std::uint32_t embed_world(const Signature& sig, std::uint32_t sub_world,
                          std::span<const std::size_t> cell, std::uint32_t rest);
// Projection of a model set onto the cell (as a set of sub-worlds).
WorldSet project(const Signature& sig, const WorldSet& worlds,
                 std::span<const std::size_t> cell);
// All full worlds whose projection onto the cell lies in `sub_worlds`.
WorldSet cylinder(const Signature& sig, const WorldSet& sub_worlds,
                  std::span<const std::size_t> cell);

}  // namespace epikit
