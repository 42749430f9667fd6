#pragma once

// Model transformations: bijections between the universes of two signatures
// of equal size, lifted pointwise to every object kind.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "epikit/epistemic.hpp"
#include "epikit/logic.hpp"

namespace epikit {

class ModelTransformation {
 public:
  // table[w] is the image of source world w. Throws InvalidArgument unless
  // the signatures have equal size and the table is a bijection.
  ModelTransformation(Signature source, Signature target,
                      std::vector<std::uint32_t> table);

  static ModelTransformation identity(const Signature& sig);

  const Signature& source() const { return source_; }
  const Signature& target() const { return target_; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  std::uint32_t operator()(std::uint32_t world) const { return table_[world]; }

  bool is_identity() const;

  bool operator==(const ModelTransformation& o) const {
    return source_ == o.source_ && target_ == o.target_ && table_ == o.table_;
  }

 private:
  Signature source_;
  Signature target_;
  std::vector<std::uint32_t> table_;
};

// Transformation induced by an atom bijection source -> target. Keys are
// source atom names.
ModelTransformation from_renaming(const Signature& source, const Signature& target,
                                  const std::map<std::string, std::string>& sigma);

ModelTransformation compose(const ModelTransformation& outer,
                            const ModelTransformation& inner);
ModelTransformation inverse(const ModelTransformation& phi);

// Uniform random bijection, reproducible per seed.
ModelTransformation random_transformation(const Signature& s1, const Signature& s2,
                                          std::uint64_t seed);

// Visits every bijection in lexicographic table order (identity first).
// Requires a universe of at most 8 worlds. Returning false from the visitor
// stops the enumeration.
void enumerate_transformations(const Signature& s1, const Signature& s2,
                               const std::function<bool(const ModelTransformation&)>& visit);
std::vector<ModelTransformation> all_transformations(const Signature& s1,
                                                     const Signature& s2);

// ---- lifting ----

World apply(const ModelTransformation& phi, const World& w);
WorldSet apply(const ModelTransformation& phi, const WorldSet& s);
Formula apply(const ModelTransformation& phi, const Formula& f);
Conditional apply(const ModelTransformation& phi, const Conditional& c);
BeliefSet apply(const ModelTransformation& phi, const BeliefSet& k);
RankingFunction apply(const ModelTransformation& phi, const RankingFunction& k);
TotalPreorder apply(const ModelTransformation& phi, const TotalPreorder& t);

}  // namespace epikit
