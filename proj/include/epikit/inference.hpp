#pragma once

// Inductive inference from conditional belief bases: tolerance, the
// Z-partition and its ranking, and p-entailment / system Z / lexicographic
// inference.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epikit/epistemic.hpp"
#include "epikit/logic.hpp"

namespace epikit {

class BeliefBase {
 public:
  BeliefBase(Signature sig, std::vector<Conditional> conditionals);

  const Signature& signature() const { return sig_; }
  const std::vector<Conditional>& conditionals() const { return conditionals_; }
  bool empty() const { return conditionals_.empty(); }
  std::size_t size() const { return conditionals_.size(); }

  BeliefBase with(const Conditional& c) const;

 private:
  Signature sig_;
  std::vector<Conditional> conditionals_;
};

// Strata Δ0..Δk. Conditionals whose antecedent is unsatisfiable are kept
// aside in `vacuous`: they are accepted by every state and never falsified.
struct ZPartition {
  std::vector<std::vector<Conditional>> strata;
  std::vector<Conditional> vacuous;
};

bool tolerates(const std::vector<Conditional>& base, const Conditional& c);

// std::nullopt when the base is inconsistent.
std::optional<ZPartition> z_partition(const BeliefBase& d);

// Throws PreconditionError on an inconsistent base.
RankingFunction z_ranking(const BeliefBase& d);
RankingFunction z_ranking(const ZPartition& z, const Signature& sig);

// Worlds ordered by violation vectors, most specific stratum compared first.
TotalPreorder lex_preorder(const ZPartition& z, const Signature& sig);

enum class InferenceMethod { kP, kZ, kLex };

std::string_view to_string(InferenceMethod m);
std::optional<InferenceMethod> parse_inference_method(std::string_view name);

// a |~ b under the chosen method. An unsatisfiable `a` infers everything.
// Throws PreconditionError for z/lex on an inconsistent base.
bool infer(const BeliefBase& d, const Formula& a, const Formula& b, InferenceMethod method);

// Answers repeated queries against one base without rebuilding its model.
class InferenceEngine {
 public:
  InferenceEngine(BeliefBase base, InferenceMethod method);

  bool consistent() const { return partition_.has_value(); }
  bool query(const Formula& a, const Formula& b) const;
  bool query(const WorldSet& a, const WorldSet& b) const;

 private:
  BeliefBase base_;
  InferenceMethod method_;
  std::optional<ZPartition> partition_;
  std::optional<RankingFunction> ranking_;
  std::optional<TotalPreorder> order_;
};

struct DiTvReport {
  bool base_consistent = true;
  bool skipped = false;  // z/lex on an inconsistent base
  std::size_t di_checked = 0;
  std::vector<std::string> di_violations;
  std::size_t tv_checked = 0;
  std::vector<std::string> tv_violations;

  bool holds() const { return di_violations.empty() && tv_violations.empty(); }
};

struct DiTvOptions {
  // TV pairs are exhaustive when the universe has at most this many worlds
  // (16^2 pairs at four worlds), sampled otherwise.
  std::uint32_t exhaustive_universe = 4;
  std::size_t samples = 256;
  std::uint64_t seed = 1;
};

DiTvReport check_di_tv(InferenceMethod method, const BeliefBase& d,
                       const DiTvOptions& options = {});

}  // namespace epikit
