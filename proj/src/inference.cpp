#include "epikit/inference.hpp"

#include <algorithm>
#include <random>

namespace epikit {

BeliefBase::BeliefBase(Signature sig, std::vector<Conditional> conditionals)
    : sig_(std::move(sig)) {
  for (auto& c : conditionals) {
    require_same(sig_, c.signature(), "belief base");
    if (std::find(conditionals_.begin(), conditionals_.end(), c) == conditionals_.end())
      conditionals_.push_back(std::move(c));
  }
}

BeliefBase BeliefBase::with(const Conditional& c) const {
  auto cs = conditionals_;
  cs.push_back(c);
  return BeliefBase(sig_, std::move(cs));
}

bool tolerates(const std::vector<Conditional>& base, const Conditional& c) {
  WorldSet candidates = c.verifying();
  for (const auto& d : base) {
    require_same(c.signature(), d.signature(), "tolerates");
    candidates -= d.falsifying();
  }
  return !candidates.empty();
}

std::optional<ZPartition> z_partition(const BeliefBase& d) {
  ZPartition z;
  std::vector<Conditional> rest;
  for (const auto& c : d.conditionals()) {
    if (c.antecedent().satisfiable()) rest.push_back(c);
    else z.vacuous.push_back(c);
  }
  const std::uint32_t n = d.signature().universe_size();
  while (!rest.empty()) {
    WorldSet falsified(n);
    for (const auto& c : rest) falsified |= c.falsifying();
    std::vector<Conditional> layer, remaining;
    for (auto& c : rest) {
      if ((c.verifying() - falsified).empty()) remaining.push_back(std::move(c));
      else layer.push_back(std::move(c));
    }
    if (layer.empty()) return std::nullopt;
    z.strata.push_back(std::move(layer));
    rest = std::move(remaining);
  }
  return z;
}

RankingFunction z_ranking(const ZPartition& z, const Signature& sig) {
  std::vector<Rank> ranks(sig.universe_size(), Rank(0));
  for (std::size_t i = 0; i < z.strata.size(); ++i)
    for (const auto& c : z.strata[i])
      c.falsifying().for_each([&](std::uint32_t w) {
        ranks[w] = std::max(ranks[w], Rank(static_cast<std::uint32_t>(i + 1)));
      });
  return RankingFunction(sig, std::move(ranks));
}

RankingFunction z_ranking(const BeliefBase& d) {
  auto z = z_partition(d);
  if (!z) throw PreconditionError("system Z: the belief base is inconsistent");
  return z_ranking(*z, d.signature());
}

TotalPreorder lex_preorder(const ZPartition& z, const Signature& sig) {
  const std::size_t k = z.strata.size();
  // keys[w][0] counts violations in the most specific stratum.
  std::vector<std::vector<std::uint32_t>> keys(sig.universe_size(),
                                               std::vector<std::uint32_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& c : z.strata[i])
      c.falsifying().for_each([&](std::uint32_t w) { ++keys[w][k - 1 - i]; });
  return tpo_from_keys(sig, keys);
}

std::string_view to_string(InferenceMethod m) {
  switch (m) {
    case InferenceMethod::kP: return "p";
    case InferenceMethod::kZ: return "z";
    case InferenceMethod::kLex: return "lex";
  }
  return "?";
}

std::optional<InferenceMethod> parse_inference_method(std::string_view name) {
  if (name == "p") return InferenceMethod::kP;
  if (name == "z") return InferenceMethod::kZ;
  if (name == "lex") return InferenceMethod::kLex;
  return std::nullopt;
}

InferenceEngine::InferenceEngine(BeliefBase base, InferenceMethod method)
    : base_(std::move(base)), method_(method), partition_(z_partition(base_)) {
  if (method_ == InferenceMethod::kP) return;
  if (!partition_) throw PreconditionError("the belief base is inconsistent");
  if (method_ == InferenceMethod::kZ) ranking_ = z_ranking(*partition_, base_.signature());
  else order_ = lex_preorder(*partition_, base_.signature());
}

bool InferenceEngine::query(const WorldSet& a, const WorldSet& b) const {
  if (a.empty()) return true;
  const WorldSet verifying = a & b;
  const WorldSet falsifying = a - b;
  switch (method_) {
    case InferenceMethod::kP: {
      if (!partition_) return true;
      // a |~ b iff base + (!b | a) admits no Z-partition.
      const Signature& sig = base_.signature();
      Conditional negated(Formula(sig, b.complement()), Formula(sig, a));
      return !z_partition(base_.with(negated)).has_value();
    }
    case InferenceMethod::kZ: {
      Rank v = Rank::infinity(), f = Rank::infinity();
      verifying.for_each([&](std::uint32_t w) { v = std::min(v, ranking_->rank(w)); });
      falsifying.for_each([&](std::uint32_t w) { f = std::min(f, ranking_->rank(w)); });
      return v < f;
    }
    case InferenceMethod::kLex:
      return order_->min_layer(verifying) < order_->min_layer(falsifying);
  }
  return false;
}

bool InferenceEngine::query(const Formula& a, const Formula& b) const {
  require_same(base_.signature(), a.signature(), "infer");
  require_same(base_.signature(), b.signature(), "infer");
  return query(a.models(), b.models());
}

bool infer(const BeliefBase& d, const Formula& a, const Formula& b, InferenceMethod method) {
  return InferenceEngine(d, method).query(a, b);
}

DiTvReport check_di_tv(InferenceMethod method, const BeliefBase& d,
                       const DiTvOptions& options) {
  DiTvReport report;
  const Signature& sig = d.signature();
  report.base_consistent = z_partition(d).has_value();
  if (!report.base_consistent && method != InferenceMethod::kP) {
    report.skipped = true;
  } else {
    InferenceEngine engine(d, method);
    for (const auto& c : d.conditionals()) {
      ++report.di_checked;
      if (!engine.query(c.antecedent(), c.consequent()))
        report.di_violations.push_back(c.to_string());
    }
  }

  InferenceEngine empty(BeliefBase(sig, {}), method);
  const std::uint32_t n = sig.universe_size();
  auto tv_pair = [&](const WorldSet& a, const WorldSet& b) {
    ++report.tv_checked;
    if (empty.query(a, b) && !a.subset_of(b))
      report.tv_violations.push_back(Conditional(Formula(sig, b), Formula(sig, a)).to_string());
  };
  auto set_from_bits = [&](std::uint64_t bits) {
    WorldSet s(n);
    for (std::uint32_t w = 0; w < n; ++w)
      if ((bits >> w) & 1u) s.set(w);
    return s;
  };
  if (n <= options.exhaustive_universe) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < count; ++a)
      for (std::uint64_t b = 0; b < count; ++b) tv_pair(set_from_bits(a), set_from_bits(b));
  } else {
    std::mt19937_64 rng(options.seed);
    auto random_set = [&] {
      WorldSet s(n);
      for (std::uint32_t w = 0; w < n; ++w)
        if (rng() & 1u) s.set(w);
      return s;
    };
    for (std::size_t i = 0; i < options.samples; ++i) {
      WorldSet a = random_set();
      WorldSet b = random_set();
      tv_pair(a, b);
    }
  }
  return report;
}

}  // namespace epikit
