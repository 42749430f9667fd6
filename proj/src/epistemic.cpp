#include "epikit/epistemic.hpp"

#include <algorithm>

namespace epikit {

RankingFunction::RankingFunction(Signature sig, std::vector<Rank> ranks)
    : sig_(std::move(sig)), ranks_(std::move(ranks)) {
  if (ranks_.size() != sig_.universe_size())
    throw InvalidArgument("ranking function must rank every world exactly once");
  if (std::find(ranks_.begin(), ranks_.end(), Rank(0)) == ranks_.end())
    throw InvalidArgument("ranking function needs a world of rank 0");
}

RankingFunction RankingFunction::uniform(const Signature& sig) {
  return RankingFunction(sig, std::vector<Rank>(sig.universe_size(), Rank(0)));
}

TotalPreorder::TotalPreorder(Signature sig, std::vector<WorldSet> layers)
    : sig_(std::move(sig)), layers_(std::move(layers)) {
  const std::uint32_t n = sig_.universe_size();
  layer_index_.assign(n, layers_.size());
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const WorldSet& l = layers_[i];
    if (l.capacity() != n) throw InvalidArgument("layer over a foreign universe");
    if (l.empty()) throw InvalidArgument("total preorder layers must be non-empty");
    l.for_each([&](std::uint32_t w) {
      if (layer_index_[w] != layers_.size())
        throw InvalidArgument("world " + world_to_string(sig_, w) +
                              " occurs in two layers");
      layer_index_[w] = i;
    });
  }
  for (std::uint32_t w = 0; w < n; ++w)
    if (layer_index_[w] == layers_.size())
      throw InvalidArgument("world " + world_to_string(sig_, w) +
                            " is missing from the preorder");
}

std::size_t TotalPreorder::min_layer(const WorldSet& worlds) const {
  std::size_t best = layers_.size();
  worlds.for_each([&](std::uint32_t w) { best = std::min(best, layer_index_[w]); });
  return best;
}

WorldSet TotalPreorder::minimal(const WorldSet& worlds) const {
  std::size_t m = min_layer(worlds);
  if (m == layers_.size()) return WorldSet(sig_.universe_size());
  return layers_[m] & worlds;
}

std::vector<std::size_t> TotalPreorder::layer_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers_) out.push_back(l.count());
  return out;
}

Rank rank_of_formula(const RankingFunction& k, const Formula& f) {
  require_same(k.signature(), f.signature(), "rank_of_formula");
  Rank best = Rank::infinity();
  f.models().for_each([&](std::uint32_t w) { best = std::min(best, k.rank(w)); });
  return best;
}

namespace {

Rank min_rank(const RankingFunction& k, const WorldSet& s) {
  Rank best = Rank::infinity();
  s.for_each([&](std::uint32_t w) { best = std::min(best, k.rank(w)); });
  return best;
}

}  // namespace

bool ocf_accepts(const RankingFunction& k, const Conditional& c) {
  require_same(k.signature(), c.signature(), "ocf_accepts");
  return min_rank(k, c.verifying()) < min_rank(k, c.falsifying());
}

bool ocf_accepts_all(const RankingFunction& k, const std::vector<Conditional>& base) {
  return std::all_of(base.begin(), base.end(),
                     [&](const Conditional& c) { return ocf_accepts(k, c); });
}

bool tpo_accepts(const TotalPreorder& t, const Conditional& c) {
  require_same(t.signature(), c.signature(), "tpo_accepts");
  return t.min_layer(c.verifying()) < t.min_layer(c.falsifying());
}

TotalPreorder tpo_from_ocf(const RankingFunction& k) {
  return tpo_from_keys(k.signature(), k.ranks());
}

RankingFunction ocf_marginal(const RankingFunction& k, std::span<const std::size_t> sub) {
  if (sub.empty()) throw InvalidArgument("marginal onto an empty sub-signature");
  const Signature& sig = k.signature();
  Signature target = sig.restrict_to(sub);
  std::vector<Rank> ranks(target.universe_size(), Rank::infinity());
  for (std::uint32_t w = 0; w < sig.universe_size(); ++w) {
    Rank& r = ranks[project_world(sig, w, sub)];
    r = std::min(r, k.rank(w));
  }
  return RankingFunction(std::move(target), std::move(ranks));
}

}  // namespace epikit
