#pragma once

// Ranking functions (OCFs) and total preorders over a signature's universe.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "epikit/logic.hpp"

namespace epikit {

// Non-negative integer rank or infinity. Addition saturates at infinity.
class Rank {
 public:
  constexpr Rank() = default;
  constexpr explicit Rank(std::uint32_t v) : value_(v) {}
  static constexpr Rank infinity() { return Rank(kInf); }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr std::uint32_t value() const { return value_; }

  friend constexpr Rank operator+(Rank a, Rank b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Rank(a.value_ + b.value_);
  }
  constexpr auto operator<=>(const Rank&) const = default;

  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(value_);
  }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = 0;
};

class RankingFunction {
 public:
  // One rank per world index; throws InvalidArgument unless some rank is 0.
  RankingFunction(Signature sig, std::vector<Rank> ranks);

  static RankingFunction uniform(const Signature& sig);

  const Signature& signature() const { return sig_; }
  Rank rank(std::uint32_t world) const { return ranks_[world]; }
  const std::vector<Rank>& ranks() const { return ranks_; }

  bool operator==(const RankingFunction& o) const {
    return sig_ == o.sig_ && ranks_ == o.ranks_;
  }

 private:
  Signature sig_;
  std::vector<Rank> ranks_;
};

class TotalPreorder {
 public:
  // Layers must be non-empty, pairwise disjoint and cover the universe.
  TotalPreorder(Signature sig, std::vector<WorldSet> layers);

  const Signature& signature() const { return sig_; }
  const std::vector<WorldSet>& layers() const { return layers_; }
  std::size_t layer_of(std::uint32_t world) const { return layer_index_[world]; }
  std::size_t num_layers() const { return layers_.size(); }

  // w1 <= w2: w1 at least as plausible as w2.
  bool leq(std::uint32_t w1, std::uint32_t w2) const {
    return layer_index_[w1] <= layer_index_[w2];
  }
  // Index of the lowest layer meeting the set, or num_layers() if empty.
  std::size_t min_layer(const WorldSet& worlds) const;
  // The most plausible members of the set.
  WorldSet minimal(const WorldSet& worlds) const;

  std::vector<std::size_t> layer_sizes() const;

  bool operator==(const TotalPreorder& o) const {
    return sig_ == o.sig_ && layers_ == o.layers_;
  }

 private:
  Signature sig_;
  std::vector<WorldSet> layers_;
  std::vector<std::size_t> layer_index_;
};

// Builds a preorder from per-world keys: equal keys share a layer, smaller
// keys come first.
template <typename Key>
TotalPreorder tpo_from_keys(const Signature& sig, const std::vector<Key>& keys);

Rank rank_of_formula(const RankingFunction& k, const Formula& f);
bool ocf_accepts(const RankingFunction& k, const Conditional& c);
bool ocf_accepts_all(const RankingFunction& k, const std::vector<Conditional>& base);
bool tpo_accepts(const TotalPreorder& t, const Conditional& c);
TotalPreorder tpo_from_ocf(const RankingFunction& k);

// Min-marginal onto the atom positions in `sub` (result lives over
// sig.restrict_to(sub)).
RankingFunction ocf_marginal(const RankingFunction& k, std::span<const std::size_t> sub);

// ---- template implementation ----

template <typename Key>
TotalPreorder tpo_from_keys(const Signature& sig, const std::vector<Key>& keys) {
  std::vector<std::uint32_t> order(sig.universe_size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  std::vector<WorldSet> layers;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || keys[order[i - 1]] < keys[order[i]])
      layers.emplace_back(sig.universe_size());
    layers.back().set(order[i]);
  }
  return TotalPreorder(sig, std::move(layers));
}

}  // namespace epikit
