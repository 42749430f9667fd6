#include "epikit/transform.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace epikit {

ModelTransformation::ModelTransformation(Signature source, Signature target,
                                         std::vector<std::uint32_t> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (source_.size() != target_.size())
    throw InvalidArgument("model transformation needs signatures of the same size");
  const std::uint32_t n = source_.universe_size();
  if (table_.size() != n)
    throw InvalidArgument("transformation table must map every source world");
  std::vector<bool> hit(n, false);
  for (auto t : table_) {
    if (t >= n || hit[t]) throw InvalidArgument("transformation table is not a bijection");
    hit[t] = true;
  }
}

ModelTransformation ModelTransformation::identity(const Signature& sig) {
  std::vector<std::uint32_t> t(sig.universe_size());
  std::iota(t.begin(), t.end(), 0u);
  return ModelTransformation(sig, sig, std::move(t));
}

bool ModelTransformation::is_identity() const {
  if (!(source_ == target_)) return false;
  for (std::uint32_t i = 0; i < table_.size(); ++i)
    if (table_[i] != i) return false;
  return true;
}

ModelTransformation from_renaming(const Signature& source, const Signature& target,
                                  const std::map<std::string, std::string>& sigma) {
  if (source.size() != target.size() || sigma.size() != source.size())
    throw InvalidArgument("renaming must be a total bijection between the signatures");
  // dest[i] = position in target of sigma(source atom i)
  std::vector<std::size_t> dest(source.size());
  std::vector<bool> used(target.size(), false);
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto it = sigma.find(source.atom(i));
    if (it == sigma.end())
      throw InvalidArgument("renaming does not map atom '" + source.atom(i) + "'");
    auto j = target.index_of(it->second);
    if (!j) throw InvalidArgument("renaming target '" + it->second + "' is not in the signature");
    if (used[*j]) throw InvalidArgument("renaming is not injective");
    used[*j] = true;
    dest[i] = *j;
  }
  std::vector<std::uint32_t> table(source.universe_size());
  for (std::uint32_t w = 0; w < table.size(); ++w) {
    std::uint32_t img = 0;
    for (std::size_t i = 0; i < source.size(); ++i)
      if (w & source.bit(i)) img |= target.bit(dest[i]);
    table[w] = img;
  }
  return ModelTransformation(source, target, std::move(table));
}

ModelTransformation compose(const ModelTransformation& outer,
                            const ModelTransformation& inner) {
  require_same(inner.target(), outer.source(), "compose");
  std::vector<std::uint32_t> t(inner.table().size());
  for (std::uint32_t w = 0; w < t.size(); ++w) t[w] = outer(inner(w));
  return ModelTransformation(inner.source(), outer.target(), std::move(t));
}

ModelTransformation inverse(const ModelTransformation& phi) {
  std::vector<std::uint32_t> t(phi.table().size());
  for (std::uint32_t w = 0; w < t.size(); ++w) t[phi(w)] = w;
  return ModelTransformation(phi.target(), phi.source(), std::move(t));
}

ModelTransformation random_transformation(const Signature& s1, const Signature& s2,
                                          std::uint64_t seed) {
  if (s1.size() != s2.size())
    throw InvalidArgument("random_transformation: signature sizes differ");
  std::vector<std::uint32_t> t(s1.universe_size());
  std::iota(t.begin(), t.end(), 0u);
  std::mt19937_64 rng(seed);
  // Fisher-Yates on raw engine output: tables are identical across standard
  // libraries for a given seed.
  for (std::size_t i = t.size(); i > 1; --i) {
    std::uint64_t j = rng() % i;
    std::swap(t[i - 1], t[j]);
  }
  return ModelTransformation(s1, s2, std::move(t));
}

void enumerate_transformations(const Signature& s1, const Signature& s2,
                               const std::function<bool(const ModelTransformation&)>& visit) {
  if (s1.size() != s2.size())
    throw InvalidArgument("enumerate_transformations: signature sizes differ");
  if (s1.universe_size() > 8)
    throw InvalidArgument("enumerate_transformations: universe larger than 8 worlds");
  std::vector<std::uint32_t> t(s1.universe_size());
  std::iota(t.begin(), t.end(), 0u);
  do {
    if (!visit(ModelTransformation(s1, s2, t))) return;
  } while (std::next_permutation(t.begin(), t.end()));
}

std::vector<ModelTransformation> all_transformations(const Signature& s1,
                                                     const Signature& s2) {
  std::vector<ModelTransformation> out;
  enumerate_transformations(s1, s2, [&](const ModelTransformation& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

World apply(const ModelTransformation& phi, const World& w) {
  require_same(phi.source(), w.sig, "apply(world)");
  return World(phi.target(), phi(w.index));
}

WorldSet apply(const ModelTransformation& phi, const WorldSet& s) {
  WorldSet out(phi.target().universe_size());
  s.for_each([&](std::uint32_t w) { out.set(phi(w)); });
  return out;
}

Formula apply(const ModelTransformation& phi, const Formula& f) {
  require_same(phi.source(), f.signature(), "apply(formula)");
  return Formula(phi.target(), apply(phi, f.models()));
}

Conditional apply(const ModelTransformation& phi, const Conditional& c) {
  return Conditional(apply(phi, c.consequent()), apply(phi, c.antecedent()));
}

BeliefSet apply(const ModelTransformation& phi, const BeliefSet& k) {
  require_same(phi.source(), k.signature(), "apply(belief set)");
  return BeliefSet(phi.target(), apply(phi, k.models()));
}

RankingFunction apply(const ModelTransformation& phi, const RankingFunction& k) {
  require_same(phi.source(), k.signature(), "apply(ranking function)");
  std::vector<Rank> r(k.ranks().size());
  for (std::uint32_t w = 0; w < r.size(); ++w) r[phi(w)] = k.rank(w);
  return RankingFunction(phi.target(), std::move(r));
}

TotalPreorder apply(const ModelTransformation& phi, const TotalPreorder& t) {
  require_same(phi.source(), t.signature(), "apply(total preorder)");
  std::vector<WorldSet> layers;
  layers.reserve(t.num_layers());
  for (const auto& l : t.layers()) layers.push_back(apply(phi, l));
  return TotalPreorder(phi.target(), std::move(layers));
}

}  // namespace epikit
