#include "epikit/change.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace epikit {

namespace {

// Original layers intersected with `keep`, empty ones dropped.
std::vector<WorldSet> restricted_layers(const TotalPreorder& t, const WorldSet& keep) {
  std::vector<WorldSet> out;
  for (const auto& l : t.layers()) {
    WorldSet r = l & keep;
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

void append(std::vector<WorldSet>& dst, std::vector<WorldSet> src) {
  for (auto& l : src) dst.push_back(std::move(l));
}

}  // namespace

TotalPreorder revise_tpo(const TotalPreorder& t, const Formula& a, RevisionMode mode) {
  require_same(t.signature(), a.signature(), "revise_tpo");
  if (!a.satisfiable()) throw PreconditionError("revision by an unsatisfiable formula");
  const WorldSet& mods = a.models();
  std::vector<WorldSet> layers;
  switch (mode) {
    case RevisionMode::kNatural: {
      WorldSet best = t.minimal(mods);
      layers.push_back(best);
      append(layers, restricted_layers(t, best.complement()));
      break;
    }
    case RevisionMode::kLexicographic:
      layers = restricted_layers(t, mods);
      append(layers, restricted_layers(t, mods.complement()));
      break;
  }
  return TotalPreorder(t.signature(), std::move(layers));
}

TotalPreorder contract_tpo(const TotalPreorder& t, const Formula& a, ContractionMode mode) {
  require_same(t.signature(), a.signature(), "contract_tpo");
  if (a.tautology()) throw PreconditionError("contraction by a tautology");
  const WorldSet& mods = a.models();
  const WorldSet counter = mods.complement();
  std::vector<WorldSet> layers;
  if (mode == ContractionMode::kLexicographic) {
    auto pos = restricted_layers(t, mods);
    auto neg = restricted_layers(t, counter);
    for (std::size_t i = 0; i < std::max(pos.size(), neg.size()); ++i) {
      WorldSet l(t.signature().universe_size());
      if (i < pos.size()) l |= pos[i];
      if (i < neg.size()) l |= neg[i];
      layers.push_back(std::move(l));
    }
    return TotalPreorder(t.signature(), std::move(layers));
  }

  WorldSet bottom = t.layers().front() | t.minimal(counter);
  layers.push_back(bottom);
  WorldSet rest = bottom.complement();
  if (mode == ContractionMode::kNatural) {
    append(layers, restricted_layers(t, rest));
  } else {
    append(layers, restricted_layers(t, rest & counter));
    append(layers, restricted_layers(t, rest & mods));
  }
  return TotalPreorder(t.signature(), std::move(layers));
}

BeliefSet expansion(const BeliefSet& k, const Formula& a) {
  require_same(k.signature(), a.signature(), "expansion");
  return BeliefSet(k.signature(), k.models() & a.models());
}

BeliefSet trivial_update(const BeliefSet& k, const Formula& a) {
  require_same(k.signature(), a.signature(), "trivial_update");
  if (!a.satisfiable()) throw PreconditionError("update by an unsatisfiable formula");
  WorldSet both = k.models() & a.models();
  if (!both.empty()) return BeliefSet(k.signature(), std::move(both));
  return BeliefSet(k.signature(), a.models());
}

BeliefSet dalal_revision(const BeliefSet& k, const Formula& a) {
  require_same(k.signature(), a.signature(), "dalal_revision");
  if (!a.satisfiable()) throw PreconditionError("revision by an unsatisfiable formula");
  if (!k.consistent()) throw PreconditionError("Dalal revision of an inconsistent belief set");
  const auto kmods = k.models().members();
  auto distance = [&](std::uint32_t w) {
    int best = std::numeric_limits<int>::max();
    for (auto v : kmods) best = std::min(best, std::popcount(w ^ v));
    return best;
  };
  int best = std::numeric_limits<int>::max();
  a.models().for_each([&](std::uint32_t w) { best = std::min(best, distance(w)); });
  WorldSet out(k.signature().universe_size());
  a.models().for_each([&](std::uint32_t w) {
    if (distance(w) == best) out.set(w);
  });
  return BeliefSet(k.signature(), std::move(out));
}

std::string_view to_string(ChangeOp op) {
  switch (op) {
    case ChangeOp::kNaturalRevision: return "natural-revision";
    case ChangeOp::kLexicographicRevision: return "lexicographic-revision";
    case ChangeOp::kNaturalContraction: return "natural-contraction";
    case ChangeOp::kModerateContraction: return "moderate-contraction";
    case ChangeOp::kLexicographicContraction: return "lexicographic-contraction";
    case ChangeOp::kExpansion: return "expansion";
    case ChangeOp::kTrivialUpdate: return "trivial-update";
    case ChangeOp::kDalal: return "dalal";
  }
  return "?";
}

std::optional<ChangeOp> parse_change_op(std::string_view name) {
  for (auto op : kAllChangeOps)
    if (to_string(op) == name) return op;
  return std::nullopt;
}

bool acts_on_tpo(ChangeOp op) {
  switch (op) {
    case ChangeOp::kNaturalRevision:
    case ChangeOp::kLexicographicRevision:
    case ChangeOp::kNaturalContraction:
    case ChangeOp::kModerateContraction:
    case ChangeOp::kLexicographicContraction:
      return true;
    default:
      return false;
  }
}

bool is_beliefset_op(ChangeOp op) { return !acts_on_tpo(op); }

BeliefSet apply_beliefset_op(ChangeOp op, const BeliefSet& k, const Formula& a) {
  switch (op) {
    case ChangeOp::kExpansion: return expansion(k, a);
    case ChangeOp::kTrivialUpdate: return trivial_update(k, a);
    case ChangeOp::kDalal: return dalal_revision(k, a);
    default:
      throw InvalidArgument(std::string(to_string(op)) + " does not act on belief sets");
  }
}

TotalPreorder apply_tpo_op(ChangeOp op, const TotalPreorder& t, const Formula& a) {
  switch (op) {
    case ChangeOp::kNaturalRevision: return revise_tpo(t, a, RevisionMode::kNatural);
    case ChangeOp::kLexicographicRevision: return revise_tpo(t, a, RevisionMode::kLexicographic);
    case ChangeOp::kNaturalContraction: return contract_tpo(t, a, ContractionMode::kNatural);
    case ChangeOp::kModerateContraction: return contract_tpo(t, a, ContractionMode::kModerate);
    case ChangeOp::kLexicographicContraction:
      return contract_tpo(t, a, ContractionMode::kLexicographic);
    default:
      throw InvalidArgument(std::string(to_string(op)) + " does not act on total preorders");
  }
}

}  // namespace epikit
