#pragma once

// Belief change: revisions and contractions of total preorders, and
// expansion, trivial update and Dalal revision of belief sets.

#include <optional>
#include <string_view>

#include "epikit/epistemic.hpp"
#include "epikit/logic.hpp"

namespace epikit {

enum class RevisionMode { kNatural, kLexicographic };
enum class ContractionMode { kNatural, kModerate, kLexicographic };

// Throws PreconditionError if `a` is unsatisfiable.
TotalPreorder revise_tpo(const TotalPreorder& t, const Formula& a, RevisionMode mode);
// Throws PreconditionError if `a` is a tautology.
TotalPreorder contract_tpo(const TotalPreorder& t, const Formula& a, ContractionMode mode);

BeliefSet expansion(const BeliefSet& k, const Formula& a);
// Expansion when consistent with k, otherwise Cn(a). `a` must be satisfiable.
BeliefSet trivial_update(const BeliefSet& k, const Formula& a);
// Models of `a` at minimum Hamming distance from Mod(k). Requires k
// consistent and `a` satisfiable.
BeliefSet dalal_revision(const BeliefSet& k, const Formula& a);

// Operator identifiers shared by the harness and the CLI.
enum class ChangeOp {
  kNaturalRevision,
  kLexicographicRevision,
  kNaturalContraction,
  kModerateContraction,
  kLexicographicContraction,
  kExpansion,
  kTrivialUpdate,
  kDalal,
};

inline constexpr ChangeOp kAllChangeOps[] = {
    ChangeOp::kNaturalRevision,     ChangeOp::kLexicographicRevision,
    ChangeOp::kNaturalContraction,  ChangeOp::kModerateContraction,
    ChangeOp::kLexicographicContraction, ChangeOp::kExpansion,
    ChangeOp::kTrivialUpdate,       ChangeOp::kDalal,
};

std::string_view to_string(ChangeOp op);
std::optional<ChangeOp> parse_change_op(std::string_view name);

bool acts_on_tpo(ChangeOp op);
// Operators on belief sets that are revisions (take K, A -> K * A).
bool is_beliefset_op(ChangeOp op);

// Applies a belief-set operator by id.
BeliefSet apply_beliefset_op(ChangeOp op, const BeliefSet& k, const Formula& a);
// Applies a TPO operator by id.
TotalPreorder apply_tpo_op(ChangeOp op, const TotalPreorder& t, const Formula& a);

}  // namespace epikit
