#pragma once

// Postulate checkers: language independence of change and inference
// operators, Parikh's relevance postulate (P), its language independent
// generalization, and the suite-level agreement of the two.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epikit/change.hpp"
#include "epikit/inference.hpp"
#include "epikit/splitting.hpp"

namespace epikit {

enum class Verdict { kHolds, kViolated, kSkipped };

std::string_view to_string(Verdict v);

struct Violation {
  // Named inputs in the text formats of the I/O layer, enough to replay.
  std::map<std::string, std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string postulate;
  std::size_t instances = 0;
  std::vector<Violation> violations;
  Verdict verdict = Verdict::kHolds;
  std::vector<std::string> notes;

  // Sets verdict from the violation list (skipped reports stay skipped).
  void finish();
};

struct Strategy {
  bool exhaustive = true;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;

  static Strategy exhaustive_suite() { return {}; }
  static Strategy randomized(std::uint64_t seed, std::size_t samples) {
    return {false, seed, samples};
  }
};

// ---- instance generators (shared with the CLI and the tests) ----

// Every total preorder over the universe (ordered set partitions).
std::vector<TotalPreorder> all_preorders(const Signature& sig);
// Every subset of the universe.
std::vector<WorldSet> all_world_sets(const Signature& sig);

// ---- language independence ----

// Compares phi(X o Y) with phi(X) o phi(Y). Exhaustive strategies need a
// universe of at most 4 worlds.
CheckReport check_li_change(ChangeOp op, const Signature& sig, const Strategy& strategy);

// Compares a |~_D b with phi(a) |~_phi(D) phi(b). Exhaustive: every base of
// at most two conditionals and every query, up to semantic equivalence of
// conditionals; inconsistent bases are skipped for z/lex and counted in notes.
CheckReport check_li_inference(InferenceMethod method, const Signature& sig,
                               const Strategy& strategy);

// DI and TV over the same battery of bases check_li_inference uses.
CheckReport check_di_tv_suite(InferenceMethod method, const Signature& sig,
                              const Strategy& strategy);

// Recomputes a recorded violation from its inputs; returns {lhs, rhs}.
std::pair<std::string, std::string> replay_li_change(ChangeOp op, const Signature& sig,
                                                     const Violation& v);
std::pair<std::string, std::string> replay_li_inference(InferenceMethod method,
                                                        const Signature& sig,
                                                        const Violation& v);

// ---- (P) and its language independent form ----

// Intermediate values of the right-hand side computation
//   phi^-1( (phi(K) restricted to S1) * phi(A)  +  phi(K) restricted to S2 )
// where S1 is the cell holding phi(A)'s vocabulary.
struct SplitRevisionTrace {
  BeliefSet transformed_k;
  Formula transformed_a;
  std::size_t focus_cell = 0;            // index of S1 in the partition
  BeliefSet focus_part;                  // phi(K) restricted to S1
  BeliefSet other_part;                  // phi(K) restricted to S2
  Formula focus_input;                   // phi(A) over S1
  BeliefSet revised_focus;               // focus_part * focus_input
  BeliefSet combined;                    // lifted revised_focus + lifted other_part
  BeliefSet rhs;                         // phi^-1(combined)
};

// Runs the pipeline for any transformation whose target the partition lives
// over (the target may be a different signature of the same size). Throws
// PreconditionError when phi(K) does not split along the 2-cell partition or
// phi(A) mentions atoms of both cells.
SplitRevisionTrace split_revision(ChangeOp rev, const BeliefSet& k, const Formula& a,
                                  const ModelTransformation& phi,
                                  const SignaturePartition& partition);

CheckReport check_p(ChangeOp rev, const BeliefSet& k, const Formula& a,
                    const SignaturePartition& partition);
CheckReport check_lip(ChangeOp rev, const BeliefSet& k, const Formula& a,
                      const SplittingCertificate& cert);

std::pair<std::string, std::string> replay_p(ChangeOp rev, const Signature& sig,
                                             const Violation& v);

// Matched-battery agreement between (P) verdicts and (LiP) verdicts. Skipped
// (with a note) when `rev` fails check_li_change on the same strategy.
CheckReport li_p_equivalence_suite(ChangeOp rev, const Signature& sig,
                                   const Strategy& strategy);

}  // namespace epikit
