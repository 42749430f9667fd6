#pragma once

// Syntax splittings of belief sets, ranking functions and total preorders,
// and splittings with respect to model transformations: a partition of the
// signature together with an endo-transformation of the universe after which
// the object splits along the partition.
//
// Splitting criteria, per cell C with complement D:
//   belief set  Mod(K) = proj_C(Mod K) x proj_D(Mod K)
//   OCF         k(w) = k|C(w|C) + k|D(w|D), marginals by minimum
//   TPO         the order among C-parts is the same in every D-context,
//               and symmetrically

#include <optional>
#include <string>
#include <vector>

#include "epikit/epistemic.hpp"
#include "epikit/logic.hpp"
#include "epikit/transform.hpp"

namespace epikit {

class SignaturePartition {
 public:
  // Cells hold atom positions. Throws InvalidArgument unless the cells are
  // non-empty, disjoint and cover the signature. Stored canonically: atoms
  // ascending inside a cell, cells ordered by their smallest atom.
  SignaturePartition(Signature sig, std::vector<std::vector<std::size_t>> cells);

  // Consecutive blocks of the given sizes: {a0..a(s0-1)}, {...}, ...
  static SignaturePartition blocks(const Signature& sig, const std::vector<std::size_t>& sizes);

  const Signature& signature() const { return sig_; }
  const std::vector<std::vector<std::size_t>>& cells() const { return cells_; }
  std::size_t num_cells() const { return cells_.size(); }
  // All positions outside cell i, ascending.
  std::vector<std::size_t> complement(std::size_t i) const;

  std::string to_string() const;  // "a | b c"

  bool operator==(const SignaturePartition& o) const {
    return sig_ == o.sig_ && cells_ == o.cells_;
  }

 private:
  Signature sig_;
  std::vector<std::vector<std::size_t>> cells_;
};

// "a | b c" -> partition over sig.
SignaturePartition parse_partition(std::string_view text, const Signature& sig);

struct SplittingCertificate {
  SignaturePartition partition;
  ModelTransformation transformation;

  SplittingCertificate(SignaturePartition p, ModelTransformation t);
};

bool is_splitting(const BeliefSet& k, const SignaturePartition& p);
bool is_splitting(const RankingFunction& k, const SignaturePartition& p);
bool is_splitting(const TotalPreorder& t, const SignaturePartition& p);

// Projection of a belief set onto a cell, as a theory over that cell.
BeliefSet restrict_beliefset(const BeliefSet& k, std::span<const std::size_t> cell);
// The theory over the full signature whose models extend those of `sub`
// (a theory over the cell's sub-signature).
BeliefSet lift_beliefset(const BeliefSet& sub, const Signature& sig,
                         std::span<const std::size_t> cell);
// Same for formulas.
Formula restrict_formula(const Formula& f, std::span<const std::size_t> cell);
Formula lift_formula(const Formula& sub, const Signature& sig,
                     std::span<const std::size_t> cell);

bool verify_certificate(const BeliefSet& k, const SplittingCertificate& cert);
bool verify_certificate(const RankingFunction& k, const SplittingCertificate& cert);
bool verify_certificate(const TotalPreorder& t, const SplittingCertificate& cert);

// One way of writing a rank multiset as the sumset of a row multiset (one
// entry per world of the first cell) and a column multiset. Both are sorted
// and have minimum 0.
struct RankFactorization {
  std::vector<Rank> rows;
  std::vector<Rank> cols;
  bool operator==(const RankFactorization&) const = default;
};

// Every factorization of the rank multiset into num_rows x num_cols, in
// canonical (lexicographic by rows) order.
std::vector<RankFactorization> factor_ranks(const std::vector<Rank>& ranks,
                                            std::size_t num_rows, std::size_t num_cols);

// Cell sizes of the sought partition, e.g. {1, 2}. Sizes must be >= 1 and
// sum to the signature size; the partition used is SignaturePartition::blocks.
using SplitSizes = std::vector<std::size_t>;

std::optional<SplittingCertificate> find_splitting(const BeliefSet& k, const SplitSizes& sizes);
std::optional<SplittingCertificate> find_splitting(const RankingFunction& k,
                                                   const SplitSizes& sizes);
// Exhaustive over preorders with the same layer sizes; |Sigma| <= 3.
std::optional<SplittingCertificate> find_splitting(const TotalPreorder& t,
                                                   const SplitSizes& sizes);

// Every certificate the canonical construction yields (one per distinct
// factorization), in the order find_splitting tries them.
std::vector<SplittingCertificate> find_all_splittings(const BeliefSet& k, const SplitSizes& sizes);
std::vector<SplittingCertificate> find_all_splittings(const RankingFunction& k,
                                                      const SplitSizes& sizes);
std::vector<SplittingCertificate> find_all_splittings(const TotalPreorder& t,
                                                      const SplitSizes& sizes);

// The finest partition along which k splits. k must be consistent.
SignaturePartition finest_splitting_beliefset(const BeliefSet& k);

}  // namespace epikit
