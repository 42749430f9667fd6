#include "epikit/splitting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace epikit {

// ---- partitions ----

SignaturePartition::SignaturePartition(Signature sig,
                                       std::vector<std::vector<std::size_t>> cells)
    : sig_(std::move(sig)), cells_(std::move(cells)) {
  std::vector<bool> seen(sig_.size(), false);
  std::size_t covered = 0;
  for (auto& c : cells_) {
    if (c.empty()) throw InvalidArgument("partition cells must be non-empty");
    std::sort(c.begin(), c.end());
    for (auto a : c) {
      if (a >= sig_.size()) throw InvalidArgument("partition names a foreign atom");
      if (seen[a]) throw InvalidArgument("partition cells overlap at '" + sig_.atom(a) + "'");
      seen[a] = true;
      ++covered;
    }
  }
  if (covered != sig_.size()) throw InvalidArgument("partition does not cover the signature");
  std::sort(cells_.begin(), cells_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

SignaturePartition SignaturePartition::blocks(const Signature& sig,
                                              const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> cells;
  std::size_t next = 0;
  for (auto s : sizes) {
    if (s == 0) throw InvalidArgument("split sizes must be positive");
    std::vector<std::size_t> cell;
    for (std::size_t i = 0; i < s; ++i) cell.push_back(next++);
    cells.push_back(std::move(cell));
  }
  if (next != sig.size()) throw InvalidArgument("split sizes must sum to the signature size");
  return SignaturePartition(sig, std::move(cells));
}

std::vector<std::size_t> SignaturePartition::complement(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < sig_.size(); ++a)
    if (!std::binary_search(cells_[i].begin(), cells_[i].end(), a)) out.push_back(a);
  return out;
}

std::string SignaturePartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) out += " | ";
    for (std::size_t j = 0; j < cells_[i].size(); ++j) {
      if (j) out += ' ';
      out += sig_.atom(cells_[i][j]);
    }
  }
  return out;
}

SignaturePartition parse_partition(std::string_view text, const Signature& sig) {
  std::vector<std::vector<std::size_t>> cells(1);
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto idx = sig.index_of(token);
    if (!idx) throw InvalidArgument("partition names unknown atom '" + token + "'");
    cells.back().push_back(*idx);
    token.clear();
  };
  for (char ch : text) {
    if (ch == '|') {
      flush();
      cells.emplace_back();
    } else if (ch == ' ' || ch == '\t' || ch == ',' || ch == '{' || ch == '}') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return SignaturePartition(sig, std::move(cells));
}

SplittingCertificate::SplittingCertificate(SignaturePartition p, ModelTransformation t)
    : partition(std::move(p)), transformation(std::move(t)) {
  if (!(transformation.source() == partition.signature()) ||
      !(transformation.target() == partition.signature()))
    throw InvalidArgument(
        "certificate transformation must map the partitioned signature's universe to itself");
}

// ---- detection ----

namespace {

// Full-world bit patterns of every sub-world of a cell.
std::vector<std::uint32_t> cell_patterns(const Signature& sig, std::span<const std::size_t> cell) {
  std::vector<std::uint32_t> out(std::uint32_t{1} << cell.size());
  for (std::uint32_t s = 0; s < out.size(); ++s) out[s] = embed_world(sig, s, cell, 0);
  return out;
}

bool product_split(const Signature& sig, const WorldSet& models,
                   std::span<const std::size_t> cell, std::span<const std::size_t> rest) {
  WorldSet left = project(sig, models, cell);
  WorldSet right = project(sig, models, rest);
  if (std::uint64_t{left.count()} * right.count() != models.count()) return false;
  auto pc = cell_patterns(sig, cell);
  auto pr = cell_patterns(sig, rest);
  bool ok = true;
  left.for_each([&](std::uint32_t c) {
    right.for_each([&](std::uint32_t r) {
      if (!models.test(pc[c] | pr[r])) ok = false;
    });
  });
  return ok;
}

// Dense ranks of the layer indices of worlds cell-part x fixed context.
std::vector<std::size_t> context_order(const TotalPreorder& t,
                                       const std::vector<std::uint32_t>& parts,
                                       std::uint32_t context) {
  std::vector<std::size_t> layer(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) layer[i] = t.layer_of(parts[i] | context);
  std::vector<std::size_t> distinct = layer;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto& l : layer)
    l = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), l) -
                                 distinct.begin());
  return layer;
}

bool context_independent(const TotalPreorder& t, std::span<const std::size_t> cell,
                         std::span<const std::size_t> rest) {
  const Signature& sig = t.signature();
  auto parts = cell_patterns(sig, cell);
  auto contexts = cell_patterns(sig, rest);
  auto reference = context_order(t, parts, contexts[0]);
  for (std::size_t i = 1; i < contexts.size(); ++i)
    if (context_order(t, parts, contexts[i]) != reference) return false;
  return true;
}

void require_partition_over(const Signature& sig, const SignaturePartition& p) {
  require_same(sig, p.signature(), "is_splitting");
}

}  // namespace

bool is_splitting(const BeliefSet& k, const SignaturePartition& p) {
  require_partition_over(k.signature(), p);
  for (std::size_t i = 0; i < p.num_cells(); ++i)
    if (!product_split(k.signature(), k.models(), p.cells()[i], p.complement(i))) return false;
  return true;
}

bool is_splitting(const RankingFunction& k, const SignaturePartition& p) {
  require_partition_over(k.signature(), p);
  const Signature& sig = k.signature();
  if (p.num_cells() < 2) return true;
  for (std::size_t i = 0; i < p.num_cells(); ++i) {
    const auto& cell = p.cells()[i];
    const auto rest = p.complement(i);
    RankingFunction left = ocf_marginal(k, cell);
    RankingFunction right = ocf_marginal(k, rest);
    for (std::uint32_t w = 0; w < sig.universe_size(); ++w)
      if (k.rank(w) != left.rank(project_world(sig, w, cell)) +
                           right.rank(project_world(sig, w, rest)))
        return false;
  }
  return true;
}

bool is_splitting(const TotalPreorder& t, const SignaturePartition& p) {
  require_partition_over(t.signature(), p);
  if (p.num_cells() < 2) return true;
  for (std::size_t i = 0; i < p.num_cells(); ++i) {
    const auto rest = p.complement(i);
    if (!context_independent(t, p.cells()[i], rest)) return false;
    if (!context_independent(t, rest, p.cells()[i])) return false;
  }
  return true;
}

BeliefSet restrict_beliefset(const BeliefSet& k, std::span<const std::size_t> cell) {
  if (cell.empty()) throw InvalidArgument("restriction to an empty cell");
  const Signature& sig = k.signature();
  return BeliefSet(sig.restrict_to(cell), project(sig, k.models(), cell));
}

BeliefSet lift_beliefset(const BeliefSet& sub, const Signature& sig,
                         std::span<const std::size_t> cell) {
  require_same(sub.signature(), sig.restrict_to(cell), "lift");
  return BeliefSet(sig, cylinder(sig, sub.models(), cell));
}

Formula restrict_formula(const Formula& f, std::span<const std::size_t> cell) {
  if (cell.empty()) throw InvalidArgument("restriction to an empty cell");
  const Signature& sig = f.signature();
  return Formula(sig.restrict_to(cell), project(sig, f.models(), cell));
}

Formula lift_formula(const Formula& sub, const Signature& sig,
                     std::span<const std::size_t> cell) {
  require_same(sub.signature(), sig.restrict_to(cell), "lift");
  return Formula(sig, cylinder(sig, sub.models(), cell));
}

namespace {

void require_endo(const Signature& sig, const SplittingCertificate& cert) {
  require_same(sig, cert.transformation.source(), "verify_certificate");
}

}  // namespace

bool verify_certificate(const BeliefSet& k, const SplittingCertificate& cert) {
  require_endo(k.signature(), cert);
  return is_splitting(apply(cert.transformation, k), cert.partition);
}
bool verify_certificate(const RankingFunction& k, const SplittingCertificate& cert) {
  require_endo(k.signature(), cert);
  return is_splitting(apply(cert.transformation, k), cert.partition);
}
bool verify_certificate(const TotalPreorder& t, const SplittingCertificate& cert) {
  require_endo(t.signature(), cert);
  return is_splitting(apply(cert.transformation, t), cert.partition);
}

// ---- rank multiset factorization ----

namespace {

using Multiset = std::map<std::uint32_t, std::size_t>;

bool take(Multiset& m, std::uint32_t v) {
  auto it = m.find(v);
  if (it == m.end()) return false;
  if (--it->second == 0) m.erase(it);
  return true;
}

// Peels the smallest remaining value: with rows and columns both generated
// in ascending order, it is either the next row value (paired with column 0)
// or the next column value (paired with row 0).
void peel(Multiset remaining, std::vector<std::uint32_t>& rows,
          std::vector<std::uint32_t>& cols, std::size_t want_rows, std::size_t want_cols,
          std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>>& out) {
  if (remaining.empty()) {
    if (rows.size() == want_rows && cols.size() == want_cols) out.emplace(rows, cols);
    return;
  }
  const std::uint32_t m = remaining.begin()->first;
  if (rows.size() < want_rows) {
    Multiset next = remaining;
    bool ok = true;
    for (auto c : cols)
      if (!take(next, m + c)) { ok = false; break; }
    if (ok) {
      rows.push_back(m);
      peel(std::move(next), rows, cols, want_rows, want_cols, out);
      rows.pop_back();
    }
  }
  if (cols.size() < want_cols) {
    Multiset next = remaining;
    bool ok = true;
    for (auto r : rows)
      if (!take(next, r + m)) { ok = false; break; }
    if (ok) {
      cols.push_back(m);
      peel(std::move(next), rows, cols, want_rows, want_cols, out);
      cols.pop_back();
    }
  }
}

}  // namespace

std::vector<RankFactorization> factor_ranks(const std::vector<Rank>& ranks,
                                            std::size_t num_rows, std::size_t num_cols) {
  if (num_rows * num_cols != ranks.size())
    throw InvalidArgument("factor_ranks: grid size does not match the number of worlds");
  Multiset finite;
  std::size_t num_finite = 0;
  for (auto r : ranks)
    if (!r.is_infinite()) {
      ++finite[r.value()];
      ++num_finite;
    }
  std::vector<RankFactorization> out;
  if (num_finite == 0 || finite.begin()->first != 0) return out;

  // Infinite rows/columns absorb whole lines of the grid, so the finite
  // ranks must fill an fr x fc sub-grid exactly.
  for (std::size_t fr = 1; fr <= num_rows; ++fr) {
    if (num_finite % fr) continue;
    const std::size_t fc = num_finite / fr;
    if (fc > num_cols) continue;
    std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> found;
    Multiset rest = finite;
    take(rest, 0);
    std::vector<std::uint32_t> rows{0}, cols{0};
    peel(std::move(rest), rows, cols, fr, fc, found);
    for (const auto& [r, c] : found) {
      RankFactorization f;
      for (auto v : r) f.rows.emplace_back(v);
      f.rows.resize(num_rows, Rank::infinity());
      for (auto v : c) f.cols.emplace_back(v);
      f.cols.resize(num_cols, Rank::infinity());
      out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.rows, x.cols) < std::tie(y.rows, y.cols);
  });
  return out;
}

// ---- discovery ----

namespace {

void check_sizes(const Signature& sig, const SplitSizes& sizes) {
  if (sizes.size() < 2) throw InvalidArgument("split sizes need at least two cells");
  std::size_t total = 0;
  for (auto s : sizes) {
    if (s == 0) throw InvalidArgument("split sizes must be positive");
    total += s;
  }
  if (total != sig.size())
    throw InvalidArgument("split sizes must sum to the signature size");
}

// Bijection sending the worlds of `source_order` to those of `target_order`
// position by position.
ModelTransformation pairing(const Signature& sig, const std::vector<std::uint32_t>& source_order,
                            const std::vector<std::uint32_t>& target_order) {
  std::vector<std::uint32_t> table(sig.universe_size());
  for (std::size_t i = 0; i < source_order.size(); ++i) table[source_order[i]] = target_order[i];
  return ModelTransformation(sig, sig, std::move(table));
}

// Worlds sorted by (key, index).
template <typename Key>
std::vector<std::uint32_t> sorted_by(const std::vector<Key>& keys) {
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  return order;
}

// Lifts an endo-transformation of the tail cells' sub-signature to the full
// signature, leaving the first cell untouched.
ModelTransformation extend_tail(const Signature& sig, std::span<const std::size_t> head,
                                std::span<const std::size_t> tail,
                                const ModelTransformation& tail_phi) {
  std::vector<std::uint32_t> table(sig.universe_size());
  for (std::uint32_t w = 0; w < table.size(); ++w) {
    std::uint32_t h = project_world(sig, w, head);
    std::uint32_t t = project_world(sig, w, tail);
    table[w] = embed_world(sig, tail_phi(t), tail, embed_world(sig, h, head, 0));
  }
  return ModelTransformation(sig, sig, std::move(table));
}

struct Split2 {
  std::vector<std::size_t> head, tail;
  SplitSizes tail_sizes;
};

Split2 split_first(const Signature& sig, const SplitSizes& sizes) {
  Split2 s;
  for (std::size_t i = 0; i < sig.size(); ++i) (i < sizes[0] ? s.head : s.tail).push_back(i);
  s.tail_sizes.assign(sizes.begin() + 1, sizes.end());
  return s;
}

// ---- OCF ----

void ocf_search(const RankingFunction& k, const SplitSizes& sizes, bool all,
                std::vector<SplittingCertificate>& out) {
  const Signature& sig = k.signature();
  const Split2 s = split_first(sig, sizes);
  const std::size_t rows = std::size_t{1} << s.head.size();
  const std::size_t cols = std::size_t{1} << s.tail.size();
  const auto partition = SignaturePartition::blocks(sig, sizes);

  for (const auto& f : factor_ranks(k.ranks(), rows, cols)) {
    // Grid world w carries rows[w|head] + cols[w|tail].
    std::vector<Rank> grid(sig.universe_size());
    for (std::uint32_t w = 0; w < grid.size(); ++w)
      grid[w] = f.rows[project_world(sig, w, s.head)] + f.cols[project_world(sig, w, s.tail)];
    ModelTransformation phi = pairing(sig, sorted_by(k.ranks()), sorted_by(grid));

    if (s.tail_sizes.size() == 1) {
      out.emplace_back(partition, phi);
      if (!all) return;
      continue;
    }
    RankingFunction tail_k(sig.restrict_to(s.tail), f.cols);
    std::vector<SplittingCertificate> inner;
    ocf_search(tail_k, s.tail_sizes, all, inner);
    for (const auto& c : inner) {
      out.emplace_back(partition,
                       compose(extend_tail(sig, s.head, s.tail, c.transformation), phi));
      if (!all) return;
    }
  }
}

// ---- belief sets ----

void beliefset_search(const BeliefSet& k, const SplitSizes& sizes, bool all,
                      std::vector<SplittingCertificate>& out) {
  const Signature& sig = k.signature();
  const Split2 s = split_first(sig, sizes);
  const auto partition = SignaturePartition::blocks(sig, sizes);
  const std::uint32_t m = k.models().count();
  if (m == 0) {
    out.emplace_back(partition, ModelTransformation::identity(sig));
    return;
  }
  const std::uint32_t rows = std::uint32_t{1} << s.head.size();
  const std::uint32_t cols = std::uint32_t{1} << s.tail.size();
  for (std::uint32_t m1 = 1; m1 <= rows; ++m1) {
    if (m % m1 || m / m1 > cols) continue;
    const std::uint32_t m2 = m / m1;
    // Models go onto the grid {row < m1} x {col < m2}.
    std::vector<int> key(sig.universe_size());
    for (std::uint32_t w = 0; w < key.size(); ++w)
      key[w] = (project_world(sig, w, s.head) < m1 && project_world(sig, w, s.tail) < m2) ? 0 : 1;
    std::vector<int> source_key(sig.universe_size());
    for (std::uint32_t w = 0; w < source_key.size(); ++w)
      source_key[w] = k.models().test(w) ? 0 : 1;
    ModelTransformation phi = pairing(sig, sorted_by(source_key), sorted_by(key));

    if (s.tail_sizes.size() == 1) {
      out.emplace_back(partition, phi);
      if (!all) return;
      continue;
    }
    Signature tail_sig = sig.restrict_to(s.tail);
    WorldSet tail_models(tail_sig.universe_size());
    for (std::uint32_t j = 0; j < m2; ++j) tail_models.set(j);
    std::vector<SplittingCertificate> inner;
    beliefset_search(BeliefSet(tail_sig, tail_models), s.tail_sizes, all, inner);
    for (const auto& c : inner) {
      out.emplace_back(partition,
                       compose(extend_tail(sig, s.head, s.tail, c.transformation), phi));
      if (!all) return;
    }
  }
}

// ---- total preorders ----

constexpr std::size_t kMaxTpoSearchAtoms = 3;

void tpo_search(const TotalPreorder& t, const SplitSizes& sizes, bool all,
                std::vector<SplittingCertificate>& out) {
  const Signature& sig = t.signature();
  if (sig.size() > kMaxTpoSearchAtoms)
    throw InvalidArgument("TPO splitting search is limited to " +
                          std::to_string(kMaxTpoSearchAtoms) + " atoms");
  const auto partition = SignaturePartition::blocks(sig, sizes);
  const auto capacity = t.layer_sizes();
  const std::uint32_t n = sig.universe_size();
  std::vector<std::size_t> left = capacity;
  std::vector<std::size_t> assign(n);

  // Source worlds listed layer by layer.
  std::vector<std::uint32_t> source_order;
  for (const auto& l : t.layers()) l.for_each([&](std::uint32_t w) { source_order.push_back(w); });

  bool done = false;
  auto visit = [&](auto&& self, std::uint32_t w) -> void {
    if (done) return;
    if (w == n) {
      auto candidate = tpo_from_keys(sig, assign);
      if (!is_splitting(candidate, partition)) return;
      std::vector<std::uint32_t> target_order;
      for (const auto& l : candidate.layers())
        l.for_each([&](std::uint32_t v) { target_order.push_back(v); });
      out.emplace_back(partition, pairing(sig, source_order, target_order));
      if (!all) done = true;
      return;
    }
    for (std::size_t l = 0; l < left.size(); ++l) {
      if (!left[l]) continue;
      --left[l];
      assign[w] = l;
      self(self, w + 1);
      ++left[l];
    }
  };
  visit(visit, 0);
}

}  // namespace

std::optional<SplittingCertificate> find_splitting(const BeliefSet& k, const SplitSizes& sizes) {
  check_sizes(k.signature(), sizes);
  std::vector<SplittingCertificate> out;
  beliefset_search(k, sizes, false, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::optional<SplittingCertificate> find_splitting(const RankingFunction& k,
                                                   const SplitSizes& sizes) {
  check_sizes(k.signature(), sizes);
  std::vector<SplittingCertificate> out;
  ocf_search(k, sizes, false, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::optional<SplittingCertificate> find_splitting(const TotalPreorder& t,
                                                   const SplitSizes& sizes) {
  check_sizes(t.signature(), sizes);
  std::vector<SplittingCertificate> out;
  tpo_search(t, sizes, false, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<SplittingCertificate> find_all_splittings(const BeliefSet& k,
                                                      const SplitSizes& sizes) {
  check_sizes(k.signature(), sizes);
  std::vector<SplittingCertificate> out;
  beliefset_search(k, sizes, true, out);
  return out;
}

std::vector<SplittingCertificate> find_all_splittings(const RankingFunction& k,
                                                      const SplitSizes& sizes) {
  check_sizes(k.signature(), sizes);
  std::vector<SplittingCertificate> out;
  ocf_search(k, sizes, true, out);
  return out;
}

std::vector<SplittingCertificate> find_all_splittings(const TotalPreorder& t,
                                                      const SplitSizes& sizes) {
  check_sizes(t.signature(), sizes);
  std::vector<SplittingCertificate> out;
  tpo_search(t, sizes, true, out);
  return out;
}

// ---- finest splitting ----

SignaturePartition finest_splitting_beliefset(const BeliefSet& k) {
  if (!k.consistent())
    throw PreconditionError("finest splitting of an inconsistent belief set");
  const Signature& sig = k.signature();
  const std::size_t n = sig.size();

  auto splits_off = [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> rest;
    for (std::size_t a = 0; a < n; ++a)
      if (!std::binary_search(s.begin(), s.end(), a)) rest.push_back(a);
    return rest.empty() || product_split(sig, k.models(), s, rest);
  };

  std::vector<std::vector<std::size_t>> cells;
  std::vector<std::size_t> open(n);
  std::iota(open.begin(), open.end(), 0);
  // The least splitting subset of `open` containing its first atom is a cell
  // of the finest partition; peel cells off one at a time.
  while (!open.empty()) {
    std::vector<std::size_t> found = open;
    const std::size_t head = open.front();
    const std::size_t m = open.size() - 1;
    bool done = false;
    for (std::size_t extra = 0; extra < m && !done; ++extra) {
      std::vector<bool> pick(m, false);
      std::fill(pick.begin(), pick.begin() + extra, true);
      do {
        std::vector<std::size_t> s{head};
        for (std::size_t i = 0; i < m; ++i)
          if (pick[i]) s.push_back(open[i + 1]);
        std::sort(s.begin(), s.end());
        if (splits_off(s)) {
          found = s;
          done = true;
          break;
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    cells.push_back(found);
    std::vector<std::size_t> next;
    for (auto a : open)
      if (!std::binary_search(found.begin(), found.end(), a)) next.push_back(a);
    open = std::move(next);
  }
  return SignaturePartition(sig, std::move(cells));
}

}  // namespace epikit
