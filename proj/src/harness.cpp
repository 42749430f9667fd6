#include "epikit/harness.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "epikit/io.hpp"

namespace epikit {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds-on-suite";
    case Verdict::kViolated: return "violated";
    case Verdict::kSkipped: return "skipped";
  }
  return "?";
}

void CheckReport::finish() {
  if (verdict == Verdict::kSkipped) return;
  verdict = violations.empty() ? Verdict::kHolds : Verdict::kViolated;
}

// ---- generators ----

namespace {

constexpr std::uint32_t kMaxExhaustiveUniverse = 4;

void require_exhaustive_size(const Signature& sig) {
  if (sig.universe_size() > kMaxExhaustiveUniverse)
    throw InvalidArgument("exhaustive checks need a universe of at most " +
                          std::to_string(kMaxExhaustiveUniverse) + " worlds");
}

WorldSet random_set(std::mt19937_64& rng, std::uint32_t n) {
  WorldSet s(n);
  for (std::uint32_t w = 0; w < n; ++w)
    if (rng() & 1u) s.set(w);
  return s;
}

TotalPreorder random_preorder(std::mt19937_64& rng, const Signature& sig) {
  const std::uint32_t n = sig.universe_size();
  std::vector<std::uint32_t> keys(n);
  for (auto& k : keys) k = static_cast<std::uint32_t>(rng() % n);
  return tpo_from_keys(sig, keys);
}

Formula formula_of(const Signature& sig, WorldSet s) { return Formula(sig, std::move(s)); }

}  // namespace

std::vector<TotalPreorder> all_preorders(const Signature& sig) {
  require_exhaustive_size(sig);
  const std::uint32_t n = sig.universe_size();
  std::vector<TotalPreorder> out;
  std::vector<std::uint32_t> keys(n, 0);
  // Restricted growth over layer indices: keys must use exactly 0..max.
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t w) {
    if (w == n) {
      std::uint32_t mx = *std::max_element(keys.begin(), keys.end());
      std::vector<bool> used(mx + 1, false);
      for (auto k : keys) used[k] = true;
      if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
        out.push_back(tpo_from_keys(sig, keys));
      return;
    }
    for (std::uint32_t k = 0; k < n; ++k) {
      keys[w] = k;
      rec(w + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<WorldSet> all_world_sets(const Signature& sig) {
  require_exhaustive_size(sig);
  const std::uint32_t n = sig.universe_size();
  std::vector<WorldSet> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    WorldSet s(n);
    for (std::uint32_t w = 0; w < n; ++w)
      if ((bits >> w) & 1u) s.set(w);
    out.push_back(std::move(s));
  }
  return out;
}

// ---- language independence of change operators ----

namespace {

bool formula_admissible(ChangeOp op, const WorldSet& a) {
  switch (op) {
    case ChangeOp::kNaturalContraction:
    case ChangeOp::kModerateContraction:
    case ChangeOp::kLexicographicContraction:
      return !a.is_full();
    case ChangeOp::kExpansion:
      return true;
    default:
      return !a.empty();
  }
}

bool state_admissible(ChangeOp op, const WorldSet& k) {
  return op != ChangeOp::kDalal || !k.empty();
}

struct ChangeInstance {
  std::string state;
  std::string lhs, rhs;
};

// Evaluates one (X, Y, phi) triple; returns the formatted sides.
ChangeInstance li_change_instance(ChangeOp op, const Signature& sig, const WorldSet* k_models,
                                  const TotalPreorder* t, const Formula& a,
                                  const ModelTransformation& phi) {
  ChangeInstance r;
  if (acts_on_tpo(op)) {
    r.state = io::format_tpo(*t);
    r.lhs = io::format_tpo(apply(phi, apply_tpo_op(op, *t, a)));
    r.rhs = io::format_tpo(apply_tpo_op(op, apply(phi, *t), apply(phi, a)));
  } else {
    BeliefSet k(sig, *k_models);
    r.state = io::format_beliefset(k);
    r.lhs = io::format_beliefset(apply(phi, apply_beliefset_op(op, k, a)));
    r.rhs = io::format_beliefset(apply_beliefset_op(op, apply(phi, k), apply(phi, a)));
  }
  return r;
}

void record_change(CheckReport& report, const ChangeInstance& inst, const Formula& a,
                   const ModelTransformation& phi) {
  ++report.instances;
  if (inst.lhs == inst.rhs) return;
  Violation v;
  v.inputs["state"] = inst.state;
  v.inputs["formula"] = a.to_string();
  v.inputs["phi"] = io::format_transformation(phi);
  v.lhs = inst.lhs;
  v.rhs = inst.rhs;
  report.violations.push_back(std::move(v));
}

}  // namespace

CheckReport check_li_change(ChangeOp op, const Signature& sig, const Strategy& strategy) {
  CheckReport report;
  report.postulate = "language-independence/" + std::string(to_string(op));
  const std::uint32_t n = sig.universe_size();

  if (strategy.exhaustive) {
    require_exhaustive_size(sig);
    const auto phis = all_transformations(sig, sig);
    const auto sets = all_world_sets(sig);
    std::vector<Formula> inputs;
    for (const auto& s : sets)
      if (formula_admissible(op, s)) inputs.push_back(formula_of(sig, s));
    if (acts_on_tpo(op)) {
      for (const auto& t : all_preorders(sig))
        for (const auto& a : inputs)
          for (const auto& phi : phis)
            record_change(report, li_change_instance(op, sig, nullptr, &t, a, phi), a, phi);
    } else {
      for (const auto& k : sets) {
        if (!state_admissible(op, k)) continue;
        for (const auto& a : inputs)
          for (const auto& phi : phis)
            record_change(report, li_change_instance(op, sig, &k, nullptr, a, phi), a, phi);
      }
    }
  } else {
    std::mt19937_64 rng(strategy.seed);
    while (report.instances < strategy.samples) {
      WorldSet a = random_set(rng, n);
      if (!formula_admissible(op, a)) continue;
      Formula f = formula_of(sig, a);
      ModelTransformation phi = random_transformation(sig, sig, rng());
      if (acts_on_tpo(op)) {
        TotalPreorder t = random_preorder(rng, sig);
        record_change(report, li_change_instance(op, sig, nullptr, &t, f, phi), f, phi);
      } else {
        WorldSet k = random_set(rng, n);
        if (!state_admissible(op, k)) continue;
        record_change(report, li_change_instance(op, sig, &k, nullptr, f, phi), f, phi);
      }
    }
  }
  report.finish();
  return report;
}

std::pair<std::string, std::string> replay_li_change(ChangeOp op, const Signature& sig,
                                                     const Violation& v) {
  Formula a = parse_formula(v.inputs.at("formula"), sig);
  ModelTransformation phi = io::parse_transformation(v.inputs.at("phi"));
  ChangeInstance inst;
  if (acts_on_tpo(op)) {
    TotalPreorder t = io::parse_tpo(v.inputs.at("state"), sig);
    inst = li_change_instance(op, sig, nullptr, &t, a, phi);
  } else {
    BeliefSet k = io::parse_beliefset(v.inputs.at("state"), sig);
    inst = li_change_instance(op, sig, &k.models(), nullptr, a, phi);
  }
  return {inst.lhs, inst.rhs};
}

// ---- language independence of inference ----

namespace {

// Conditionals up to semantic equivalence: (V | V u F) for disjoint V, F.
std::vector<Conditional> canonical_conditionals(const Signature& sig) {
  const std::uint32_t n = sig.universe_size();
  std::uint32_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= 3;
  std::vector<Conditional> out;
  for (std::uint32_t code = 0; code < total; ++code) {
    WorldSet v(n), f(n);
    std::uint32_t c = code;
    for (std::uint32_t w = 0; w < n; ++w, c /= 3) {
      if (c % 3 == 1) v.set(w);
      if (c % 3 == 2) f.set(w);
    }
    out.emplace_back(Formula(sig, v), Formula(sig, v | f));
  }
  return out;
}

std::vector<BeliefBase> small_bases(const Signature& sig, const std::vector<Conditional>& cs) {
  std::vector<BeliefBase> out;
  out.emplace_back(sig, std::vector<Conditional>{});
  for (std::size_t i = 0; i < cs.size(); ++i) out.emplace_back(sig, std::vector{cs[i]});
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) out.emplace_back(sig, std::vector{cs[i], cs[j]});
  return out;
}

BeliefBase apply_base(const ModelTransformation& phi, const BeliefBase& d) {
  std::vector<Conditional> cs;
  for (const auto& c : d.conditionals()) cs.push_back(apply(phi, c));
  return BeliefBase(phi.target(), std::move(cs));
}

Conditional random_conditional(std::mt19937_64& rng, const Signature& sig) {
  const std::uint32_t n = sig.universe_size();
  return Conditional(Formula(sig, random_set(rng, n)), Formula(sig, random_set(rng, n)));
}

BeliefBase random_base(std::mt19937_64& rng, const Signature& sig) {
  std::vector<Conditional> cs;
  const std::size_t size = 1 + rng() % 3;
  for (std::size_t i = 0; i < size; ++i) cs.push_back(random_conditional(rng, sig));
  return BeliefBase(sig, std::move(cs));
}

bool usable(InferenceMethod m, const BeliefBase& d) {
  return m == InferenceMethod::kP || z_partition(d).has_value();
}

void record_inference(CheckReport& report, const BeliefBase& d, const Conditional& q,
                      const ModelTransformation& phi, bool lhs, bool rhs) {
  ++report.instances;
  if (lhs == rhs) return;
  Violation v;
  v.inputs["base"] = io::format_base(d);
  v.inputs["query"] = q.to_string();
  v.inputs["phi"] = io::format_transformation(phi);
  v.lhs = lhs ? "true" : "false";
  v.rhs = rhs ? "true" : "false";
  report.violations.push_back(std::move(v));
}

}  // namespace

CheckReport check_li_inference(InferenceMethod method, const Signature& sig,
                               const Strategy& strategy) {
  CheckReport report;
  report.postulate = "language-independence/" + std::string(to_string(method));
  std::size_t skipped = 0;

  if (strategy.exhaustive) {
    require_exhaustive_size(sig);
    const auto phis = all_transformations(sig, sig);
    const auto queries = canonical_conditionals(sig);
    for (const auto& d : small_bases(sig, queries)) {
      if (!usable(method, d)) {
        ++skipped;
        continue;
      }
      InferenceEngine engine(d, method);
      std::vector<bool> lhs;
      lhs.reserve(queries.size());
      for (const auto& q : queries)
        lhs.push_back(engine.query(q.antecedent(), q.consequent()));
      for (const auto& phi : phis) {
        InferenceEngine moved(apply_base(phi, d), method);
        for (std::size_t i = 0; i < queries.size(); ++i) {
          const auto& q = queries[i];
          bool rhs = moved.query(apply(phi, q.antecedent().models()),
                                 apply(phi, q.consequent().models()));
          record_inference(report, d, q, phi, lhs[i], rhs);
        }
      }
    }
  } else {
    std::mt19937_64 rng(strategy.seed);
    while (report.instances < strategy.samples) {
      BeliefBase d = random_base(rng, sig);
      Conditional q = random_conditional(rng, sig);
      ModelTransformation phi = random_transformation(sig, sig, rng());
      if (!usable(method, d)) {
        ++skipped;
        continue;
      }
      bool lhs = infer(d, q.antecedent(), q.consequent(), method);
      bool rhs = infer(apply_base(phi, d), apply(phi, q.antecedent()),
                       apply(phi, q.consequent()), method);
      record_inference(report, d, q, phi, lhs, rhs);
    }
  }
  if (skipped)
    report.notes.push_back(std::to_string(skipped) + " inconsistent bases skipped");
  report.finish();
  return report;
}

std::pair<std::string, std::string> replay_li_inference(InferenceMethod method,
                                                        const Signature& sig,
                                                        const Violation& v) {
  BeliefBase d = io::parse_base(v.inputs.at("base"), sig);
  Conditional q = parse_conditional(v.inputs.at("query"), sig);
  ModelTransformation phi = io::parse_transformation(v.inputs.at("phi"));
  bool lhs = infer(d, q.antecedent(), q.consequent(), method);
  bool rhs = infer(apply_base(phi, d), apply(phi, q.antecedent()), apply(phi, q.consequent()),
                   method);
  return {lhs ? "true" : "false", rhs ? "true" : "false"};
}

CheckReport check_di_tv_suite(InferenceMethod method, const Signature& sig,
                              const Strategy& strategy) {
  CheckReport report;
  report.postulate = "DI+TV/" + std::string(to_string(method));
  std::vector<BeliefBase> bases;
  if (strategy.exhaustive) {
    require_exhaustive_size(sig);
    bases = small_bases(sig, canonical_conditionals(sig));
  } else {
    std::mt19937_64 rng(strategy.seed);
    for (std::size_t i = 0; i < strategy.samples; ++i) bases.push_back(random_base(rng, sig));
  }
  std::size_t skipped = 0;
  for (const auto& d : bases) {
    if (!usable(method, d)) {
      ++skipped;
      continue;
    }
    InferenceEngine engine(d, method);
    for (const auto& c : d.conditionals()) {
      ++report.instances;
      if (engine.query(c.antecedent(), c.consequent())) continue;
      Violation v;
      v.inputs["base"] = io::format_base(d);
      v.inputs["postulate"] = "DI";
      v.inputs["conditional"] = c.to_string();
      v.lhs = "not inferred";
      v.rhs = "inferred";
      report.violations.push_back(std::move(v));
    }
  }
  DiTvOptions options;
  options.seed = strategy.seed;
  options.samples = strategy.samples;
  DiTvReport tv = check_di_tv(method, BeliefBase(sig, {}), options);
  report.instances += tv.tv_checked;
  for (const auto& pair : tv.tv_violations) {
    Violation v;
    v.inputs["postulate"] = "TV";
    v.inputs["query"] = pair;
    v.lhs = "inferred from the empty base";
    v.rhs = "not entailed";
    report.violations.push_back(std::move(v));
  }
  if (skipped) report.notes.push_back(std::to_string(skipped) + " inconsistent bases skipped");
  report.finish();
  return report;
}

// ---- (P) and (LiP) ----

SplitRevisionTrace split_revision(ChangeOp rev, const BeliefSet& k, const Formula& a,
                                  const ModelTransformation& phi,
                                  const SignaturePartition& partition) {
  if (!is_beliefset_op(rev))
    throw InvalidArgument(std::string(to_string(rev)) + " is not a belief-set operator");
  if (partition.num_cells() != 2)
    throw PreconditionError("the relevance postulates need a two-cell partition");
  require_same(phi.source(), k.signature(), "split_revision");
  require_same(phi.target(), partition.signature(), "split_revision");

  BeliefSet tk = apply(phi, k);
  Formula ta = apply(phi, a);
  if (!is_splitting(tk, partition))
    throw PreconditionError("the belief set does not split along {" + partition.to_string() + "}");
  std::size_t focus;
  if (within_vocabulary(ta, partition.cells()[0])) focus = 0;
  else if (within_vocabulary(ta, partition.cells()[1])) focus = 1;
  else
    throw PreconditionError("the input formula is not expressible over a single cell of {" +
                            partition.to_string() + "}");
  const auto& s1 = partition.cells()[focus];
  const auto& s2 = partition.cells()[1 - focus];
  const Signature& sig = tk.signature();

  BeliefSet focus_part = restrict_beliefset(tk, s1);
  BeliefSet other_part = restrict_beliefset(tk, s2);
  Formula focus_input = restrict_formula(ta, s1);
  BeliefSet revised = apply_beliefset_op(rev, focus_part, focus_input);
  BeliefSet combined = expansion(lift_beliefset(revised, sig, s1),
                                 lift_beliefset(other_part, sig, s2).as_formula());
  BeliefSet rhs = apply(inverse(phi), combined);
  return SplitRevisionTrace{std::move(tk),         std::move(ta),      focus,
                            std::move(focus_part), std::move(other_part),
                            std::move(focus_input), std::move(revised), std::move(combined),
                            std::move(rhs)};
}

namespace {

CheckReport relevance_report(const char* postulate, ChangeOp rev, const BeliefSet& k,
                             const Formula& a, const ModelTransformation& phi,
                             const SignaturePartition& partition,
                             std::map<std::string, std::string> inputs) {
  CheckReport report;
  report.postulate = std::string(postulate) + "/" + std::string(to_string(rev));
  SplitRevisionTrace trace = split_revision(rev, k, a, phi, partition);
  BeliefSet lhs = apply_beliefset_op(rev, k, a);
  report.instances = 1;
  if (!(lhs == trace.rhs)) {
    Violation v;
    v.inputs = std::move(inputs);
    v.lhs = io::format_beliefset(lhs);
    v.rhs = io::format_beliefset(trace.rhs);
    report.violations.push_back(std::move(v));
  }
  report.finish();
  return report;
}

}  // namespace

CheckReport check_p(ChangeOp rev, const BeliefSet& k, const Formula& a,
                    const SignaturePartition& partition) {
  require_same(k.signature(), partition.signature(), "check_p");
  return relevance_report("P", rev, k, a, ModelTransformation::identity(k.signature()), partition,
                          {{"k", io::format_beliefset(k)},
                           {"a", a.to_string()},
                           {"partition", partition.to_string()}});
}

CheckReport check_lip(ChangeOp rev, const BeliefSet& k, const Formula& a,
                      const SplittingCertificate& cert) {
  if (!verify_certificate(k, cert))
    throw PreconditionError("the certificate does not verify on the belief set");
  return relevance_report("LiP", rev, k, a, cert.transformation, cert.partition,
                          {{"k", io::format_beliefset(k)},
                           {"a", a.to_string()},
                           {"certificate", io::format_certificate(cert)}});
}

std::pair<std::string, std::string> replay_p(ChangeOp rev, const Signature& sig,
                                             const Violation& v) {
  BeliefSet k = io::parse_beliefset(v.inputs.at("k"), sig);
  Formula a = parse_formula(v.inputs.at("a"), sig);
  CheckReport r = v.inputs.count("certificate")
                      ? check_lip(rev, k, a, io::parse_certificate(v.inputs.at("certificate")))
                      : check_p(rev, k, a, parse_partition(v.inputs.at("partition"), sig));
  if (r.violations.empty()) {
    std::string same = io::format_beliefset(apply_beliefset_op(rev, k, a));
    return {same, same};
  }
  return {r.violations.front().lhs, r.violations.front().rhs};
}

// ---- (LiP) <=> (P) agreement ----

namespace {

std::vector<SignaturePartition> two_cell_partitions(const Signature& sig) {
  std::vector<SignaturePartition> out;
  const std::size_t n = sig.size();
  // Subsets containing atom 0, excluding the full set.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<std::size_t> first{0}, second;
    for (std::size_t i = 1; i < n; ++i) ((mask >> (i - 1)) & 1u ? first : second).push_back(i);
    if (second.empty()) continue;
    out.emplace_back(sig, std::vector{first, second});
  }
  return out;
}

struct RelevanceInstance {
  BeliefSet k;
  Formula a;
  SignaturePartition partition;
};

// Verdict of one relevance check, or nullopt when its preconditions fail.
template <typename F>
std::optional<Verdict> guarded(F&& f) {
  try {
    return f().verdict;
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

std::string verdict_text(const std::optional<Verdict>& v) {
  return v ? std::string(to_string(*v)) : std::string("precondition-failure");
}

}  // namespace

CheckReport li_p_equivalence_suite(ChangeOp rev, const Signature& sig,
                                   const Strategy& strategy) {
  CheckReport report;
  report.postulate = "LiP<=>P/" + std::string(to_string(rev));
  report.notes.push_back("suite-level evidence: verdict agreement over matched instances");
  if (!is_beliefset_op(rev))
    throw InvalidArgument(std::string(to_string(rev)) + " is not a belief-set operator");

  CheckReport li = check_li_change(rev, sig, strategy);
  if (li.verdict == Verdict::kViolated) {
    report.verdict = Verdict::kSkipped;
    report.notes.push_back(std::string(to_string(rev)) +
                           " is not language independent on this suite (" +
                           std::to_string(li.violations.size()) + " LI violations); skipped");
    return report;
  }

  std::size_t p_violations = 0, lip_violations = 0, skipped = 0;

  auto run = [&](const RelevanceInstance& inst, const ModelTransformation& phi) {
    auto p = guarded([&] { return check_p(rev, inst.k, inst.a, inst.partition); });
    const ModelTransformation back = inverse(phi);
    BeliefSet k2 = apply(back, inst.k);
    Formula a2 = apply(back, inst.a);
    SplittingCertificate cert(inst.partition, phi);
    auto lip = guarded([&] { return check_lip(rev, k2, a2, cert); });
    if (!p && !lip) {
      ++skipped;
      return;
    }
    ++report.instances;
    if (p == Verdict::kViolated) ++p_violations;
    if (lip == Verdict::kViolated) ++lip_violations;
    if (p == lip) return;
    Violation v;
    v.inputs["k"] = io::format_beliefset(inst.k);
    v.inputs["a"] = inst.a.to_string();
    v.inputs["partition"] = inst.partition.to_string();
    v.inputs["lip_k"] = io::format_beliefset(k2);
    v.inputs["lip_a"] = a2.to_string();
    v.inputs["certificate"] = io::format_certificate(cert);
    v.lhs = "P: " + verdict_text(p);
    v.rhs = "LiP: " + verdict_text(lip);
    report.violations.push_back(std::move(v));
  };

  auto product = [&](const SignaturePartition& p, const WorldSet& left, const WorldSet& right) {
    return BeliefSet(sig, cylinder(sig, left, p.cells()[0]) & cylinder(sig, right, p.cells()[1]));
  };

  if (strategy.exhaustive) {
    require_exhaustive_size(sig);
    const auto phis = all_transformations(sig, sig);
    for (const auto& p : two_cell_partitions(sig)) {
      const std::uint32_t n1 = std::uint32_t{1} << p.cells()[0].size();
      const std::uint32_t n2 = std::uint32_t{1} << p.cells()[1].size();
      std::vector<BeliefSet> ks;
      for (std::uint32_t l = 0; l < (1u << n1); ++l)
        for (std::uint32_t r = 0; r < (1u << n2); ++r) {
          WorldSet left(n1), right(n2);
          for (std::uint32_t i = 0; i < n1; ++i) if ((l >> i) & 1u) left.set(i);
          for (std::uint32_t j = 0; j < n2; ++j) if ((r >> j) & 1u) right.set(j);
          BeliefSet k = product(p, left, right);
          if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(std::move(k));
        }
      std::vector<Formula> as;
      for (std::size_t c = 0; c < 2; ++c) {
        const std::uint32_t m = std::uint32_t{1} << p.cells()[c].size();
        for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
          WorldSet s(m);
          for (std::uint32_t i = 0; i < m; ++i) if ((bits >> i) & 1u) s.set(i);
          Formula f(sig, cylinder(sig, s, p.cells()[c]));
          if (std::find(as.begin(), as.end(), f) == as.end()) as.push_back(std::move(f));
        }
      }
      for (const auto& k : ks)
        for (const auto& a : as)
          for (const auto& phi : phis) run({k, a, p}, phi);
    }
  } else {
    std::mt19937_64 rng(strategy.seed);
    const auto partitions = two_cell_partitions(sig);
    for (std::size_t i = 0; i < strategy.samples; ++i) {
      const auto& p = partitions[rng() % partitions.size()];
      const std::uint32_t n1 = std::uint32_t{1} << p.cells()[0].size();
      const std::uint32_t n2 = std::uint32_t{1} << p.cells()[1].size();
      BeliefSet k = product(p, random_set(rng, n1), random_set(rng, n2));
      const std::size_t c = rng() & 1u;
      Formula a(sig, cylinder(sig, random_set(rng, std::uint32_t{1} << p.cells()[c].size()),
                              p.cells()[c]));
      run({k, a, p}, random_transformation(sig, sig, rng()));
    }
  }
  report.notes.push_back("(P) violated on " + std::to_string(p_violations) +
                         " instances, (LiP) violated on " + std::to_string(lip_violations));
  if (skipped)
    report.notes.push_back(std::to_string(skipped) + " instances skipped (preconditions)");
  report.finish();
  return report;
}

}  // namespace epikit
