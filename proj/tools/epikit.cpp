// epikit: command-line front end.
//
// Exit codes: 0 holds / success, 1 violated / nothing found, 2 input error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "epikit/change.hpp"
#include "epikit/harness.hpp"
#include "epikit/inference.hpp"
#include "epikit/io.hpp"
#include "epikit/splitting.hpp"
#include "epikit/transform.hpp"

using namespace epikit;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;

struct Options {
  std::string sig_file, in_file, out_file;
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;

  std::string formula, mode, method, op, phi_file, partition, cert_file, kind, query;
  std::vector<std::size_t> sizes;
  bool all = false;
  bool exhaustive = false;
};

Options opt;

void emit(const std::string& text) {
  if (opt.out_file.empty()) std::cout << text;
  else io::write_file(opt.out_file, text);
}

void emit_json(const json& j) { emit(j.dump(2) + "\n"); }

Signature load_signature() {
  if (opt.sig_file.empty()) throw InvalidArgument("--sig <file> is required");
  return io::parse_signature(io::read_file(opt.sig_file));
}

std::string input_text() {
  if (opt.in_file.empty()) throw InvalidArgument("--in <file> is required");
  return io::read_file(opt.in_file);
}

Formula input_formula(const Signature& sig) {
  if (opt.formula.empty()) throw InvalidArgument("--formula is required");
  return parse_formula(opt.formula, sig);
}

ChangeOp change_op(const std::string& name) {
  auto op = parse_change_op(name);
  if (!op) throw InvalidArgument("unknown operator '" + name + "'");
  return *op;
}

json transformation_json(const ModelTransformation& phi) {
  json map = json::array();
  for (std::uint32_t w = 0; w < phi.table().size(); ++w)
    map.push_back({world_to_string(phi.source(), w), world_to_string(phi.target(), phi(w))});
  return {{"from", phi.source().to_string()}, {"to", phi.target().to_string()}, {"map", map}};
}

json certificate_json(const SplittingCertificate& c) {
  return {{"partition", c.partition.to_string()},
          {"transformation", transformation_json(c.transformation)}};
}

json report_json(const CheckReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"inputs", v.inputs}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return {{"postulate", r.postulate},
          {"instances", r.instances},
          {"violations", violations},
          {"verdict", std::string(to_string(r.verdict))},
          {"notes", r.notes}};
}

std::string report_text(const CheckReport& r, std::size_t shown = 3) {
  std::ostringstream out;
  out << r.postulate << ": " << to_string(r.verdict) << " (" << r.instances << " instances, "
      << r.violations.size() << " violations)\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  for (std::size_t i = 0; i < std::min(shown, r.violations.size()); ++i) {
    const auto& v = r.violations[i];
    out << "  violation " << i + 1 << ":\n";
    for (const auto& [k, text] : v.inputs) {
      out << "    " << k << ":";
      if (text.find('\n') == std::string::npos) {
        out << " " << text << "\n";
      } else {
        out << "\n";
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);) out << "      " << line << "\n";
      }
    }
    auto side = [&](const char* name, const std::string& s) {
      std::string t = s;
      while (!t.empty() && t.back() == '\n') t.pop_back();
      for (auto& ch : t)
        if (ch == '\n') ch = ';';
      out << "    " << name << ": " << t << "\n";
    };
    side("lhs", v.lhs);
    side("rhs", v.rhs);
  }
  return out.str();
}

int finish_report(const CheckReport& r) {
  if (opt.json) emit_json(report_json(r));
  else emit(report_text(r));
  return r.verdict == Verdict::kViolated ? kViolated : kOk;
}

Strategy strategy() {
  return opt.exhaustive ? Strategy::exhaustive_suite()
                        : Strategy::randomized(opt.seed, opt.samples);
}

// ---- verbs ----

int cmd_transform() {
  ModelTransformation phi = io::parse_transformation(io::read_file(opt.phi_file));
  if (!opt.sig_file.empty()) require_same(load_signature(), phi.source(), "transform");
  const Signature& s = phi.source();
  const std::string text = input_text();
  std::string out;
  if (opt.kind == "ocf") out = io::format_ocf(apply(phi, io::parse_ocf(text, s)));
  else if (opt.kind == "tpo") out = io::format_tpo(apply(phi, io::parse_tpo(text, s)));
  else if (opt.kind == "beliefset")
    out = io::format_beliefset(apply(phi, io::parse_beliefset(text, s)));
  else if (opt.kind == "base") {
    BeliefBase d = io::parse_base(text, s);
    std::vector<Conditional> cs;
    for (const auto& c : d.conditionals()) cs.push_back(apply(phi, c));
    out = io::format_base(BeliefBase(phi.target(), std::move(cs)));
  } else {
    throw InvalidArgument("--kind must be ocf, tpo, beliefset or base");
  }
  if (opt.json) emit_json(json{{"signature", phi.target().to_string()}, {"kind", opt.kind}, {"result", out}});
  else emit(out);
  return kOk;
}

int cmd_tpo_change(bool revision) {
  Signature s = load_signature();
  TotalPreorder t = io::parse_tpo(input_text(), s);
  Formula a = input_formula(s);
  TotalPreorder r = t;
  const std::string mode = opt.mode.empty() ? "natural" : opt.mode;
  if (revision) {
    if (mode == "natural") r = revise_tpo(t, a, RevisionMode::kNatural);
    else if (mode == "lexicographic") r = revise_tpo(t, a, RevisionMode::kLexicographic);
    else throw InvalidArgument("--mode must be natural or lexicographic");
  } else {
    if (mode == "natural") r = contract_tpo(t, a, ContractionMode::kNatural);
    else if (mode == "moderate") r = contract_tpo(t, a, ContractionMode::kModerate);
    else if (mode == "lexicographic") r = contract_tpo(t, a, ContractionMode::kLexicographic);
    else throw InvalidArgument("--mode must be natural, moderate or lexicographic");
  }
  if (opt.json) emit_json(json{{"result", io::format_tpo(r)}});
  else emit(io::format_tpo(r));
  return kOk;
}

int cmd_beliefset_change(ChangeOp op) {
  Signature s = load_signature();
  BeliefSet k = io::parse_beliefset(input_text(), s);
  BeliefSet r = apply_beliefset_op(op, k, input_formula(s));
  if (opt.json) emit_json(json{{"result", r.as_formula().to_string()}, {"consistent", r.consistent()}});
  else emit(io::format_beliefset(r));
  return kOk;
}

int cmd_infer() {
  Signature s = load_signature();
  BeliefBase d = io::parse_base(input_text(), s);
  auto method = parse_inference_method(opt.method.empty() ? "z" : opt.method);
  if (!method) throw InvalidArgument("--method must be p, z or lex");
  if (opt.query.empty()) throw InvalidArgument("--query \"(B | A)\" is required");
  Conditional q = parse_conditional(opt.query, s);
  bool yes = infer(d, q.antecedent(), q.consequent(), *method);
  if (opt.json) {
    json j{{"method", std::string(to_string(*method))}, {"query", q.to_string()}, {"inferred", yes}};
    if (auto z = z_partition(d)) {
      json strata = json::array();
      for (const auto& layer : z->strata) {
        json l = json::array();
        for (const auto& c : layer) l.push_back(c.to_string());
        strata.push_back(l);
      }
      j["z_partition"] = strata;
    } else {
      j["z_partition"] = nullptr;
    }
    emit_json(j);
  } else {
    emit(std::string(yes ? "yes" : "no") + "\n");
  }
  return kOk;
}

// Loads the state named by --kind over the signature.
struct State {
  std::optional<BeliefSet> k;
  std::optional<RankingFunction> ocf;
  std::optional<TotalPreorder> tpo;
};

State load_state(const Signature& s) {
  const std::string text = input_text();
  State st;
  if (opt.kind == "ocf") st.ocf = io::parse_ocf(text, s);
  else if (opt.kind == "tpo") st.tpo = io::parse_tpo(text, s);
  else if (opt.kind == "beliefset") st.k = io::parse_beliefset(text, s);
  else throw InvalidArgument("--kind must be ocf, tpo or beliefset");
  return st;
}

int cmd_check_splitting() {
  Signature s = load_signature();
  State st = load_state(s);
  bool ok;
  json j;
  if (!opt.cert_file.empty()) {
    SplittingCertificate cert = io::parse_certificate(io::read_file(opt.cert_file));
    ok = st.k ? verify_certificate(*st.k, cert)
              : st.ocf ? verify_certificate(*st.ocf, cert) : verify_certificate(*st.tpo, cert);
    j["certificate"] = certificate_json(cert);
  } else {
    if (opt.partition.empty()) throw InvalidArgument("--partition or --cert is required");
    SignaturePartition p = parse_partition(opt.partition, s);
    ok = st.k ? is_splitting(*st.k, p) : st.ocf ? is_splitting(*st.ocf, p) : is_splitting(*st.tpo, p);
    j["partition"] = p.to_string();
  }
  j["splits"] = ok;
  if (opt.json) emit_json(j);
  else emit(std::string(ok ? "splits" : "does not split") + "\n");
  return ok ? kOk : kViolated;
}

int cmd_find_splitting() {
  Signature s = load_signature();
  State st = load_state(s);
  if (opt.sizes.empty()) throw InvalidArgument("--sizes p,q is required");
  std::vector<SplittingCertificate> found;
  if (opt.all) {
    found = st.k ? find_all_splittings(*st.k, opt.sizes)
                 : st.ocf ? find_all_splittings(*st.ocf, opt.sizes)
                          : find_all_splittings(*st.tpo, opt.sizes);
  } else {
    auto c = st.k ? find_splitting(*st.k, opt.sizes)
                  : st.ocf ? find_splitting(*st.ocf, opt.sizes) : find_splitting(*st.tpo, opt.sizes);
    if (c) found.push_back(*c);
  }
  if (opt.json) {
    json arr = json::array();
    for (const auto& c : found) arr.push_back(certificate_json(c));
    emit_json(json{{"found", !found.empty()}, {"certificates", arr}});
  } else if (found.empty()) {
    emit("no certificate\n");
  } else {
    std::string out;
    for (std::size_t i = 0; i < found.size(); ++i) {
      if (i) out += "\n";
      out += io::format_certificate(found[i]);
    }
    emit(out);
  }
  return found.empty() ? kViolated : kOk;
}

int cmd_check_li() {
  Signature s = load_signature();
  if (!opt.op.empty() == !opt.method.empty())
    throw InvalidArgument("give exactly one of --op or --method");
  if (!opt.op.empty()) return finish_report(check_li_change(change_op(opt.op), s, strategy()));
  auto m = parse_inference_method(opt.method);
  if (!m) throw InvalidArgument("--method must be p, z or lex");
  return finish_report(check_li_inference(*m, s, strategy()));
}

int cmd_check_p(bool transformed) {
  Signature s = load_signature();
  BeliefSet k = io::parse_beliefset(input_text(), s);
  Formula a = input_formula(s);
  ChangeOp op = change_op(opt.op.empty() ? "trivial-update" : opt.op);
  if (!transformed) {
    if (opt.partition.empty()) throw InvalidArgument("--partition is required");
    return finish_report(check_p(op, k, a, parse_partition(opt.partition, s)));
  }
  if (opt.cert_file.empty()) throw InvalidArgument("--cert is required");
  return finish_report(check_lip(op, k, a, io::parse_certificate(io::read_file(opt.cert_file))));
}

int cmd_suite() {
  Signature s = load_signature();
  const Strategy st = strategy();
  std::vector<CheckReport> reports;
  for (auto op : kAllChangeOps) reports.push_back(check_li_change(op, s, st));
  for (auto m : {InferenceMethod::kP, InferenceMethod::kZ, InferenceMethod::kLex}) {
    reports.push_back(check_li_inference(m, s, st));
    reports.push_back(check_di_tv_suite(m, s, st));
  }
  for (auto op : kAllChangeOps)
    if (is_beliefset_op(op)) reports.push_back(li_p_equivalence_suite(op, s, st));
  bool violated = false;
  for (const auto& r : reports) violated |= r.verdict == Verdict::kViolated;
  if (opt.json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    emit_json(arr);
  } else {
    std::string out;
    for (const auto& r : reports) out += report_text(r, 1);
    emit(out);
  }
  return violated ? kViolated : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epikit: language independence, relevance and splitting checks"};
  app.require_subcommand(1);
  app.add_option("--sig", opt.sig_file, "signature file");
  app.add_option("--in", opt.in_file, "input state file");
  app.add_option("--out", opt.out_file, "write output here instead of stdout");
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--seed", opt.seed, "seed for randomized strategies");
  app.add_option("--samples", opt.samples, "instances for randomized strategies");

  auto verb = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  auto* transform = verb("transform", "apply a model transformation to a state");
  transform->add_option("--phi", opt.phi_file, "transformation file")->required();
  transform->add_option("--kind", opt.kind, "ocf | tpo | beliefset | base")->required();

  auto* revise = verb("revise", "revise a total preorder");
  revise->add_option("--formula", opt.formula)->required();
  revise->add_option("--mode", opt.mode, "natural | lexicographic");
  auto* contract = verb("contract", "contract a total preorder");
  contract->add_option("--formula", opt.formula)->required();
  contract->add_option("--mode", opt.mode, "natural | moderate | lexicographic");

  auto* expand = verb("expand", "expand a belief set");
  auto* update = verb("update", "trivial update of a belief set");
  auto* dalal = verb("dalal", "Dalal revision of a belief set");
  for (auto* sub : {expand, update, dalal}) sub->add_option("--formula", opt.formula)->required();

  auto* inf = verb("infer", "query a conditional belief base");
  inf->add_option("--query", opt.query, "\"(B | A)\"")->required();
  inf->add_option("--method", opt.method, "p | z | lex");

  auto* check_split = verb("check-splitting", "test a partition or a certificate");
  check_split->add_option("--kind", opt.kind, "ocf | tpo | beliefset")->required();
  auto* part_opt = check_split->add_option("--partition", opt.partition, "e.g. \"a | b c\"");
  check_split->add_option("--cert", opt.cert_file, "certificate file")->excludes(part_opt);

  auto* find_split = verb("find-splitting", "search for a splitting certificate");
  find_split->add_option("--kind", opt.kind, "ocf | tpo | beliefset")->required();
  find_split->add_option("--sizes", opt.sizes, "cell sizes, e.g. 1,2")->required()->delimiter(',');
  find_split->add_flag("--all", opt.all, "every certificate of the construction");

  auto* check_li = verb("check-li", "language independence of an operator");
  check_li->add_option("--op", opt.op, "change operator");
  check_li->add_option("--method", opt.method, "inference method");
  check_li->add_flag("--exhaustive", opt.exhaustive, "exhaustive suite (at most 2 atoms)");

  auto* check_p_cmd = verb("check-p", "relevance postulate on one instance");
  check_p_cmd->add_option("--formula", opt.formula)->required();
  check_p_cmd->add_option("--partition", opt.partition)->required();
  check_p_cmd->add_option("--op", opt.op, "belief-set operator (default trivial-update)");

  auto* check_lip_cmd = verb("check-lip", "transformed relevance postulate on one instance");
  check_lip_cmd->add_option("--formula", opt.formula)->required();
  check_lip_cmd->add_option("--cert", opt.cert_file)->required();
  check_lip_cmd->add_option("--op", opt.op, "belief-set operator (default trivial-update)");

  auto* suite = verb("suite", "every check over the signature");
  suite->add_flag("--exhaustive", opt.exhaustive, "exhaustive suite (at most 2 atoms)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*transform) return cmd_transform();
    if (*revise) return cmd_tpo_change(true);
    if (*contract) return cmd_tpo_change(false);
    if (*expand) return cmd_beliefset_change(ChangeOp::kExpansion);
    if (*update) return cmd_beliefset_change(ChangeOp::kTrivialUpdate);
    if (*dalal) return cmd_beliefset_change(ChangeOp::kDalal);
    if (*inf) return cmd_infer();
    if (*check_split) return cmd_check_splitting();
    if (*find_split) return cmd_find_splitting();
    if (*check_li) return cmd_check_li();
    if (*check_p_cmd) return cmd_check_p(false);
    if (*check_lip_cmd) return cmd_check_p(true);
    if (*suite) return cmd_suite();
  } catch (const Error& e) {
    std::cerr << "epikit: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
