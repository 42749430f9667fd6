#include "epikit/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace epikit::io {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// "<key>: <worlds>" -> key text and world indices.
std::pair<std::string, std::vector<std::uint32_t>> parse_world_line(const std::string& line,
                                                                    const Signature& sig) {
  auto colon = line.find(':');
  if (colon == std::string::npos) throw InvalidArgument("expected '<key>: <worlds>' in '" + line + "'");
  std::vector<std::uint32_t> worlds;
  std::string rest = trim(std::string_view(line).substr(colon + 1));
  if (!rest.empty())
    for (const auto& w : split(rest, ',')) worlds.push_back(parse_world(w, sig).index);
  return {trim(std::string_view(line).substr(0, colon)), worlds};
}

std::uint32_t parse_uint(const std::string& s, const char* what) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw InvalidArgument(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

std::string join_worlds(const Signature& sig, const WorldSet& s) {
  std::string out;
  bool first = true;
  s.for_each([&](std::uint32_t w) {
    if (!first) out += ", ";
    first = false;
    out += world_to_string(sig, w);
  });
  return out;
}

}  // namespace

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(std::move(t));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << content;
}

Signature parse_signature(std::string_view text) {
  std::vector<std::string> atoms;
  for (const auto& line : content_lines(text)) {
    std::string token;
    for (char c : line + " ") {
      if (c == ' ' || c == '\t' || c == ',') {
        if (!token.empty()) atoms.push_back(std::move(token));
        token.clear();
      } else {
        token += c;
      }
    }
  }
  return Signature(std::move(atoms));
}

std::string format_signature(const Signature& sig) { return sig.to_string() + "\n"; }

RankingFunction parse_ocf(std::string_view text, const Signature& sig) {
  std::vector<Rank> ranks(sig.universe_size());
  std::vector<bool> seen(sig.universe_size(), false);
  for (const auto& line : content_lines(text)) {
    auto [key, worlds] = parse_world_line(line, sig);
    Rank r = key == "inf" ? Rank::infinity() : Rank(parse_uint(key, "rank"));
    for (auto w : worlds) {
      if (seen[w]) throw InvalidArgument("world " + world_to_string(sig, w) + " ranked twice");
      seen[w] = true;
      ranks[w] = r;
    }
  }
  for (std::uint32_t w = 0; w < seen.size(); ++w)
    if (!seen[w]) throw InvalidArgument("world " + world_to_string(sig, w) + " has no rank");
  return RankingFunction(sig, std::move(ranks));
}

std::string format_ocf(const RankingFunction& k) {
  const Signature& sig = k.signature();
  std::map<Rank, WorldSet> groups;
  for (std::uint32_t w = 0; w < sig.universe_size(); ++w) {
    auto it = groups.try_emplace(k.rank(w), sig.universe_size()).first;
    it->second.set(w);
  }
  std::string out;
  for (const auto& [r, ws] : groups) out += r.to_string() + ": " + join_worlds(sig, ws) + "\n";
  return out;
}

TotalPreorder parse_tpo(std::string_view text, const Signature& sig) {
  std::vector<WorldSet> layers;
  for (const auto& line : content_lines(text)) {
    auto [key, worlds] = parse_world_line(line, sig);
    if (parse_uint(key, "layer index") != layers.size())
      throw InvalidArgument("layer indices must be consecutive from 0");
    WorldSet l(sig.universe_size());
    for (auto w : worlds) l.set(w);
    layers.push_back(std::move(l));
  }
  return TotalPreorder(sig, std::move(layers));
}

std::string format_tpo(const TotalPreorder& t) {
  std::string out;
  for (std::size_t i = 0; i < t.num_layers(); ++i)
    out += std::to_string(i) + ": " + join_worlds(t.signature(), t.layers()[i]) + "\n";
  return out;
}

BeliefSet parse_beliefset(std::string_view text, const Signature& sig) {
  std::vector<Formula> fs;
  for (const auto& line : content_lines(text)) fs.push_back(parse_formula(line, sig));
  return closure_from(fs, sig);
}

std::string format_beliefset(const BeliefSet& k) { return k.as_formula().to_string() + "\n"; }

BeliefBase parse_base(std::string_view text, const Signature& sig) {
  std::vector<Conditional> cs;
  for (const auto& line : content_lines(text)) cs.push_back(parse_conditional(line, sig));
  return BeliefBase(sig, std::move(cs));
}

std::string format_base(const BeliefBase& d) {
  std::string out;
  for (const auto& c : d.conditionals()) out += c.to_string() + "\n";
  return out;
}

ModelTransformation parse_transformation(std::string_view text) {
  std::optional<Signature> from, to;
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const auto& line : content_lines(text)) {
    if (line.rfind("from:", 0) == 0) from = parse_signature(line.substr(5));
    else if (line.rfind("to:", 0) == 0) to = parse_signature(line.substr(3));
    else {
      auto pos = line.find("->");
      if (pos == std::string::npos) throw InvalidArgument("expected '<world> -> <world>' in '" + line + "'");
      arrows.emplace_back(trim(line.substr(0, pos)), trim(line.substr(pos + 2)));
    }
  }
  if (!from || !to) throw InvalidArgument("transformation needs 'from:' and 'to:' headers");
  if (from->size() != to->size())
    throw InvalidArgument("transformation signatures differ in size");
  const std::uint32_t n = from->universe_size();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> table(n, kUnset);
  for (const auto& [src, dst] : arrows) {
    auto s = parse_world(src, *from).index;
    if (table[s] != kUnset) throw InvalidArgument("world '" + src + "' mapped twice");
    table[s] = parse_world(dst, *to).index;
  }
  for (std::uint32_t w = 0; w < n; ++w)
    if (table[w] == kUnset)
      throw InvalidArgument("transformation does not map '" + world_to_string(*from, w) + "'");
  return ModelTransformation(*from, *to, std::move(table));
}

std::string format_transformation(const ModelTransformation& phi) {
  std::string out = "from: " + phi.source().to_string() + "\nto: " + phi.target().to_string() + "\n";
  for (std::uint32_t w = 0; w < phi.table().size(); ++w)
    out += world_to_string(phi.source(), w) + " -> " + world_to_string(phi.target(), phi(w)) + "\n";
  return out;
}

SplittingCertificate parse_certificate(std::string_view text) {
  std::string partition_line;
  std::string rest;
  for (const auto& line : content_lines(text)) {
    if (line.rfind("partition:", 0) == 0) partition_line = line.substr(10);
    else rest += line + "\n";
  }
  if (partition_line.empty()) throw InvalidArgument("certificate needs a 'partition:' line");
  ModelTransformation phi = parse_transformation(rest);
  SignaturePartition partition = parse_partition(partition_line, phi.source());
  return SplittingCertificate(std::move(partition), std::move(phi));
}

std::string format_certificate(const SplittingCertificate& cert) {
  return "partition: " + cert.partition.to_string() + "\n" +
         format_transformation(cert.transformation);
}

}  // namespace epikit::io
