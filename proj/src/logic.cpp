#include "epikit/logic.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <sstream>

namespace epikit {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

}  // namespace

Signature::Signature(std::vector<std::string> atoms) {
  if (atoms.empty()) throw InvalidArgument("signature must not be empty");
  if (atoms.size() > kMaxAtoms)
    throw InvalidArgument("signature exceeds " + std::to_string(kMaxAtoms) +
                          " atoms");
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    if (!valid_identifier(a) || a == "top" || a == "bot")
      throw InvalidArgument("invalid atom name '" + a + "'");
    if (!seen.insert(a).second)
      throw InvalidArgument("duplicate atom '" + a + "'");
  }
  atoms_ = std::make_shared<const std::vector<std::string>>(std::move(atoms));
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < atoms_->size(); ++i)
    if ((*atoms_)[i] == name) return i;
  return std::nullopt;
}

Signature Signature::restrict_to(std::span<const std::size_t> positions) const {
  std::vector<std::size_t> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> out;
  for (auto p : sorted) {
    if (p >= size()) throw InvalidArgument("atom position out of range");
    out.push_back(atom(p));
  }
  return Signature(std::move(out));
}

std::string Signature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += atom(i);
  }
  return out;
}

void require_same(const Signature& a, const Signature& b, const char* what) {
  if (!(a == b))
    throw SignatureMismatch(std::string(what) + ": signature mismatch ({" +
                            a.to_string() + "} vs {" + b.to_string() + "})");
}

World::World(Signature s, std::uint32_t i) : sig(std::move(s)), index(i) {
  if (index >= sig.universe_size())
    throw InvalidArgument("world index out of range");
}

std::string world_to_string(const Signature& sig, std::uint32_t index) {
  std::string out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out += ' ';
    if (!(index & sig.bit(i))) out += '!';
    out += sig.atom(i);
  }
  return out;
}

std::string World::to_string() const { return world_to_string(sig, index); }

World parse_world(std::string_view text, const Signature& sig) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::size_t pos = 0;
  std::uint32_t index = 0;
  while (in >> tok) {
    bool neg = false;
    std::string name = tok;
    if (!name.empty() && name[0] == '!') {
      neg = true;
      name = name.substr(1);
    }
    if (pos >= sig.size())
      throw InvalidArgument("world '" + std::string(text) + "' has too many literals");
    if (name != sig.atom(pos))
      throw InvalidArgument("world '" + std::string(text) + "': expected atom '" +
                            sig.atom(pos) + "', got '" + name + "'");
    if (!neg) index |= sig.bit(pos);
    ++pos;
  }
  if (pos != sig.size())
    throw InvalidArgument("world '" + std::string(text) + "' has too few literals");
  return World(sig, index);
}

std::vector<World> universe(const Signature& sig) {
  std::vector<World> out;
  out.reserve(sig.universe_size());
  for (std::uint32_t i = 0; i < sig.universe_size(); ++i) out.emplace_back(sig, i);
  return out;
}

// ---- Formula ----

Formula::Formula(Signature sig, WorldSet models)
    : sig_(std::move(sig)), models_(std::move(models)) {
  if (models_.capacity() != sig_.universe_size())
    throw InvalidArgument("model set does not match the signature's universe");
}

Formula Formula::top(const Signature& sig) {
  return Formula(sig, WorldSet::full(sig.universe_size()));
}
Formula Formula::bottom(const Signature& sig) {
  return Formula(sig, WorldSet(sig.universe_size()));
}
Formula Formula::atom(const Signature& sig, std::size_t i) {
  WorldSet s(sig.universe_size());
  for (std::uint32_t w = 0; w < sig.universe_size(); ++w)
    if (w & sig.bit(i)) s.set(w);
  return Formula(sig, std::move(s));
}
Formula Formula::of_worlds(const Signature& sig,
                           std::span<const std::uint32_t> worlds) {
  WorldSet s(sig.universe_size());
  for (auto w : worlds) {
    if (w >= sig.universe_size()) throw InvalidArgument("foreign world");
    s.set(w);
  }
  return Formula(sig, std::move(s));
}

Formula Formula::operator!() const { return Formula(sig_, models_.complement()); }

Formula operator&(const Formula& a, const Formula& b) {
  require_same(a.sig_, b.sig_, "conjunction");
  return Formula(a.sig_, a.models_ & b.models_);
}
Formula operator|(const Formula& a, const Formula& b) {
  require_same(a.sig_, b.sig_, "disjunction");
  return Formula(a.sig_, a.models_ | b.models_);
}

std::string Formula::to_cdnf() const {
  if (models_.empty()) return "bot";
  std::string out;
  bool first = true;
  models_.for_each([&](std::uint32_t w) {
    if (!first) out += " | ";
    first = false;
    out += '(';
    for (std::size_t i = 0; i < sig_.size(); ++i) {
      if (i) out += " & ";
      if (!(w & sig_.bit(i))) out += '!';
      out += sig_.atom(i);
    }
    out += ')';
  });
  return out;
}

namespace {

struct Cube {
  std::uint32_t care;   // world bits the cube fixes
  std::uint32_t value;  // their values
};

bool cube_inside(const Cube& c, const WorldSet& models, std::uint32_t universe) {
  // Walk the free bits as a subset of ~care.
  const std::uint32_t free = ~c.care & (universe - 1);
  std::uint32_t sub = 0;
  do {
    if (!models.test(c.value | sub)) return false;
    sub = (sub - free) & free;
  } while (sub != 0);
  return true;
}

}  // namespace

std::string Formula::to_string() const {
  if (models_.empty()) return "bot";
  if (models_.is_full()) return "top";
  const std::size_t n = sig_.size();
  if (n > 8) return to_cdnf();
  const std::uint32_t universe = sig_.universe_size();

  // Implicants, fewest literals first.
  std::vector<Cube> implicants;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::uint32_t care = 0; care < universe; ++care) {
      if (std::popcount(care) != static_cast<int>(k)) continue;
      std::uint32_t value = 0;
      do {
        Cube c{care, value};
        if (cube_inside(c, models_, universe)) implicants.push_back(c);
        value = (value - care) & care;
      } while (value != 0);
    }

  WorldSet uncovered = models_;
  std::vector<Cube> chosen;
  while (!uncovered.empty()) {
    const Cube* best = nullptr;
    std::size_t best_gain = 0;
    for (const auto& c : implicants) {
      std::size_t gain = 0;
      uncovered.for_each([&](std::uint32_t w) { gain += (w & c.care) == c.value; });
      if (gain > best_gain) {
        best = &c;
        best_gain = gain;
      }
    }
    chosen.push_back(*best);
    WorldSet next(universe);
    uncovered.for_each([&](std::uint32_t w) {
      if ((w & best->care) != best->value) next.set(w);
    });
    uncovered = next;
  }

  // Display order: shorter cubes first, then by atom with a negative literal
  // before a positive one before a missing one.
  auto code = [&](const Cube& c) {
    std::vector<int> v{std::popcount(c.care)};
    for (std::size_t i = 0; i < n; ++i)
      v.push_back(!(c.care & sig_.bit(i)) ? 2 : (c.value & sig_.bit(i)) ? 1 : 0);
    return v;
  };
  std::sort(chosen.begin(), chosen.end(),
            [&](const Cube& x, const Cube& y) { return code(x) < code(y); });

  std::string out;
  for (std::size_t j = 0; j < chosen.size(); ++j) {
    std::string cube;
    int literals = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(chosen[j].care & sig_.bit(i))) continue;
      if (literals++) cube += " & ";
      if (!(chosen[j].value & sig_.bit(i))) cube += '!';
      cube += sig_.atom(i);
    }
    if (j) out += " | ";
    out += (chosen.size() > 1 && literals > 1) ? "(" + cube + ")" : cube;
  }
  return out;
}

// ---- parser ----

namespace {

// Grammar, lowest precedence first:
//   equiv := impl ( "<->" equiv )?
//   impl  := disj ( "->" impl )?
//   disj  := conj ( "|" conj )*
//   conj  := unary ( "&" unary )*
//   unary := "!" unary | atom | "top" | "bot" | "(" equiv ")"
class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Formula parse() {
    Formula f = equiv();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula equiv() {
    Formula lhs = impl();
    if (accept("<->")) {
      Formula rhs = equiv();
      return (lhs & rhs) | ((!lhs) & (!rhs));
    }
    return lhs;
  }
  Formula impl() {
    Formula lhs = disj();
    if (accept("->")) {
      Formula rhs = impl();
      return (!lhs) | rhs;
    }
    return lhs;
  }
  Formula disj() {
    Formula f = conj();
    while (accept("|")) f = f | conj();
    return f;
  }
  Formula conj() {
    Formula f = unary();
    while (accept("&")) f = f & unary();
    return f;
  }
  Formula unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("!")) return !unary();
    if (accept("(")) {
      Formula f = equiv();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    if (!is_ident_start(text_[pos_])) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name == "top") return Formula::top(sig_);
    if (name == "bot") return Formula::bottom(sig_);
    auto idx = sig_.index_of(name);
    if (!idx) throw ParseError("unknown atom '" + name + "'", start);
    return Formula::atom(sig_, *idx);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
  return Parser(text, sig).parse();
}

bool models(const World& w, const Formula& f) {
  require_same(w.sig, f.signature(), "models");
  return f.models().test(w.index);
}

bool entails(const Formula& f, const Formula& g) {
  require_same(f.signature(), g.signature(), "entails");
  return f.models().subset_of(g.models());
}

std::vector<std::size_t> essential_atoms(const Formula& f) {
  const Signature& sig = f.signature();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    std::uint32_t b = sig.bit(i);
    for (std::uint32_t w = 0; w < sig.universe_size(); ++w) {
      if (f.models().test(w) != f.models().test(w ^ b)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

bool within_vocabulary(const Formula& f, std::span<const std::size_t> cell) {
  for (auto a : essential_atoms(f))
    if (std::find(cell.begin(), cell.end(), a) == cell.end()) return false;
  return true;
}

// ---- BeliefSet ----

BeliefSet::BeliefSet(Signature sig, WorldSet models)
    : sig_(std::move(sig)), models_(std::move(models)) {
  if (models_.capacity() != sig_.universe_size())
    throw InvalidArgument("model set does not match the signature's universe");
}

bool BeliefSet::contains(const Formula& f) const {
  require_same(sig_, f.signature(), "belief set membership");
  return models_.subset_of(f.models());
}

std::string BeliefSet::to_string() const {
  return "Th(" + as_formula().to_string() + ")";
}

BeliefSet theory(std::span<const World> worlds, const Signature& sig) {
  WorldSet s(sig.universe_size());
  for (const auto& w : worlds) {
    if (!(w.sig == sig)) throw SignatureMismatch("theory: foreign world " + w.to_string());
    s.set(w.index);
  }
  return BeliefSet(sig, std::move(s));
}

BeliefSet closure_from(std::span<const Formula> formulas, const Signature& sig) {
  WorldSet s = WorldSet::full(sig.universe_size());
  for (const auto& f : formulas) {
    require_same(sig, f.signature(), "closure");
    s &= f.models();
  }
  return BeliefSet(sig, std::move(s));
}

// ---- Conditional ----

Conditional::Conditional(Formula consequent, Formula antecedent)
    : consequent_(std::move(consequent)), antecedent_(std::move(antecedent)) {
  require_same(consequent_.signature(), antecedent_.signature(), "conditional");
}

std::string Conditional::to_string() const {
  auto side = [](const Formula& f) {
    std::string s = f.to_string();
    return s.find(" | ") == std::string::npos ? s : "(" + s + ")";
  };
  return "(" + side(consequent_) + " | " + side(antecedent_) + ")";
}

ConditionalValue eval_conditional(const World& w, const Conditional& c) {
  require_same(w.sig, c.signature(), "eval_conditional");
  if (!c.antecedent().models().test(w.index)) return ConditionalValue::kNotApplicable;
  return c.consequent().models().test(w.index) ? ConditionalValue::kVerifies
                                               : ConditionalValue::kFalsifies;
}

Conditional parse_conditional(std::string_view text, const Signature& sig) {
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  std::size_t end = text.find_last_not_of(" \t\r\n");
  if (begin == std::string_view::npos || text[begin] != '(' || text[end] != ')')
    throw ParseError("conditional must have the form (B | A)", begin == std::string_view::npos ? 0 : begin);
  std::string_view inner = text.substr(begin + 1, end - begin - 1);
  // The separator is the rightmost top-level '|' that splits the text into
  // two well-formed formulas; a disjunctive antecedent needs parentheses.
  int depth = 0;
  std::vector<std::size_t> bars;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    else if (inner[i] == ')') --depth;
    else if (inner[i] == '|' && depth == 0) bars.push_back(i);
  }
  if (bars.empty()) throw ParseError("conditional is missing '|'", begin + 1);
  for (auto it = bars.rbegin(); it != bars.rend(); ++it) {
    try {
      Formula b = parse_formula(inner.substr(0, *it), sig);
      Formula a = parse_formula(inner.substr(*it + 1), sig);
      return Conditional(std::move(b), std::move(a));
    } catch (const ParseError&) {
      if (std::next(it) == bars.rend()) throw;
    }
  }
  throw ParseError("malformed conditional", begin);
}

// ---- projections ----

std::uint32_t project_world(const Signature& sig, std::uint32_t world,
                            std::span<const std::size_t> cell) {
  // cell is taken in ascending signature order, matching restrict_to().
  std::vector<std::size_t> sorted(cell.begin(), cell.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint32_t out = 0;
  for (auto p : sorted) out = (out << 1) | ((world & sig.bit(p)) ? 1u : 0u);
  return out;
}

std::uint32_t embed_world(const Signature& sig, std::uint32_t sub_world,
                          std::span<const std::size_t> cell, std::uint32_t rest) {
  std::vector<std::size_t> sorted(cell.begin(), cell.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint32_t out = rest;
  const std::size_t k = sorted.size();
  for (std::size_t j = 0; j < k; ++j) {
    bool v = (sub_world >> (k - 1 - j)) & 1u;
    if (v) out |= sig.bit(sorted[j]);
    else out &= ~sig.bit(sorted[j]);
  }
  return out;
}

WorldSet project(const Signature& sig, const WorldSet& worlds,
                 std::span<const std::size_t> cell) {
  WorldSet out(std::uint32_t{1} << cell.size());
  worlds.for_each([&](std::uint32_t w) { out.set(project_world(sig, w, cell)); });
  return out;
}

WorldSet cylinder(const Signature& sig, const WorldSet& sub_worlds,
                  std::span<const std::size_t> cell) {
  WorldSet out(sig.universe_size());
  for (std::uint32_t w = 0; w < sig.universe_size(); ++w)
    if (sub_worlds.test(project_world(sig, w, cell))) out.set(w);
  return out;
}

}  // namespace epikit
