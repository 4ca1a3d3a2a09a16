#include "lpict/formula.hpp"

#include <cctype>
#include <cstdint>

#include "lpict/error.hpp"

namespace lpict::logic {

Formula Formula::make(Kind kind, std::string name, std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(children)}));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw DomainError("atom names must be nonempty");
  return make(Kind::Atom, std::move(name), {});
}

Formula::Formula() : Formula(falsum()) {}

Formula Formula::falsum() {
  static const Formula f = make(Kind::Falsum, {}, {});
  return f;
}

Formula Formula::negation(Formula f) { return make(Kind::Not, {}, {std::move(f)}); }

Formula Formula::conjunction(Formula a, Formula b) {
  return make(Kind::And, {}, {std::move(a), std::move(b)});
}

Formula Formula::disjunction(Formula a, Formula b) {
  return make(Kind::Or, {}, {std::move(a), std::move(b)});
}

Formula Formula::implication(Formula a, Formula b) {
  return make(Kind::Implies, {}, {std::move(a), std::move(b)});
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  return node_->kind == other.node_->kind && node_->name == other.node_->name &&
         node_->children == other.node_->children;
}

bool Formula::operator<(const Formula& other) const {
  if (node_->kind != other.node_->kind) return node_->kind < other.node_->kind;
  if (node_->name != other.node_->name) return node_->name < other.node_->name;
  return node_->children < other.node_->children;
}

// ---------------------------------------------------------------------------

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view src) : src_(src) {}

  Formula parse() {
    Formula f = implication();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("formula syntax error: " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (src_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::implication(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (accept("|")) lhs = Formula::disjunction(lhs, conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (accept("&")) lhs = Formula::conjunction(lhs, unary());
    return lhs;
  }

  Formula unary() {
    if (accept("!")) return Formula::negation(unary());
    if (accept("(")) {
      Formula inner = implication();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    skip_ws();
    std::size_t end = pos_;
    if (end < src_.size() &&
        (std::isalpha(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        ++end;
    }
    if (end == pos_) fail("expected an atom, 'false', '!' or '('");
    std::string word(src_.substr(pos_, end - pos_));
    pos_ = end;
    if (word == "false") return Formula::falsum();
    return Formula::atom(std::move(word));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

struct Symbols {
  const char* negation;
  const char* conjunction;
  const char* disjunction;
  const char* implication;
  const char* falsum;
};

constexpr Symbols kAscii{"!", " & ", " | ", " -> ", "false"};
constexpr Symbols kUnicode{"¬", " ∧ ", " ∨ ", " → ", "⊥"};

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    case Formula::Kind::Not:
      return 4;
    default:
      return 5;
  }
}

std::string render(const Formula& f, const Symbols& sym, int min_prec) {
  std::string out;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return f.name();
    case Formula::Kind::Falsum:
      return sym.falsum;
    case Formula::Kind::Not:
      out = sym.negation + render(f.lhs(), sym, 4);
      break;
    case Formula::Kind::And:
      out = render(f.lhs(), sym, 3) + sym.conjunction + render(f.rhs(), sym, 4);
      break;
    case Formula::Kind::Or:
      out = render(f.lhs(), sym, 2) + sym.disjunction + render(f.rhs(), sym, 3);
      break;
    case Formula::Kind::Implies:
      out = render(f.lhs(), sym, 2) + sym.implication + render(f.rhs(), sym, 1);
      break;
  }
  if (precedence(f.kind()) < min_prec) return "(" + out + ")";
  return out;
}

}  // namespace

Formula parse_formula(std::string_view source) { return FormulaParser(source).parse(); }

std::string to_string(const Formula& f) { return render(f, kAscii, 0); }

std::string to_unicode(const Formula& f) { return render(f, kUnicode, 0); }

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.name());
      return;
    case Formula::Kind::Falsum:
      return;
    case Formula::Kind::Not:
      collect_atoms(f.lhs(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

bool Valuation::get(const std::string& atom) const {
  auto it = values_.find(atom);
  if (it == values_.end())
    throw DomainError("valuation does not assign atom '" + atom + "'");
  return it->second;
}

bool eval_formula(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return v.get(f.name());
    case Formula::Kind::Falsum:
      return false;
    case Formula::Kind::Not:
      return !eval_formula(f.lhs(), v);
    case Formula::Kind::And:
      return eval_formula(f.lhs(), v) && eval_formula(f.rhs(), v);
    case Formula::Kind::Or:
      return eval_formula(f.lhs(), v) || eval_formula(f.rhs(), v);
    case Formula::Kind::Implies:
      return !eval_formula(f.lhs(), v) || eval_formula(f.rhs(), v);
  }
  return false;
}

bool semantic_entails(std::span<const Formula> premises, const Formula& conclusion) {
  std::set<std::string> atom_set = atoms_of(conclusion);
  for (const auto& p : premises) collect_atoms(p, atom_set);
  if (atom_set.size() > kAtomBudget)
    throw LimitExceeded("semantic entailment over " + std::to_string(atom_set.size()) +
                        " atoms exceeds the budget of " + std::to_string(kAtomBudget));

  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  const std::uint64_t rows = std::uint64_t{1} << atoms.size();
  Valuation v;
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t i = 0; i < atoms.size(); ++i) v.set(atoms[i], (row >> i) & 1U);
    bool all_premises = true;
    for (const auto& p : premises) {
      if (!eval_formula(p, v)) {
        all_premises = false;
        break;
      }
    }
    if (all_premises && !eval_formula(conclusion, v)) return false;
  }
  return true;
}

}  // namespace lpict::logic
