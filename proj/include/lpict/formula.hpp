#pragma once

// Propositional formulas.
//
// Concrete syntax (parse_formula / to_string):
//   atoms      identifiers such as p, S1, S_end
//   false      the constant falsum
//   !f         negation
//   f & g      conjunction, left-associative
//   f | g      disjunction, left-associative
//   f -> g     implication, right-associative
// Precedence from tightest: ! & | ->.

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpict::logic {

class Formula {
 public:
  enum class Kind { Atom, Falsum, Not, And, Or, Implies };

  Formula();  // false

  static Formula atom(std::string name);
  static Formula falsum();
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);

  Kind kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  // Atom name; empty for other kinds.
  const std::string& name() const noexcept { return node_->name; }
  // Operand of Not, left operand of binary connectives.
  const Formula& lhs() const noexcept { return node_->children.front(); }
  const Formula& rhs() const noexcept { return node_->children.back(); }

  bool operator==(const Formula& other) const;
  bool operator<(const Formula& other) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind kind, std::string name, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

Formula parse_formula(std::string_view source);

// ASCII rendering accepted by parse_formula.
std::string to_string(const Formula& f);
// Rendering with the usual logical symbols (¬ ∧ ∨ → ⊥).
std::string to_unicode(const Formula& f);

void collect_atoms(const Formula& f, std::set<std::string>& out);
std::set<std::string> atoms_of(const Formula& f);

class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const std::string, bool>> init)
      : values_(init) {}

  void set(const std::string& atom, bool value) { values_[atom] = value; }
  bool has(const std::string& atom) const { return values_.contains(atom); }
  // Throws DomainError when the atom is unassigned.
  bool get(const std::string& atom) const;
  const std::map<std::string, bool>& values() const noexcept { return values_; }

 private:
  std::map<std::string, bool> values_;
};

// Truth-table semantics; throws DomainError when an atom of f is unassigned.
bool eval_formula(const Formula& f, const Valuation& v);

inline constexpr std::size_t kAtomBudget = 20;

// premises |= conclusion by enumerating every valuation of the atoms
// involved.  Throws LimitExceeded beyond kAtomBudget atoms.
bool semantic_entails(std::span<const Formula> premises, const Formula& conclusion);

}  // namespace lpict::logic
