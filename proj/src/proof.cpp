#include "lpict/proof.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "lpict/error.hpp"

namespace lpict::logic {

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::Premise:
      return "premise";
    case Rule::Assumption:
      return "assumption";
    case Rule::ImplElim:
      return "impl_elim";
    case Rule::ModusTollens:
      return "modus_tollens";
    case Rule::NegElim:
      return "neg_elim";
    case Rule::Copy:
      return "copy";
  }
  return {};
}

Rule rule_from_string(const std::string& name) {
  for (Rule r : {Rule::Premise, Rule::Assumption, Rule::ImplElim, Rule::ModusTollens,
                 Rule::NegElim, Rule::Copy})
    if (to_string(r) == name) return r;
  throw DomainError("unknown proof rule '" + name + "'");
}

// ---------------------------------------------------------------------------
// Checker

namespace {

bool contains(std::span<const Formula> set, const Formula& f) {
  return std::find(set.begin(), set.end(), f) != set.end();
}

ProofVerdict invalid(std::size_t line, std::string reason) {
  return {false, line, std::move(reason)};
}

}  // namespace

ProofVerdict check_proof(const Sequent& sequent, const Proof& proof) {
  if (proof.lines.empty()) return invalid(0, "empty proof");
  const bool refutation = proof.back().formula.kind() == Formula::Kind::Falsum;
  const Formula negated_goal = Formula::negation(sequent.conclusion);

  for (std::size_t pos = 0; pos < proof.lines.size(); ++pos) {
    const ProofLine& line = proof.lines[pos];
    const std::size_t k = pos + 1;
    if (line.index != k) return invalid(k, "line indices must run consecutively from 1");
    for (std::size_t r : line.refs)
      if (r == 0 || r >= k) return invalid(k, "reference to a missing or later line");
    auto at = [&](std::size_t i) -> const Formula& { return proof.lines[i - 1].formula; };
    auto arity = [&](std::size_t n) { return line.refs.size() == n; };

    switch (line.rule) {
      case Rule::Premise:
        if (!arity(0)) return invalid(k, "premise lines take no references");
        if (!contains(sequent.premises, line.formula))
          return invalid(k, "not a premise of the sequent");
        break;
      case Rule::Assumption:
        if (!arity(0)) return invalid(k, "assumption lines take no references");
        if (contains(sequent.premises, line.formula)) break;
        if (refutation && line.formula == negated_goal) break;
        return invalid(k, "open assumption is neither a premise nor the negated goal");
      case Rule::ImplElim: {
        if (!arity(2)) return invalid(k, "->e needs two references");
        const Formula& impl = at(line.refs[0]);
        if (impl.kind() != Formula::Kind::Implies || !(impl.lhs() == at(line.refs[1])) ||
            !(impl.rhs() == line.formula))
          return invalid(k, "rule-shape mismatch");
        break;
      }
      case Rule::ModusTollens: {
        if (!arity(2)) return invalid(k, "MT needs two references");
        const Formula& impl = at(line.refs[0]);
        const Formula& neg = at(line.refs[1]);
        if (impl.kind() != Formula::Kind::Implies || neg.kind() != Formula::Kind::Not ||
            !(neg.lhs() == impl.rhs()) ||
            !(line.formula == Formula::negation(impl.lhs())))
          return invalid(k, "rule-shape mismatch");
        break;
      }
      case Rule::NegElim: {
        if (!arity(2)) return invalid(k, "!e needs two references");
        const Formula& neg = at(line.refs[0]);
        if (neg.kind() != Formula::Kind::Not || !(neg.lhs() == at(line.refs[1])) ||
            line.formula.kind() != Formula::Kind::Falsum)
          return invalid(k, "rule-shape mismatch");
        break;
      }
      case Rule::Copy:
        if (!arity(1)) return invalid(k, "copy needs one reference");
        if (!(at(line.refs[0]) == line.formula)) return invalid(k, "rule-shape mismatch");
        break;
    }
  }

  if (!(proof.back().formula == sequent.conclusion) && !refutation)
    return invalid(proof.size(), "last line does not establish the conclusion");
  return {};
}

// ---------------------------------------------------------------------------
// Chain searches

namespace {

struct Chain {
  Formula start;
  std::vector<Formula> implications;  // in forward order
};

// Shortest chain of atomic implications from a premise atom to `goal`.
std::optional<Chain> find_chain(std::span<const Formula> premises, const Formula& goal) {
  if (!goal.is_atom()) return std::nullopt;

  std::map<std::string, std::vector<const Formula*>> edges;
  std::vector<std::string> sources;
  for (const auto& p : premises) {
    if (p.is_atom()) {
      sources.push_back(p.name());
    } else if (p.kind() == Formula::Kind::Implies && p.lhs().is_atom() &&
               p.rhs().is_atom()) {
      edges[p.lhs().name()].push_back(&p);
    }
  }

  // BFS from every premise atom at once; parent records the edge used.
  std::map<std::string, const Formula*> parent;
  std::map<std::string, std::size_t> depth;
  std::queue<std::string> frontier;
  for (const auto& s : sources) {
    if (depth.emplace(s, 0).second) {
      parent.emplace(s, nullptr);
      frontier.push(s);
    }
  }
  while (!frontier.empty() && !depth.contains(goal.name())) {
    std::string current = frontier.front();
    frontier.pop();
    if (depth[current] >= kChainDepthBound) continue;
    for (const Formula* edge : edges[current]) {
      const std::string& next = edge->rhs().name();
      if (depth.emplace(next, depth[current] + 1).second) {
        parent.emplace(next, edge);
        frontier.push(next);
      }
    }
  }
  if (!depth.contains(goal.name())) return std::nullopt;

  Chain chain;
  std::string at = goal.name();
  while (const Formula* edge = parent.at(at)) {
    chain.implications.push_back(*edge);
    at = edge->lhs().name();
  }
  std::reverse(chain.implications.begin(), chain.implications.end());
  chain.start = Formula::atom(at);
  return chain;
}

void push(Proof& proof, Formula f, Rule rule, std::vector<std::size_t> refs = {}) {
  proof.lines.push_back({proof.lines.size() + 1, std::move(f), rule, std::move(refs)});
}

}  // namespace

std::optional<Proof> search_forward_chain(std::span<const Formula> premises,
                                          const Formula& goal) {
  auto chain = find_chain(premises, goal);
  if (!chain) return std::nullopt;
  Proof proof;
  push(proof, chain->start, Rule::Premise);
  for (const auto& impl : chain->implications) {
    const std::size_t previous = proof.size();
    push(proof, impl, Rule::Assumption);
    push(proof, impl.rhs(), Rule::ImplElim, {proof.size(), previous});
  }
  return proof;
}

std::optional<Proof> search_contradiction(std::span<const Formula> premises,
                                          const Formula& goal) {
  auto chain = find_chain(premises, goal);
  if (!chain) return std::nullopt;
  Proof proof;
  push(proof, Formula::negation(goal), Rule::Assumption);
  for (auto it = chain->implications.rbegin(); it != chain->implications.rend(); ++it) {
    const std::size_t negated = proof.size();
    push(proof, *it, Rule::Premise);
    push(proof, Formula::negation(it->lhs()), Rule::ModusTollens, {proof.size(), negated});
  }
  const std::size_t negated_start = proof.size();
  push(proof, chain->start, Rule::Premise);
  push(proof, Formula::falsum(), Rule::NegElim, {negated_start, proof.size()});
  return proof;
}

// ---------------------------------------------------------------------------
// Saturating search

namespace {

class Saturation {
 public:
  // Returns true once `target` is among the derived formulas.
  bool run(const Formula& target) {
    bool changed = true;
    while (changed && !known_.contains(target)) {
      changed = false;
      const std::size_t n = lines_.size();
      for (std::size_t i = 0; i < n && !known_.contains(target); ++i) {
        const Formula f = lines_[i].formula;
        for (std::size_t j = 0; j < n; ++j) {
          const Formula g = lines_[j].formula;
          if (f.kind() == Formula::Kind::Implies && f.lhs() == g)
            changed |= add(f.rhs(), Rule::ImplElim, {i + 1, j + 1});
          if (f.kind() == Formula::Kind::Implies && g.kind() == Formula::Kind::Not &&
              g.lhs() == f.rhs())
            changed |= add(Formula::negation(f.lhs()), Rule::ModusTollens, {i + 1, j + 1});
          if (f.kind() == Formula::Kind::Not && f.lhs() == g)
            changed |= add(Formula::falsum(), Rule::NegElim, {i + 1, j + 1});
        }
      }
    }
    return known_.contains(target);
  }

  bool add(const Formula& f, Rule rule, std::vector<std::size_t> refs = {}) {
    if (known_.contains(f)) return false;
    known_.emplace(f, lines_.size() + 1);
    lines_.push_back({lines_.size() + 1, f, rule, std::move(refs)});
    return true;
  }

  // The lines `target` depends on, renumbered from 1.
  Proof extract(const Formula& target) const {
    std::set<std::size_t> needed;
    std::vector<std::size_t> stack{known_.at(target)};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      if (!needed.insert(i).second) continue;
      for (std::size_t r : lines_[i - 1].refs) stack.push_back(r);
    }
    std::map<std::size_t, std::size_t> renumber;
    Proof proof;
    for (std::size_t old : needed) {
      ProofLine line = lines_[old - 1];
      for (auto& r : line.refs) r = renumber.at(r);
      line.index = proof.size() + 1;
      renumber[old] = line.index;
      proof.lines.push_back(std::move(line));
    }
    return proof;
  }

 private:
  std::vector<ProofLine> lines_;
  std::map<Formula, std::size_t> known_;
};

bool in_implication_fragment(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return true;
    case Formula::Kind::Not:
      return f.lhs().is_atom();
    case Formula::Kind::Implies:
      return in_implication_fragment(f.lhs()) && in_implication_fragment(f.rhs());
    default:
      return false;
  }
}

}  // namespace

std::optional<Proof> derive(std::span<const Formula> premises, const Formula& goal) {
  {
    Saturation direct;
    for (const auto& p : premises) direct.add(p, Rule::Premise);
    if (direct.run(goal)) return direct.extract(goal);
  }
  Saturation refutation;
  for (const auto& p : premises) refutation.add(p, Rule::Premise);
  refutation.add(Formula::negation(goal), Rule::Assumption);
  if (refutation.run(Formula::falsum())) return refutation.extract(Formula::falsum());
  return std::nullopt;
}

bool provably_equivalent(const Formula& f, const Formula& g) {
  if (!in_implication_fragment(f) || !in_implication_fragment(g))
    throw DomainError("provable equivalence is limited to atoms, negated atoms and "
                      "implications");
  auto proves = [](const Formula& from, const Formula& to) {
    const std::vector<Formula> premises{from};
    auto proof = derive(premises, to);
    return proof && check_proof({premises, to}, *proof).valid;
  };
  return proves(f, g) && proves(g, f);
}

CrossValidation cross_validate(std::span<const Formula> premises,
                               const Formula& conclusion) {
  auto atomic_implication = [](const Formula& f) {
    return f.kind() == Formula::Kind::Implies && f.lhs().is_atom() && f.rhs().is_atom();
  };
  std::set<std::string> atoms = atoms_of(conclusion);
  if (!conclusion.is_atom()) throw DomainError("conclusion must be an atom");
  for (const auto& p : premises) {
    if (!p.is_atom() && !atomic_implication(p))
      throw DomainError("premise '" + to_string(p) + "' is outside the chain fragment");
    collect_atoms(p, atoms);
  }
  if (atoms.size() > kCrossValidationAtoms)
    throw DomainError("cross-validation is limited to " +
                      std::to_string(kCrossValidationAtoms) + " atoms");

  CrossValidation result;
  result.semantic = semantic_entails(premises, conclusion);
  const Sequent sequent{{premises.begin(), premises.end()}, conclusion};
  auto forward = search_forward_chain(premises, conclusion);
  auto refutation = search_contradiction(premises, conclusion);
  result.provable = forward && refutation && check_proof(sequent, *forward).valid &&
                    check_proof(sequent, *refutation).valid;
  result.agree = result.semantic == result.provable;
  return result;
}

// ---------------------------------------------------------------------------
// Rendering

std::size_t display_width(const std::string& utf8) {
  std::size_t n = 0;
  for (unsigned char c : utf8)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string justification(const ProofLine& line, bool unicode) {
  auto refs = [&] {
    std::string out;
    for (std::size_t i = 0; i < line.refs.size(); ++i) {
      out += i ? "," : " ";
      out += std::to_string(line.refs[i]);
    }
    return out;
  };
  switch (line.rule) {
    case Rule::Premise:
      return "premise";
    case Rule::Assumption:
      return "assumption";
    case Rule::ImplElim:
      return (unicode ? "→e" : "->e") + refs();
    case Rule::ModusTollens:
      return "MT" + refs();
    case Rule::NegElim:
      return (unicode ? "¬e" : "!e") + refs();
    case Rule::Copy:
      return "copy" + refs();
  }
  return {};
}

std::string render_proof(const Proof& proof) {
  const std::size_t index_width = std::to_string(proof.size()).size();
  std::size_t formula_width = 0;
  std::vector<std::string> formulas;
  for (const auto& line : proof.lines) {
    formulas.push_back(to_unicode(line.formula));
    formula_width = std::max(formula_width, display_width(formulas.back()));
  }
  std::string out;
  for (std::size_t i = 0; i < proof.size(); ++i) {
    std::string index = std::to_string(proof.lines[i].index);
    out += std::string(index_width - std::min(index_width, index.size()), ' ');
    out += index + ". " + formulas[i];
    out += std::string(formula_width - display_width(formulas[i]) + 4, ' ');
    out += justification(proof.lines[i]) + "\n";
  }
  return out;
}

std::string render_sequent(const Sequent& sequent) {
  std::string out;
  for (std::size_t i = 0; i < sequent.premises.size(); ++i) {
    if (i) out += ", ";
    out += to_unicode(sequent.premises[i]);
  }
  return out + (sequent.premises.empty() ? "⊢ " : " ⊢ ") + to_unicode(sequent.conclusion);
}

}  // namespace lpict::logic
