#pragma once

// Line-numbered natural-deduction proofs over a deliberately small rule set:
//
//   premise        the formula is a premise of the sequent
//   assumption     the formula is a premise stated as an assumption, or the
//                  negated conclusion of a proof that ends in falsum
//   impl_elim      ->e i,j  : line i = A -> B, line j = A        gives B
//   modus_tollens  MT i,j   : line i = A -> B, line j = !B       gives !A
//   neg_elim       !e i,j   : line i = !A,     line j = A        gives false
//   copy           copy i   : repeats line i
//
// A proof establishes `premises |- conclusion` when every line is justified
// and the last line is the conclusion, or falsum (proof by contradiction).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpict/formula.hpp"

namespace lpict::logic {

enum class Rule { Premise, Assumption, ImplElim, ModusTollens, NegElim, Copy };

std::string to_string(Rule rule);
// Accepts the names produced by to_string(Rule); throws DomainError otherwise.
Rule rule_from_string(const std::string& name);

struct ProofLine {
  std::size_t index = 0;  // 1-based
  Formula formula;
  Rule rule = Rule::Premise;
  std::vector<std::size_t> refs;

  bool operator==(const ProofLine&) const = default;
};

struct Proof {
  std::vector<ProofLine> lines;

  std::size_t size() const noexcept { return lines.size(); }
  const ProofLine& back() const { return lines.back(); }
  bool operator==(const Proof&) const = default;
};

struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion;
};

struct ProofVerdict {
  bool valid = true;
  std::size_t line = 0;  // offending line, 0 when valid or for an empty proof
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

ProofVerdict check_proof(const Sequent& sequent, const Proof& proof);

inline constexpr std::size_t kChainDepthBound = 64;

// Forward chaining with premise atoms and atomic implications only: a start
// atom, then alternating implication (stated as assumption) and ->e.  A chain
// of k implications yields 2k+1 lines.  The goal must be an atom.
std::optional<Proof> search_forward_chain(std::span<const Formula> premises,
                                          const Formula& goal);

// Refutation of the negated goal: assume !goal, walk the chain backwards
// with MT, cite the start atom and close with !e.  2k+3 lines.
std::optional<Proof> search_contradiction(std::span<const Formula> premises,
                                          const Formula& goal);

// Saturating search with the full rule set above, falling back to a
// refutation of the negated goal.  Returns a proof pruned to the lines used.
std::optional<Proof> derive(std::span<const Formula> premises, const Formula& goal);

// f -||- g using derive() in both directions.  Both formulas must be built
// from atoms, negated atoms and implications; throws DomainError otherwise.
bool provably_equivalent(const Formula& f, const Formula& g);

struct CrossValidation {
  bool semantic = false;
  bool provable = false;
  bool agree = false;
};

inline constexpr std::size_t kCrossValidationAtoms = 10;

// Compares truth-table entailment with both chain searches.  Premises must be
// atoms or atom -> atom, the conclusion an atom, with at most
// kCrossValidationAtoms atoms in total; throws DomainError otherwise.
CrossValidation cross_validate(std::span<const Formula> premises,
                               const Formula& conclusion);

// "->e 2,1" style justification; `unicode` selects → and ¬.
std::string justification(const ProofLine& line, bool unicode = true);

// Two-column layout: numbered formula, then justification.
std::string render_proof(const Proof& proof);

std::string render_sequent(const Sequent& sequent);

// Number of code points in a UTF-8 string.
std::size_t display_width(const std::string& utf8);

}  // namespace lpict::logic
