#include "lpict/guarded_lts.hpp"

#include <algorithm>
#include <map>

#include "lpict/error.hpp"
#include "lpict/proof.hpp"

namespace lpict::lts {

using logic::Formula;
using Kind = ValidationError::Kind;

std::vector<std::string> StateNode::event_names() const {
  std::vector<std::string> out;
  for (const auto& e : events) out.push_back(e.name);
  return out;
}

bool GuardedLTS::has_state(const std::string& id) const {
  return std::any_of(states_.begin(), states_.end(),
                     [&](const StateNode& s) { return s.id == id; });
}

const StateNode& GuardedLTS::state(const std::string& id) const {
  for (const auto& s : states_)
    if (s.id == id) return s;
  throw ValidationError(Kind::UnknownState, "unknown state '" + id + "'");
}

std::string GuardedLTS::atom_for(const std::string& id) const {
  return id == terminal_ ? terminal_atom_ : id;
}

std::vector<std::string> GuardedLTS::successors(const std::string& id) const {
  std::vector<std::string> out;
  for (const auto& t : transitions_)
    if (t.from == id && std::find(out.begin(), out.end(), t.to) == out.end())
      out.push_back(t.to);
  return out;
}

bool GuardedLTS::reaches(const std::string& from, const std::string& to) const {
  state(from);
  state(to);
  std::set<std::string> seen{from};
  std::vector<std::string> stack{from};
  while (!stack.empty()) {
    std::string at = stack.back();
    stack.pop_back();
    if (at == to) return true;
    for (auto& next : successors(at))
      if (seen.insert(next).second) stack.push_back(next);
  }
  return false;
}

GuardedLTS build_guarded_lts(std::vector<StateNode> states,
                             std::vector<GuardedTransition> transitions, std::string initial,
                             std::string terminal, std::string terminal_atom) {
  std::set<std::string> ids;
  std::set<std::string> events;
  for (auto& s : states) {
    if (!ids.insert(s.id).second)
      throw ValidationError(Kind::DuplicateId, "duplicate state id '" + s.id + "'");
    std::set<std::string> local;
    for (const auto& e : s.events) {
      if (!local.insert(e.name).second)
        throw ValidationError(Kind::DuplicateEvent,
                              "duplicate event '" + e.name + "' in state " + s.id);
      events.insert(e.name);
    }
    if (s.payload && s.payload->items.empty())
      throw ValidationError(Kind::EmptyEvents, "empty message in state " + s.id);
    if (s.events.empty()) {
      if (s.combine)
        throw ValidationError(Kind::LeafMismatch, "state " + s.id + " combines no events");
      continue;
    }
    if (!s.combine) {
      s.combine = build_event_tree(s.event_names(),
                                   std::vector<TreeOp>(s.events.size() - 1, TreeOp::And));
      continue;
    }
    std::set<std::string> leaf_names;
    for (const EventTree* leaf : leaves(*s.combine)) leaf_names.insert(leaf->event());
    if (leaf_names != local)
      throw ValidationError(Kind::LeafMismatch,
                            "combine tree of state " + s.id + " must use exactly its events");
  }

  auto require = [&](const std::string& id, const std::string& what) {
    if (!ids.contains(id))
      throw ValidationError(Kind::DanglingId, what + " refers to undeclared state '" + id + "'");
  };
  require(initial, "initial");
  require(terminal, "terminal");
  for (const auto& t : transitions) {
    require(t.from, "transition source");
    require(t.to, "transition target");
    if (!t.guard) continue;
    for (const auto& atom : logic::atoms_of(*t.guard))
      if (!events.contains(atom) && !ids.contains(atom) && atom != terminal_atom)
        throw ValidationError(Kind::UnresolvedAtom,
                              "guard atom '" + atom + "' names no event or state");
  }
  for (const auto& s : states)
    if (s.events.empty() && s.id != terminal)
      throw ValidationError(Kind::EmptyEvents, "non-terminal state " + s.id + " has no events");

  GuardedLTS lts;
  lts.states_ = std::move(states);
  lts.transitions_ = std::move(transitions);
  lts.initial_ = std::move(initial);
  lts.terminal_ = std::move(terminal);
  lts.terminal_atom_ = terminal_atom.empty() ? lts.terminal_ : std::move(terminal_atom);
  for (const auto& s : lts.states_)
    if (!lts.reaches(lts.initial_, s.id))
      throw ValidationError(Kind::Unreachable,
                            "state " + s.id + " is unreachable from " + lts.initial_);
  return lts;
}

bool derivable(std::span<const Formula> facts, const Formula& goal) {
  if (goal.is_atom() && logic::search_forward_chain(facts, goal)) return true;
  return logic::semantic_entails(facts, goal);
}

bool check_precondition(const GuardedLTS& lts, const GuardedTransition& t,
                        std::span<const Formula> facts) {
  if (!derivable(facts, Formula::atom(lts.atom_for(lts.state(t.from).id)))) return false;
  return !t.guard || derivable(facts, *t.guard);
}

}  // namespace lpict::lts
