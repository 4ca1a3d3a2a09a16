#pragma once

// Guarded labelled transition systems: protocol states carrying the events
// that must hold in them, linked by transitions that may carry a guard.

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lpict/event_tree.hpp"
#include "lpict/formula.hpp"
#include "lpict/tags.hpp"

namespace lpict::lts {

struct EventMessage {
  std::vector<std::string> items;  // nonempty
  bool operator==(const EventMessage&) const = default;
};

struct Event {
  std::string name;
  std::set<ResistTag> resists;
  bool operator==(const Event&) const = default;
};

struct StateNode {
  std::string id;
  std::vector<Event> events;
  // How the events combine; absent only when there are no events.
  std::optional<EventTree> combine;
  // Message fields carried by the state's events.
  std::optional<EventMessage> payload;

  bool operator==(const StateNode&) const = default;
  std::vector<std::string> event_names() const;
};

struct GuardedTransition {
  std::string from;
  std::string action;  // may be empty
  std::string to;
  std::optional<logic::Formula> guard;

  bool operator==(const GuardedTransition&) const = default;
};

class GuardedLTS {
 public:
  const std::vector<StateNode>& states() const noexcept { return states_; }
  const std::vector<GuardedTransition>& transitions() const noexcept { return transitions_; }
  const std::string& initial() const noexcept { return initial_; }
  const std::string& terminal() const noexcept { return terminal_; }
  // Atom standing for the terminal state in proofs; defaults to its id.
  const std::string& terminal_atom() const noexcept { return terminal_atom_; }

  const StateNode& state(const std::string& id) const;  // throws UnknownState
  bool has_state(const std::string& id) const;
  // Proof atom for a state id.
  std::string atom_for(const std::string& id) const;
  // Distinct transition targets from `id`, in declaration order.
  std::vector<std::string> successors(const std::string& id) const;
  // Reflexive-transitive reachability.
  bool reaches(const std::string& from, const std::string& to) const;

  bool operator==(const GuardedLTS&) const = default;

 private:
  friend GuardedLTS build_guarded_lts(std::vector<StateNode>, std::vector<GuardedTransition>,
                                      std::string, std::string, std::string);
  std::vector<StateNode> states_;
  std::vector<GuardedTransition> transitions_;
  std::string initial_, terminal_, terminal_atom_;
};

// Validates and assembles a system.  A state without a `combine` tree gets
// the conjunction of its events.  Throws ValidationError on duplicate state
// ids or event names, dangling ids, unreachable states, empty non-terminal
// states, combine trees whose leaves differ from the events, and guard atoms
// that name neither an event nor a state.
GuardedLTS build_guarded_lts(std::vector<StateNode> states,
                             std::vector<GuardedTransition> transitions, std::string initial,
                             std::string terminal, std::string terminal_atom = {});

// Facts entail a formula: an atomic chain derivation, else truth tables.
bool derivable(std::span<const logic::Formula> facts, const logic::Formula& goal);

// The source-state atom and the guard (if any) are both derivable from facts.
bool check_precondition(const GuardedLTS& lts, const GuardedTransition& t,
                        std::span<const logic::Formula> facts);

}  // namespace lpict::lts
