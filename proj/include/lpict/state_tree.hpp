#pragma once

// A chain-shaped system as a binary tree: the right spine runs through the
// states in transition order and each state's event tree hangs on the left.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpict/event_tree.hpp"
#include "lpict/guarded_lts.hpp"

namespace lpict::analysis {

struct StateTree {
  std::string state;
  std::optional<lts::EventTree> events;
  std::shared_ptr<const StateTree> next;
};

// Follows the unique successor of each state from the initial one to the
// terminal.  Throws ValidationError(BranchingPath) when a non-terminal state
// has zero or several successors, or the walk revisits a state.
StateTree build_state_tree(const lts::GuardedLTS& lts);

// State ids along the spine.
std::vector<std::string> spine(const StateTree& tree);

std::vector<lts::BfsNode> bfs_traverse(const StateTree& tree);

}  // namespace lpict::analysis
