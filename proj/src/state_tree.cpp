#include "lpict/state_tree.hpp"

#include <deque>
#include <set>
#include <variant>

#include "lpict/error.hpp"

namespace lpict::analysis {

StateTree build_state_tree(const lts::GuardedLTS& lts) {
  std::vector<std::string> chain{lts.initial()};
  std::set<std::string> seen{lts.initial()};
  while (chain.back() != lts.terminal()) {
    const auto next = lts.successors(chain.back());
    if (next.size() != 1)
      throw ValidationError(ValidationError::Kind::BranchingPath,
                            "state " + chain.back() + " has " + std::to_string(next.size()) +
                                " successors; analysis needs a single chain");
    if (!seen.insert(next.front()).second)
      throw ValidationError(ValidationError::Kind::BranchingPath,
                            "the path from " + lts.initial() + " revisits " + next.front());
    chain.push_back(next.front());
  }

  std::shared_ptr<const StateTree> tail;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    tail = std::make_shared<const StateTree>(StateTree{*it, lts.state(*it).combine, tail});
  return *tail;
}

std::vector<std::string> spine(const StateTree& tree) {
  std::vector<std::string> out;
  for (const StateTree* t = &tree; t; t = t->next.get()) out.push_back(t->state);
  return out;
}

std::vector<lts::BfsNode> bfs_traverse(const StateTree& tree) {
  using Item = std::variant<const StateTree*, const lts::EventTree*>;
  std::vector<lts::BfsNode> out;
  std::deque<Item> queue{&tree};
  while (!queue.empty()) {
    Item item = queue.front();
    queue.pop_front();
    if (auto* s = std::get_if<const StateTree*>(&item)) {
      out.push_back({lts::BfsNode::Kind::State, (*s)->state});
      if ((*s)->events) queue.push_back(&*(*s)->events);
      if ((*s)->next) queue.push_back((*s)->next.get());
      continue;
    }
    const lts::EventTree* e = std::get<const lts::EventTree*>(item);
    if (e->is_leaf()) {
      out.push_back({lts::BfsNode::Kind::Leaf, (e->negated() ? "!" : "") + e->event()});
    } else {
      out.push_back({lts::BfsNode::Kind::Operator, lts::to_string(e->op())});
      queue.push_back(&e->left());
      queue.push_back(&e->right());
    }
  }
  return out;
}

}  // namespace lpict::analysis
