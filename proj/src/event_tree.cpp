#include "lpict/event_tree.hpp"

#include <deque>

#include "lpict/error.hpp"

namespace lpict::lts {

using logic::Formula;

std::string to_string(TreeOp op) { return op == TreeOp::And ? "and" : "or"; }

EventTree EventTree::leaf(std::string event, bool negated) {
  if (event.empty()) throw DomainError("event names must be nonempty");
  return EventTree(std::make_shared<const Node>(Node{std::move(event), negated, {}, {}, {}}));
}

EventTree EventTree::node(TreeOp op, EventTree left, EventTree right) {
  return EventTree(std::make_shared<const Node>(
      Node{{}, false, op, std::make_shared<const EventTree>(std::move(left)),
           std::make_shared<const EventTree>(std::move(right))}));
}

bool EventTree::operator==(const EventTree& other) const {
  if (is_leaf() != other.is_leaf()) return false;
  if (is_leaf()) return event() == other.event() && negated() == other.negated();
  return op() == other.op() && left() == other.left() && right() == other.right();
}

EventTree build_event_tree(const std::vector<std::string>& events,
                           const std::vector<TreeOp>& operators) {
  if (events.empty()) throw DomainError("an event tree needs at least one event");
  if (operators.size() + 1 != events.size())
    throw DomainError("expected " + std::to_string(events.size() - 1) +
                      " operators for " + std::to_string(events.size()) +
                      " events, got " + std::to_string(operators.size()));
  EventTree tree = EventTree::leaf(events.front());
  for (std::size_t i = 1; i < events.size(); ++i)
    tree = EventTree::node(operators[i - 1], tree, EventTree::leaf(events[i]));
  return tree;
}

EventTree event_tree_from_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return EventTree::leaf(f.name());
    case Formula::Kind::Not:
      if (!f.lhs().is_atom())
        throw DomainError("event trees only negate single events");
      return EventTree::leaf(f.lhs().name(), true);
    case Formula::Kind::And:
      return EventTree::node(TreeOp::And, event_tree_from_formula(f.lhs()),
                             event_tree_from_formula(f.rhs()));
    case Formula::Kind::Or:
      return EventTree::node(TreeOp::Or, event_tree_from_formula(f.lhs()),
                             event_tree_from_formula(f.rhs()));
    default:
      throw DomainError("event trees combine events with & and | only");
  }
}

Formula to_formula(const EventTree& tree) {
  if (tree.is_leaf()) {
    Formula atom = Formula::atom(tree.event());
    return tree.negated() ? Formula::negation(atom) : atom;
  }
  Formula l = to_formula(tree.left());
  Formula r = to_formula(tree.right());
  return tree.op() == TreeOp::And ? Formula::conjunction(l, r) : Formula::disjunction(l, r);
}

std::vector<const EventTree*> leaves(const EventTree& tree) {
  std::vector<const EventTree*> out;
  std::vector<const EventTree*> stack{&tree};
  while (!stack.empty()) {
    const EventTree* t = stack.back();
    stack.pop_back();
    if (t->is_leaf()) {
      out.push_back(t);
    } else {
      stack.push_back(&t->right());
      stack.push_back(&t->left());
    }
  }
  return out;
}

bool is_left_deep_plain(const EventTree& tree) {
  const EventTree* t = &tree;
  while (!t->is_leaf()) {
    if (!t->right().is_leaf() || t->right().negated()) return false;
    t = &t->left();
  }
  return !t->negated();
}

std::vector<TreeOp> left_deep_operators(const EventTree& tree) {
  std::vector<TreeOp> ops;
  for (const EventTree* t = &tree; !t->is_leaf(); t = &t->left()) ops.insert(ops.begin(), t->op());
  return ops;
}

bool eval_event_tree(const EventTree& tree, const logic::Valuation& valuation) {
  if (tree.is_leaf()) return valuation.get(tree.event()) != tree.negated();
  const bool l = eval_event_tree(tree.left(), valuation);
  const bool r = eval_event_tree(tree.right(), valuation);
  return tree.op() == TreeOp::And ? (l && r) : (l || r);
}

namespace {

std::string leaf_label(const EventTree& t) {
  return (t.negated() ? "!" : "") + t.event();
}

template <typename Visit>
void level_order(const EventTree& tree, Visit visit) {
  std::deque<const EventTree*> queue{&tree};
  while (!queue.empty()) {
    const EventTree* t = queue.front();
    queue.pop_front();
    if (!visit(*t)) return;
    if (!t->is_leaf()) {
      queue.push_back(&t->left());
      queue.push_back(&t->right());
    }
  }
}

}  // namespace

std::vector<BfsNode> bfs_traverse(const EventTree& tree) {
  std::vector<BfsNode> out;
  level_order(tree, [&](const EventTree& t) {
    if (t.is_leaf())
      out.push_back({BfsNode::Kind::Leaf, leaf_label(t)});
    else
      out.push_back({BfsNode::Kind::Operator, to_string(t.op())});
    return true;
  });
  return out;
}

const EventTree* first_false_leaf(const EventTree& tree, const logic::Valuation& valuation) {
  const EventTree* found = nullptr;
  level_order(tree, [&](const EventTree& t) {
    if (t.is_leaf() && valuation.get(t.event()) == t.negated()) found = &t;
    return found == nullptr;
  });
  return found;
}

}  // namespace lpict::lts
