#pragma once

// Binary operator trees over event names.  Leaves may be negated so that a
// state can require an event to be absent (or, as in a tautological terminal
// state, either outcome).

#include <memory>
#include <string>
#include <vector>

#include "lpict/formula.hpp"

namespace lpict::lts {

enum class TreeOp { And, Or };

std::string to_string(TreeOp op);

class EventTree {
 public:
  static EventTree leaf(std::string event, bool negated = false);
  static EventTree node(TreeOp op, EventTree left, EventTree right);

  bool is_leaf() const noexcept { return node_->left == nullptr; }
  const std::string& event() const noexcept { return node_->event; }
  bool negated() const noexcept { return node_->negated; }
  TreeOp op() const noexcept { return node_->op; }
  const EventTree& left() const { return *node_->left; }
  const EventTree& right() const { return *node_->right; }

  bool operator==(const EventTree& other) const;

 private:
  struct Node {
    std::string event;
    bool negated = false;
    TreeOp op = TreeOp::And;
    std::shared_ptr<const EventTree> left, right;
  };
  explicit EventTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Left-deep fold ((e1 op1 e2) op2 e3) ...; needs events.size() - 1 operators.
EventTree build_event_tree(const std::vector<std::string>& events,
                           const std::vector<TreeOp>& operators);

// Converts a formula built from atoms, negated atoms, & and |.
EventTree event_tree_from_formula(const logic::Formula& f);
logic::Formula to_formula(const EventTree& tree);

// Leaves in left-to-right order.
std::vector<const EventTree*> leaves(const EventTree& tree);
// Operators of a left-deep tree whose leaves are all positive, else empty.
bool is_left_deep_plain(const EventTree& tree);
std::vector<TreeOp> left_deep_operators(const EventTree& tree);

bool eval_event_tree(const EventTree& tree, const logic::Valuation& valuation);

struct BfsNode {
  enum class Kind { State, Operator, Leaf };
  Kind kind;
  std::string label;  // state id, "and"/"or", or event name with '!' if negated

  bool operator==(const BfsNode&) const = default;
};

std::vector<BfsNode> bfs_traverse(const EventTree& tree);

// First leaf, in level order, whose literal is false under the valuation.
const EventTree* first_false_leaf(const EventTree& tree, const logic::Valuation& valuation);

}  // namespace lpict::lts
