#include <gtest/gtest.h>

#include <functional>

#include "generators.hpp"
#include "lpict/congruence.hpp"
#include "lpict/error.hpp"
#include "lpict/event_tree.hpp"
#include "lpict/guarded_lts.hpp"
#include "lpict/lrules.hpp"
#include "lpict/reduction.hpp"

namespace lpict::lts {
namespace {

using logic::Formula;
using logic::parse_formula;
using logic::Valuation;

StateNode state(std::string id, std::vector<std::string> events) {
  StateNode s{std::move(id), {}, std::nullopt, std::nullopt};
  for (auto& e : events) s.events.push_back({std::move(e), {}});
  return s;
}

GuardedLTS chain(std::size_t n) {
  std::vector<StateNode> states;
  std::vector<GuardedTransition> transitions;
  for (std::size_t i = 1; i <= n; ++i) {
    states.push_back(state("S" + std::to_string(i), {"e" + std::to_string(i)}));
    if (i > 1)
      transitions.push_back({"S" + std::to_string(i - 1), "", "S" + std::to_string(i), {}});
  }
  return build_guarded_lts(states, transitions, "S1", "S" + std::to_string(n));
}

ValidationError::Kind build_error(std::vector<StateNode> states,
                                  std::vector<GuardedTransition> transitions,
                                  std::string initial, std::string terminal) {
  try {
    build_guarded_lts(std::move(states), std::move(transitions), std::move(initial),
                      std::move(terminal));
  } catch (const ValidationError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a validation error";
  return ValidationError::Kind::UnknownState;
}

// ---------------------------------------------------------------------------
// Tags

TEST(Tags, NamesRoundTrip) {
  for (ResistTag t : all_resist_tags()) EXPECT_EQ(parse_resist_tag(to_string(t)), t);
  for (AttackerCapability c : all_capabilities()) EXPECT_EQ(parse_capability(to_string(c)), c);
  EXPECT_EQ(all_resist_tags().size(), 8u);
  EXPECT_EQ(all_capabilities().size(), 5u);
  EXPECT_FALSE(parse_resist_tag("teleport"));
  EXPECT_FALSE(parse_capability("quantum"));
}

TEST(Tags, CapabilityCounters) {
  EXPECT_EQ(countered_by(AttackerCapability::Replay), ResistTag::Replay);
  EXPECT_EQ(countered_by(AttackerCapability::Mitm), ResistTag::Mitm);
  EXPECT_EQ(countered_by(AttackerCapability::Eavesdrop), ResistTag::Confidentiality);
  EXPECT_EQ(countered_by(AttackerCapability::Tamper), ResistTag::Integrity);
  EXPECT_EQ(countered_by(AttackerCapability::Impersonate), ResistTag::IdentityAuth);
}

// ---------------------------------------------------------------------------
// Event trees

TEST(EventTree, BuildExamples) {
  const auto single = build_event_tree({"e1"}, {});
  EXPECT_TRUE(single.is_leaf());

  const auto mixed = build_event_tree({"e1", "e2", "e3"}, {TreeOp::And, TreeOp::Or});
  EXPECT_EQ(mixed, event_tree_from_formula(parse_formula("(e1 & e2) | e3")));
  EXPECT_TRUE(is_left_deep_plain(mixed));
  EXPECT_EQ(left_deep_operators(mixed), (std::vector{TreeOp::And, TreeOp::Or}));
  EXPECT_FALSE(eval_event_tree(mixed, {{"e1", true}, {"e2", false}, {"e3", false}}));
  EXPECT_TRUE(eval_event_tree(mixed, {{"e1", false}, {"e2", false}, {"e3", true}}));

  EXPECT_THROW(build_event_tree({"e1", "e2"}, {}), DomainError);
  EXPECT_THROW(build_event_tree({}, {}), DomainError);
}

TEST(EventTree, FormulaConversion) {
  EXPECT_THROW(event_tree_from_formula(parse_formula("a -> b")), DomainError);
  EXPECT_THROW(event_tree_from_formula(parse_formula("!(a & b)")), DomainError);
  const auto t = event_tree_from_formula(parse_formula("a | !a"));
  EXPECT_FALSE(is_left_deep_plain(t));
  EXPECT_EQ(to_formula(t), parse_formula("a | !a"));
  EXPECT_FALSE(is_left_deep_plain(event_tree_from_formula(parse_formula("a & (b & c)"))));
}

TEST(EventTree, BfsLevelOrder) {
  const auto t = build_event_tree({"e1", "e2", "e3"}, {TreeOp::And, TreeOp::And});
  using K = BfsNode::Kind;
  EXPECT_EQ(bfs_traverse(t), (std::vector<BfsNode>{{K::Operator, "and"},
                                                   {K::Operator, "and"},
                                                   {K::Leaf, "e3"},
                                                   {K::Leaf, "e1"},
                                                   {K::Leaf, "e2"}}));
  EXPECT_EQ(bfs_traverse(EventTree::leaf("x", true)), (std::vector<BfsNode>{{K::Leaf, "!x"}}));
}

TEST(EventTree, FirstFalseLeafIsLevelOrder) {
  const auto t = build_event_tree({"e1", "e2", "e3"}, {TreeOp::And, TreeOp::And});
  const Valuation v{{"e1", false}, {"e2", true}, {"e3", false}};
  ASSERT_NE(first_false_leaf(t, v), nullptr);
  EXPECT_EQ(first_false_leaf(t, v)->event(), "e3");
  EXPECT_EQ(first_false_leaf(t, {{"e1", true}, {"e2", true}, {"e3", true}}), nullptr);
}

// ---------------------------------------------------------------------------
// Guarded systems

TEST(BuildGuardedLts, Examples) {
  const auto tls = chain(7);
  EXPECT_EQ(tls.states().size(), 7u);
  EXPECT_EQ(tls.successors("S1"), std::vector<std::string>{"S2"});
  EXPECT_TRUE(tls.reaches("S1", "S7"));
  EXPECT_FALSE(tls.reaches("S3", "S2"));
  EXPECT_TRUE(tls.reaches("S3", "S3"));

  const auto single = build_guarded_lts({state("S", {"e"})}, {}, "S", "S");
  EXPECT_EQ(single.states().size(), 1u);
  EXPECT_TRUE(single.successors("S").empty());

  EXPECT_EQ(build_error({state("S1", {"a"}), state("S2", {"b"})}, {{"S1", "", "S9", {}}}, "S1",
                        "S2"),
            ValidationError::Kind::DanglingId);
}

TEST(BuildGuardedLts, Rejections) {
  using K = ValidationError::Kind;
  EXPECT_EQ(build_error({state("S1", {"a"}), state("S1", {"b"})}, {}, "S1", "S1"), K::DuplicateId);
  EXPECT_EQ(build_error({state("S1", {"a", "a"})}, {}, "S1", "S1"), K::DuplicateEvent);
  EXPECT_EQ(build_error({state("S1", {"a"}), state("S2", {"b"})}, {}, "S1", "S2"), K::Unreachable);
  EXPECT_EQ(build_error({state("S1", {}), state("S2", {"b"})}, {{"S1", "", "S2", {}}}, "S1", "S2"),
            K::EmptyEvents);
  EXPECT_EQ(build_error({state("S1", {"a"}), state("S2", {"b"})},
                        {{"S1", "", "S2", parse_formula("a & ghost")}}, "S1", "S2"),
            K::UnresolvedAtom);
  StateNode bad = state("S1", {"a", "b"});
  bad.combine = build_event_tree({"a", "c"}, {TreeOp::And});
  EXPECT_EQ(build_error({bad}, {}, "S1", "S1"), K::LeafMismatch);
  EXPECT_EQ(build_error({state("S1", {"a"})}, {}, "S0", "S1"), K::DanglingId);
}

TEST(BuildGuardedLts, DefaultCombineIsConjunction) {
  const auto lts = build_guarded_lts({state("S", {"a", "b", "c"})}, {}, "S", "S");
  EXPECT_EQ(lts.state("S").combine,
            build_event_tree({"a", "b", "c"}, {TreeOp::And, TreeOp::And}));
  EXPECT_THROW(lts.state("T"), ValidationError);
}

TEST(BuildGuardedLts, TerminalAtom) {
  const auto lts = build_guarded_lts({state("A", {"a"}), state("B", {"b"})},
                                     {{"A", "go", "B", {}}}, "A", "B", "S_end");
  EXPECT_EQ(lts.atom_for("B"), "S_end");
  EXPECT_EQ(lts.atom_for("A"), "A");
}

TEST(CheckPrecondition, Examples) {
  const auto lts = build_guarded_lts(
      {state("S1", {"e1", "e2"}), state("S2", {"e3"}), state("S3", {"e4"})},
      {{"S1", "", "S2", parse_formula("S1")},
       {"S2", "", "S3", parse_formula("e1 & e2")}},
      "S1", "S3");
  const auto& t1 = lts.transitions()[0];
  const auto& t2 = lts.transitions()[1];
  EXPECT_TRUE(check_precondition(lts, t1, std::vector{parse_formula("S1")}));
  EXPECT_FALSE(check_precondition(lts, t1, std::vector<Formula>{}));
  EXPECT_TRUE(check_precondition(
      lts, t2, std::vector{parse_formula("S2"), parse_formula("e1"), parse_formula("e2")}));
  EXPECT_FALSE(check_precondition(lts, t2, std::vector{parse_formula("S2"), parse_formula("e1")}));
  // S2 reached by implication elimination.
  EXPECT_TRUE(derivable(std::vector{parse_formula("S1"), parse_formula("S1 -> S2")},
                        parse_formula("S2")));
}

TEST(CheckPrecondition, MonotoneInFacts) {
  const auto lts = build_guarded_lts(
      {state("A", {"x", "y"}), state("B", {"z"})},
      {{"A", "", "B", parse_formula("x -> y")}}, "A", "B");
  const auto& t = lts.transitions()[0];
  const std::vector<Formula> pool{parse_formula("A"),      parse_formula("x"),
                                  parse_formula("y"),      parse_formula("!x"),
                                  parse_formula("B -> A"), parse_formula("z -> y"),
                                  parse_formula("z"),      parse_formula("x -> y")};
  testing::Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    std::vector<Formula> facts;
    for (const auto& f : pool)
      if (rng.chance(0.4)) facts.push_back(f);
    if (!check_precondition(lts, t, facts)) continue;
    auto more = facts;
    more.push_back(rng.pick(pool));
    EXPECT_TRUE(check_precondition(lts, t, more));
  }
}

// ---------------------------------------------------------------------------
// Guarded rules

const Formula kTrue = parse_formula("g | !g");
const Formula kFalse = parse_formula("g & !g");
const Valuation kG{{"g", true}};

TEST(LRule, ParseTags) {
  EXPECT_EQ(parse_lrule("LTAU"), LRule::Tau);
  EXPECT_EQ(parse_lrule("LREACT'"), LRule::ReactPrime);
  EXPECT_EQ(parse_lrule("LSTRUCT"), LRule::Struct);
  EXPECT_THROW(parse_lrule("LSOOM"), DomainError);
  for (LRule r : {LRule::Tau, LRule::React, LRule::ReactPrime, LRule::Par, LRule::Res,
                  LRule::Struct})
    EXPECT_EQ(parse_lrule(to_string(r)), r);
}

TEST(LRule, Examples) {
  const auto tau = apply_lrule(LRule::Tau, pi::parse_process("tau.a.0 + b.0"), kTrue, kG);
  ASSERT_EQ(tau.size(), 1u);
  EXPECT_TRUE(pi::structurally_congruent(tau[0], pi::parse_process("a.0")));

  EXPECT_TRUE(apply_lrule(LRule::React, pi::parse_process("(a.c.0 + d.0) | (a<>.e.0 + f.0)"),
                          parse_formula("g"), {{"g", false}})
                  .empty());

  const pi::Process poly = pi::parse_process("x(y).y<c>.0 | x<z>.0");
  const auto lp = apply_lrule(LRule::ReactPrime, poly, kTrue, kG);
  ASSERT_EQ(lp.size(), 1u);
  EXPECT_EQ(lp[0], pi::reduce_step(poly)[0].term);
  EXPECT_TRUE(apply_lrule(LRule::React, poly, kTrue, kG).empty());
}

TEST(LRule, AbsentGuardHolds) {
  EXPECT_EQ(apply_lrule(LRule::Tau, pi::parse_process("tau.0"), std::nullopt, {}).size(), 1u);
}

TEST(LRule, TautologyMatchesReduceStep) {
  testing::Rng rng(52);
  testing::TermGenerator gen(rng, {.max_depth = 5});
  for (int i = 0; i < 200; ++i) {
    const pi::Process p = gen.term();
    const auto lifted = apply_lrule(LRule::Struct, p, kTrue, kG);
    const auto plain = pi::reduce_step(p);
    ASSERT_EQ(lifted.size(), plain.size()) << pi::to_string(p);
    for (std::size_t k = 0; k < plain.size(); ++k)
      EXPECT_EQ(pi::canonical_form_key(lifted[k]), pi::canonical_form_key(plain[k].term));

    std::size_t by_kind = 0;
    for (LRule r : {LRule::Tau, LRule::React, LRule::ReactPrime})
      by_kind += apply_lrule(r, p, kTrue, kG).size();
    EXPECT_EQ(by_kind, plain.size());
  }
}

TEST(LRule, UnsatisfiableGuardNeverFires) {
  testing::Rng rng(53);
  testing::TermGenerator gen(rng, {.max_depth = 5});
  for (int i = 0; i < 200; ++i) {
    const pi::Process p = gen.term();
    for (LRule r : {LRule::Tau, LRule::React, LRule::ReactPrime, LRule::Par, LRule::Res,
                    LRule::Struct})
      EXPECT_TRUE(apply_lrule(r, p, kFalse, kG).empty());
  }
}

TEST(Lsoom, Examples) {
  std::vector<Event> five;
  std::vector<std::string> names;
  for (int i = 1; i <= 5; ++i) {
    five.push_back({"e" + std::to_string(i), {}});
    names.push_back(five.back().name);
  }
  const auto all_and = build_event_tree(names, std::vector<TreeOp>(4, TreeOp::And));
  Valuation v;
  for (const auto& n : names) v.set(n, true);
  EXPECT_TRUE(lsoom_eval(five, all_and, v));
  v.set("e4", false);
  EXPECT_FALSE(lsoom_eval(five, all_and, v));

  const std::vector<Event> three{{"e1", {}}, {"e2", {}}, {"e3", {}}};
  EXPECT_TRUE(lsoom_eval(three, event_tree_from_formula(parse_formula("(e1 & e2) | e3")),
                         {{"e1", false}, {"e2", true}, {"e3", true}}));
  try {
    lsoom_eval(three, build_event_tree({"e1", "e2"}, {TreeOp::Or}), {});
    ADD_FAILURE() << "expected a leaf mismatch";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationError::Kind::LeafMismatch);
  }
}

// Random tree with leaves e0..e{n-1} each used once, in shuffled order.
EventTree random_tree(testing::Rng& rng, std::vector<std::string> leaves) {
  if (leaves.size() == 1) return EventTree::leaf(leaves[0], rng.chance(0.3));
  const std::size_t cut = rng.between(1, leaves.size() - 1);
  std::vector<std::string> right(leaves.begin() + static_cast<std::ptrdiff_t>(cut), leaves.end());
  leaves.resize(cut);
  return EventTree::node(rng.chance(0.5) ? TreeOp::And : TreeOp::Or, random_tree(rng, leaves),
                         random_tree(rng, right));
}

bool fold(const EventTree& t, std::uint32_t bits) {
  if (t.is_leaf()) {
    const bool v = (bits >> std::stoi(t.event().substr(1))) & 1U;
    return t.negated() ? !v : v;
  }
  return t.op() == TreeOp::And ? fold(t.left(), bits) && fold(t.right(), bits)
                               : fold(t.left(), bits) || fold(t.right(), bits);
}

TEST(Lsoom, AgreesWithDirectFold) {
  testing::Rng rng(54);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = rng.between(1, 8);
    std::vector<Event> events;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("e" + std::to_string(i));
      events.push_back({names.back(), {}});
    }
    std::vector<std::string> order = names;
    std::shuffle(order.begin(), order.end(), rng.engine());
    const EventTree tree = random_tree(rng, order);
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
      Valuation v;
      for (std::size_t i = 0; i < n; ++i) v.set(names[i], (bits >> i) & 1U);
      ASSERT_EQ(lsoom_eval(events, tree, v), fold(tree, bits));
    }
  }
}

}  // namespace
}  // namespace lpict::lts
