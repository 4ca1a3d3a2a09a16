#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "lpict/error.hpp"
#include "lpict/formula.hpp"
#include "lpict/proof.hpp"

namespace lpict::logic {
namespace {

Formula F(const char* s) { return parse_formula(s); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Sequent tls_chain() {
  Sequent s;
  s.premises.push_back(F("S1"));
  for (const char* p : {"S1 -> S2", "S2 -> S3", "S3 -> S4", "S4 -> S5", "S5 -> S6", "S6 -> S_end"})
    s.premises.push_back(F(p));
  s.conclusion = F("S_end");
  return s;
}

// ---------------------------------------------------------------------------
// Formulas

TEST(ParseFormula, SpecExamples) {
  EXPECT_EQ(F("p -> q"), Formula::implication(Formula::atom("p"), Formula::atom("q")));
  EXPECT_EQ(F("!(p & q)"),
            Formula::negation(Formula::conjunction(Formula::atom("p"), Formula::atom("q"))));
  EXPECT_EQ(F("p -> q -> r"), F("p -> (q -> r)"));
  EXPECT_NE(F("p -> q -> r"), F("(p -> q) -> r"));
}

TEST(ParseFormula, Precedence) {
  EXPECT_EQ(F("!p & q | r -> s"), F("(((!p) & q) | r) -> s"));
  EXPECT_EQ(F("false"), Formula::falsum());
  EXPECT_THROW(F("p &"), ParseError);
  EXPECT_THROW(F("(p"), ParseError);
  EXPECT_THROW(F("p q"), ParseError);
}

TEST(ParseFormula, RandomRoundTrip) {
  testing::Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    const Formula f = testing::random_formula(rng, 5, 4);
    EXPECT_EQ(parse_formula(to_string(f)), f) << to_string(f);
  }
}

TEST(Unicode, Symbols) {
  EXPECT_EQ(to_unicode(F("!p -> (q & r | false)")), "¬p → q ∧ r ∨ ⊥");
}

TEST(EvalFormula, SpecExamples) {
  EXPECT_FALSE(eval_formula(F("p -> q"), {{"p", true}, {"q", false}}));
  EXPECT_FALSE(eval_formula(Formula::falsum(), {}));
  const Formula mt = F("(p -> q) & !q -> !p");
  for (bool p : {false, true})
    for (bool q : {false, true}) EXPECT_TRUE(eval_formula(mt, {{"p", p}, {"q", q}}));
  EXPECT_THROW(eval_formula(F("p & q"), {{"p", true}}), DomainError);
}

TEST(EvalFormula, AgreesWithBruteForce) {
  testing::Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    const Formula f = testing::random_formula(rng, 5, 4);
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
      Valuation v;
      for (int a = 0; a < 4; ++a) v.set("p" + std::to_string(a), (bits >> a) & 1U);
      ASSERT_EQ(eval_formula(f, v), testing::brute_eval(f, bits)) << to_string(f);
    }
  }
}

TEST(SemanticEntails, SpecExamples) {
  EXPECT_TRUE(semantic_entails(std::vector{F("p"), F("p -> q")}, F("q")));
  EXPECT_TRUE(semantic_entails(std::vector{F("p -> q"), F("!q")}, F("!p")));
  EXPECT_FALSE(semantic_entails(std::vector{F("p")}, F("q")));
  EXPECT_TRUE(semantic_entails(std::vector{F("false")}, F("q")));
}

TEST(SemanticEntails, AtomBudget) {
  std::vector<Formula> premises;
  for (std::size_t i = 0; i < kAtomBudget; ++i) premises.push_back(testing::atom_n(i));
  EXPECT_THROW(semantic_entails(premises, testing::atom_n(kAtomBudget)), LimitExceeded);
}

// ---------------------------------------------------------------------------
// Checker

TEST(CheckProof, PaperProofsAreValid) {
  const Sequent s = tls_chain();
  const auto forward = search_forward_chain(s.premises, s.conclusion);
  const auto refutation = search_contradiction(s.premises, s.conclusion);
  ASSERT_TRUE(forward && refutation);
  EXPECT_TRUE(check_proof(s, *forward).valid);
  EXPECT_TRUE(check_proof(s, *refutation).valid);
}

TEST(CheckProof, SwappedRefsAreAShapeMismatch) {
  const Sequent s = tls_chain();
  Proof p = *search_forward_chain(s.premises, s.conclusion);
  p.lines[2].refs = {1, 2};
  const ProofVerdict v = check_proof(s, p);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.line, 3u);
  EXPECT_EQ(v.reason, "rule-shape mismatch");
}

TEST(CheckProof, StructuralErrors) {
  const Sequent s{{F("p"), F("p -> q")}, F("q")};
  Proof good{{{1, F("p"), Rule::Premise, {}},
              {2, F("p -> q"), Rule::Premise, {}},
              {3, F("q"), Rule::ImplElim, {2, 1}}}};
  EXPECT_TRUE(check_proof(s, good).valid);

  Proof skipped = good;
  skipped.lines[1].index = 3;
  EXPECT_EQ(check_proof(s, skipped).line, 2u);

  Proof forward_ref = good;
  forward_ref.lines[2].refs = {2, 3};
  EXPECT_FALSE(check_proof(s, forward_ref).valid);

  Proof wrong_end = good;
  wrong_end.lines.pop_back();
  EXPECT_FALSE(check_proof(s, wrong_end).valid);

  Proof not_premise = good;
  not_premise.lines[0].formula = F("r");
  EXPECT_EQ(check_proof(s, not_premise).line, 1u);

  EXPECT_FALSE(check_proof(s, Proof{}).valid);
}

TEST(CheckProof, AssumptionsMustBePremisesOrTheNegatedGoal) {
  const Sequent s{{F("p -> q")}, F("q")};
  // An open assumption of p would make q derivable without p being given.
  Proof open{{{1, F("p"), Rule::Assumption, {}},
              {2, F("p -> q"), Rule::Premise, {}},
              {3, F("q"), Rule::ImplElim, {2, 1}}}};
  EXPECT_FALSE(check_proof(s, open).valid);

  // !q may be assumed only by a proof that ends in falsum.
  Proof negated{{{1, F("!q"), Rule::Assumption, {}}, {2, F("!q"), Rule::Copy, {1}}}};
  EXPECT_FALSE(check_proof({{}, F("!q")}, negated).valid);
}

TEST(CheckProof, CopyAndNegElim) {
  const Sequent s{{F("p"), F("!p")}, F("q")};
  Proof p{{{1, F("p"), Rule::Premise, {}},
           {2, F("!p"), Rule::Premise, {}},
           {3, F("p"), Rule::Copy, {1}},
           {4, F("false"), Rule::NegElim, {2, 3}}}};
  EXPECT_TRUE(check_proof(s, p).valid);
  p.lines[3].refs = {3, 2};
  EXPECT_FALSE(check_proof(s, p).valid);
}

// ---------------------------------------------------------------------------
// Searches

TEST(ForwardChain, SpecExamples) {
  const Sequent s = tls_chain();
  EXPECT_EQ(search_forward_chain(s.premises, s.conclusion)->size(), 13u);
  const auto single = search_forward_chain(std::vector{F("p")}, F("p"));
  ASSERT_TRUE(single);
  EXPECT_EQ(single->size(), 1u);
  EXPECT_FALSE(search_forward_chain(std::vector{F("p -> q")}, F("q")));
}

TEST(Contradiction, SpecExamples) {
  const Sequent s = tls_chain();
  EXPECT_EQ(search_contradiction(s.premises, s.conclusion)->size(), 15u);
  const std::vector premises{F("p"), F("p -> q")};
  const auto proof = search_contradiction(premises, F("q"));
  ASSERT_TRUE(proof);
  std::vector<Formula> formulas;
  for (const auto& l : proof->lines) formulas.push_back(l.formula);
  EXPECT_EQ(formulas, (std::vector{F("!q"), F("p -> q"), F("!p"), F("p"), F("false")}));
  EXPECT_TRUE(check_proof({premises, F("q")}, *proof).valid);
  EXPECT_FALSE(search_contradiction({}, F("p")));
}

TEST(Searches, PickTheShortestChain) {
  const std::vector premises{F("a"), F("a -> b"), F("b -> c"), F("c -> d"), F("a -> d")};
  EXPECT_EQ(search_forward_chain(premises, F("d"))->size(), 3u);
  EXPECT_EQ(search_contradiction(premises, F("d"))->size(), 5u);
}

TEST(Searches, GoldenPaperTables) {
  const Sequent s = tls_chain();
  EXPECT_EQ(render_proof(*search_forward_chain(s.premises, s.conclusion)),
            slurp(LPICT_GOLDEN_DIR "/tls13_forward_proof.txt"));
  EXPECT_EQ(render_proof(*search_contradiction(s.premises, s.conclusion)),
            slurp(LPICT_GOLDEN_DIR "/tls13_contradiction_proof.txt"));
}

TEST(Searches, LineCountLaws) {
  for (std::size_t k = 1; k <= 10; ++k) {
    const Sequent s = testing::linear_chain(k);
    EXPECT_EQ(search_forward_chain(s.premises, s.conclusion)->size(), 2 * k + 1);
    EXPECT_EQ(search_contradiction(s.premises, s.conclusion)->size(), 2 * k + 3);
  }
}

TEST(Searches, DepthBound) {
  const Sequent within = testing::linear_chain(kChainDepthBound);
  EXPECT_TRUE(search_forward_chain(within.premises, within.conclusion));
  const Sequent beyond = testing::linear_chain(kChainDepthBound + 1);
  EXPECT_FALSE(search_forward_chain(beyond.premises, beyond.conclusion));
  EXPECT_FALSE(search_contradiction(beyond.premises, beyond.conclusion));
}

TEST(Searches, FragmentCompleteness) {
  testing::Rng rng(43);
  for (int i = 0; i < 500; ++i) {
    const Sequent s = testing::random_chain_sequent(rng, 6);
    const bool entails = semantic_entails(s.premises, s.conclusion);
    const auto forward = search_forward_chain(s.premises, s.conclusion);
    const auto refutation = search_contradiction(s.premises, s.conclusion);
    ASSERT_EQ(forward.has_value(), entails);
    ASSERT_EQ(refutation.has_value(), entails);
    if (forward) {
      EXPECT_TRUE(check_proof(s, *forward).valid);
      EXPECT_TRUE(check_proof(s, *refutation).valid);
    }
  }
}

TEST(Derive, UsesTheWholeRuleSet) {
  const std::vector premises{F("p -> q"), F("!q")};
  const auto proof = derive(premises, F("!p"));
  ASSERT_TRUE(proof);
  EXPECT_EQ(proof->back().rule, Rule::ModusTollens);
  EXPECT_TRUE(check_proof({premises, F("!p")}, *proof).valid);
  EXPECT_FALSE(derive(std::vector{F("p -> q")}, F("p")));
}

TEST(Derive, PrunesUnusedLines) {
  const std::vector premises{F("x"), F("p"), F("y -> z"), F("p -> q")};
  const auto proof = derive(premises, F("q"));
  ASSERT_TRUE(proof);
  EXPECT_EQ(proof->size(), 3u);
  EXPECT_TRUE(check_proof({premises, F("q")}, *proof).valid);
}

TEST(ProvablyEquivalent, Examples) {
  EXPECT_TRUE(provably_equivalent(F("p"), F("p")));
  EXPECT_FALSE(provably_equivalent(F("p"), F("q")));
  EXPECT_FALSE(provably_equivalent(F("p -> q"), F("!q -> !p")));
  EXPECT_THROW(provably_equivalent(F("p & q"), F("p")), DomainError);
}

TEST(ProvablyEquivalent, SoundAgainstTruthTables) {
  testing::Rng rng(44);
  const std::vector<Formula> pool{F("p"),      F("q"),      F("!p"),           F("!q"),
                                  F("p -> q"), F("q -> p"), F("p -> p"),       F("!q -> !p"),
                                  F("!p -> q"), F("p -> !q"), F("(p -> q) -> q")};
  for (const auto& f : pool)
    for (const auto& g : pool)
      if (provably_equivalent(f, g)) {
        EXPECT_TRUE(semantic_entails(std::vector{f}, g)) << to_string(f) << " / " << to_string(g);
        EXPECT_TRUE(semantic_entails(std::vector{g}, f)) << to_string(f) << " / " << to_string(g);
      }
}

TEST(CrossValidate, Examples) {
  const Sequent s = tls_chain();
  const auto tls = cross_validate(s.premises, s.conclusion);
  EXPECT_TRUE(tls.semantic && tls.provable && tls.agree);
  const auto none = cross_validate(std::vector{F("p")}, F("q"));
  EXPECT_FALSE(none.semantic);
  EXPECT_FALSE(none.provable);
  EXPECT_TRUE(none.agree);
  EXPECT_THROW(cross_validate(std::vector{F("p & q")}, F("q")), DomainError);
  std::vector<Formula> wide;
  for (std::size_t i = 0; i <= kCrossValidationAtoms; ++i) wide.push_back(testing::atom_n(i));
  EXPECT_THROW(cross_validate(wide, F("p0")), DomainError);
}

TEST(CrossValidate, RandomChainsAgree) {
  testing::Rng rng(45);
  for (int i = 0; i < 300; ++i) {
    const Sequent s = testing::random_chain_sequent(rng, 8);
    EXPECT_TRUE(cross_validate(s.premises, s.conclusion).agree);
  }
}

TEST(Soundness, CorruptedAndRandomProofs) {
  testing::Rng rng(46);
  int accepted = 0;
  for (int i = 0; i < 500; ++i) {
    Sequent s = testing::random_chain_sequent(rng, 5);
    s.premises.push_back(testing::random_formula(rng, 2, 5));
    auto proof = i % 2 ? search_contradiction(s.premises, s.conclusion)
                       : derive(s.premises, s.conclusion);
    Proof p = proof ? *proof : testing::random_proof(rng, 5);
    if (rng.chance(0.7)) testing::corrupt(s, p, rng, 5);
    if (check_proof(s, p).valid) {
      ++accepted;
      ASSERT_TRUE(semantic_entails(s.premises, s.conclusion));
    }
  }
  EXPECT_GT(accepted, 50);
}

TEST(Render, Justifications) {
  const ProofLine mt{3, F("!p"), Rule::ModusTollens, {2, 1}};
  EXPECT_EQ(justification(mt), "MT 2,1");
  EXPECT_EQ(justification({3, F("q"), Rule::ImplElim, {2, 1}}, false), "->e 2,1");
  EXPECT_EQ(justification({3, F("false"), Rule::NegElim, {2, 1}}), "¬e 2,1");
  EXPECT_EQ(justification({3, F("q"), Rule::Copy, {2}}), "copy 2");
  EXPECT_EQ(display_width("¬S_end"), 6u);
  EXPECT_EQ(render_sequent({{F("p"), F("p -> q")}, F("q")}), "p, p → q ⊢ q");
}

TEST(Rule, NamesRoundTrip) {
  for (Rule r : {Rule::Premise, Rule::Assumption, Rule::ImplElim, Rule::ModusTollens,
                 Rule::NegElim, Rule::Copy})
    EXPECT_EQ(rule_from_string(to_string(r)), r);
  EXPECT_THROW(rule_from_string("or_intro"), DomainError);
}

}  // namespace
}  // namespace lpict::logic
