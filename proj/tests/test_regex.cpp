#include <gtest/gtest.h>

#include "generators.hpp"
#include "lpict/error.hpp"
#include "lpict/regex.hpp"

namespace lpict::pi {
namespace {

using R = RegularExpr;

const std::vector<Name> kAlphabet{"a", "b"};

// w is in S.X + T, decided by splitting words.
bool in_rhs(const R& s, const R& x, const R& t, const Word& w) {
  if (testing::naive_member(t, w)) return true;
  for (std::size_t m = 0; m <= w.size(); ++m)
    if (testing::naive_member(s, w, 0, m) && testing::naive_member(x, w, m, w.size())) return true;
  return false;
}

TEST(Arden, SymbolsGiveStarConcat) {
  const R x = arden_solve(R::symbol("a"), R::symbol("b"));
  EXPECT_EQ(x, R::concat(R::star(R::symbol("a")), R::symbol("b")));
  for (const auto& w : enumerate_words(kAlphabet, 5)) {
    const bool expected = !w.empty() && w.back() == "b" &&
                          std::all_of(w.begin(), w.end() - 1, [](const Name& n) { return n == "a"; });
    EXPECT_EQ(x.matches(w), expected);
    EXPECT_EQ(x.matches(w), in_rhs(R::symbol("a"), x, R::symbol("b"), w));
  }
}

TEST(Arden, EmptySGivesT) {
  const R t = R::symbol("t");
  EXPECT_EQ(arden_solve(R::empty(), t), t);
}

TEST(Arden, NullableSIsRejected) {
  EXPECT_THROW(arden_solve(R::epsilon(), R::symbol("b")), DomainError);
  EXPECT_THROW(arden_solve(R::star(R::symbol("a")), R::symbol("b")), DomainError);
}

TEST(Arden, RandomFixpoints) {
  testing::Rng rng(31);
  int checked = 0;
  while (checked < 100) {
    const R s = testing::random_regex(rng, 3, kAlphabet);
    if (s.nullable()) continue;
    const R t = testing::random_regex(rng, 3, kAlphabet);
    const R x = arden_solve(s, t);
    for (const auto& w : enumerate_words(kAlphabet, 6))
      ASSERT_EQ(testing::naive_member(x, w), in_rhs(s, x, t, w))
          << "S=" << to_string(s) << " T=" << to_string(t);
    ++checked;
  }
}

TEST(RegularExpr, DerivativesAgreeWithSplitting) {
  testing::Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const R r = testing::random_regex(rng, 4, kAlphabet);
    for (const auto& w : enumerate_words(kAlphabet, 5))
      ASSERT_EQ(r.matches(w), testing::naive_member(r, w)) << to_string(r);
  }
}

TEST(RegularExpr, EnumerateWordsCountsEveryLength) {
  EXPECT_EQ(enumerate_words(kAlphabet, 0).size(), 1u);
  EXPECT_EQ(enumerate_words(kAlphabet, 3).size(), 1u + 2 + 4 + 8);
  EXPECT_EQ(enumerate_words({"a", "b", "c"}, 2).size(), 1u + 3 + 9);
}

}  // namespace
}  // namespace lpict::pi
