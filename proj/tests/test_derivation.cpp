#include "support.hpp"

#include "typerank/derivation.hpp"

#include <gtest/gtest.h>

namespace typerank {
namespace {

using namespace support;
using Clause = LeDerivation::Clause;

TEST(DeriveLe, Examples) {
  LeDerivation refl = derive_le(Ordinal::finite(5), Ordinal::finite(5));
  EXPECT_EQ(refl.clause(), Clause::Refl);
  EXPECT_EQ(refl.lhs(), Ordinal::finite(5));

  LeDerivation succ = derive_le(Ordinal::one(), Ordinal::finite(2));
  EXPECT_EQ(succ.clause(), Clause::Succ);
  EXPECT_EQ(succ.param(), Ordinal::one());

  LeDerivation step = derive_le(ord("w*2"), ord("w^2"));
  EXPECT_EQ(step.clause(), Clause::OmegaStep);
  EXPECT_EQ(step.param(), Ordinal::one());
  EXPECT_EQ(step.k(), 2u);
}

TEST(DeriveLe, RejectsDescendingPairs) {
  EXPECT_THROW(derive_le(Ordinal::omega(), Ordinal::one()), DomainError);
  EXPECT_THROW(derive_le(ord("w + 1"), ord("w")), DomainError);
}

TEST(CheckDerivation, Examples) {
  EXPECT_TRUE(check_derivation(LeDerivation::refl(Ordinal::omega())));
  auto bogus =
      LeDerivation::claimed(Clause::Succ, Ordinal::omega(), 0, {}, Ordinal::omega(), ord("w*2"));
  DerivationCheck c = check_derivation(bogus);
  EXPECT_FALSE(c);
  EXPECT_TRUE(c.path.empty());
  EXPECT_FALSE(c.message.empty());
}

TEST(CheckDerivation, ReportsPathToBadNode) {
  LeDerivation good = derive_le(Ordinal::one(), Ordinal::finite(2));
  LeDerivation bad = LeDerivation::claimed(Clause::OmegaStep, Ordinal::one(), 2, {}, ord("w*3"), ord("w^2"));
  LeDerivation root = LeDerivation::claimed(Clause::Trans, Ordinal::zero(), 0, {good, bad}, Ordinal::one(), ord("w^2"));
  DerivationCheck c = check_derivation(root);
  ASSERT_FALSE(c);
  EXPECT_EQ(c.path, std::vector<std::size_t>{1});
}

TEST(CheckDerivation, SideConditions) {
  // Trans with mismatched middle.
  auto t = LeDerivation::claimed(Clause::Trans, {}, 0,
                                 {LeDerivation::succ(Ordinal::one()), LeDerivation::refl(Ordinal::finite(3))},
                                 Ordinal::one(), Ordinal::finite(3));
  EXPECT_FALSE(check_derivation(t));
  // Sum-mono that is not a Cantor sum: 1 + (1 <= w).
  auto inner = derive_le(Ordinal::one(), Ordinal::omega());
  auto s = LeDerivation::claimed(Clause::SumMono, Ordinal::one(), 0, {inner}, Ordinal::finite(2), Ordinal::omega());
  EXPECT_FALSE(check_derivation(s));
  // Sum-mono with g = 0 is disallowed.
  auto z = LeDerivation::claimed(Clause::SumMono, Ordinal::zero(), 0, {inner}, Ordinal::one(), Ordinal::omega());
  EXPECT_FALSE(check_derivation(z));
  // A correct sum-mono.
  auto ok = LeDerivation::sum_mono(ord("w^2"), derive_le(Ordinal::one(), Ordinal::omega()));
  EXPECT_TRUE(check_derivation(ok));
  EXPECT_EQ(ok.lhs(), ord("w^2 + 1"));
  EXPECT_EQ(ok.rhs(), ord("w^2 + w"));
  // Exp-mono lifts endpoints.
  auto e = LeDerivation::exp_mono(derive_le(Ordinal::finite(2), Ordinal::omega()));
  EXPECT_TRUE(check_derivation(e));
  EXPECT_EQ(e.lhs(), ord("w^2"));
  EXPECT_EQ(e.rhs(), ord("w^w"));
  // Wrong claimed endpoints on an otherwise valid exp-mono.
  auto bad_e = LeDerivation::claimed(Clause::ExpMono, {}, 0, {e.children()[0]}, ord("w^3"), ord("w^w"));
  EXPECT_FALSE(check_derivation(bad_e));
}

TEST(FundamentalSequence, Examples) {
  EXPECT_EQ(fundamental_sequence(Ordinal::omega(), 3), Ordinal::finite(3));
  EXPECT_EQ(fundamental_sequence(ord("w^2"), 2), ord("w*2"));
  EXPECT_EQ(fundamental_sequence(ord("w^w"), 4), ord("w^4"));
  EXPECT_EQ(fundamental_sequence(ord("w^w + w"), 1), ord("w^w + 1"));
  EXPECT_EQ(fundamental_sequence(ord("w^(w^w)"), 2), ord("w^(w^2)"));
}

TEST(FundamentalSequence, IncreasesTowardsTheLimit) {
  for (const char* text : {"w", "w^2", "w^w", "w^(w + 1)", "w^(w^w)*2", "w^3 + w^w"}) {
    Ordinal limit = ord(text);
    ASSERT_TRUE(limit.is_limit());
    for (std::size_t k = 1; k < 6; ++k) {
      EXPECT_LT(fundamental_sequence(limit, k), fundamental_sequence(limit, k + 1)) << text;
      EXPECT_LT(fundamental_sequence(limit, k + 1), limit) << text;
    }
  }
}

void expect_valid(const Ordinal& a, const Ordinal& b) {
  LeDerivation d = derive_le(a, b);
  DerivationCheck c = check_derivation(d);
  ASSERT_TRUE(c) << print_ordinal(a) << " <= " << print_ordinal(b) << ": " << c.message;
  ASSERT_EQ(d.lhs(), a);
  ASSERT_EQ(d.rhs(), b);
  if (!a.is_zero()) {
    ASSERT_FALSE(mentions_zero(d)) << print_ordinal(a) << " <= " << print_ordinal(b);
  }
}

TEST(DeriveLe, CompleteOnPolynomialRange) {
  auto range = poly_range();
  for (const auto& [x, a] : range) {
    for (const auto& [y, b] : range) {
      if (a <= b) expect_valid(a, b);
    }
  }
}

TEST(DeriveLe, CompleteOnRanksOfSmallTypes) {
  std::vector<Ordinal> ranks;
  for (const Type& t : types_up_to(9)) ranks.push_back(rank(t));
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  for (const Ordinal& a : ranks) {
    for (const Ordinal& b : ranks) {
      if (a <= b) expect_valid(a, b);
    }
  }
}

TEST(DeriveLe, FromZero) {
  for (const char* b : {"0", "1", "w", "w^w + 3"}) {
    LeDerivation d = derive_le(Ordinal::zero(), ord(b));
    EXPECT_TRUE(check_derivation(d)) << b;
  }
}

// Any tree the checker accepts has lhs <= rhs at every node.
void expect_sound(const LeDerivation& d) {
  EXPECT_NE(compare_ordinals(d.lhs(), d.rhs()), Order::Greater);
  for (const auto& c : d.children()) expect_sound(c);
}

TEST(CheckDerivation, SoundOnRandomAcceptedTrees) {
  std::mt19937_64 rng(13);
  auto range = poly_range(3);
  std::size_t accepted = 0;
  for (int i = 0; i < 20000; ++i) {
    const Ordinal& a = range[rng() % range.size()].second;
    const Ordinal& b = range[rng() % range.size()].second;
    LeDerivation d = [&] {
      switch (rng() % 6) {
        case 0:
          return LeDerivation::refl(a);
        case 1:
          return LeDerivation::succ(a);
        case 2:
          return LeDerivation::omega_step(range[rng() % 4].second, 1 + rng() % 3);
        case 3:
          return LeDerivation::claimed(Clause::Trans, {}, 0, {LeDerivation::succ(a), LeDerivation::succ(b)}, a,
                                       cantor_add(b, Ordinal::one()));
        case 4:
          return LeDerivation::claimed(Clause::SumMono, a, 0, {LeDerivation::succ(b)}, cantor_add(a, b),
                                       cantor_add(a, cantor_add(b, Ordinal::one())));
        default:
          return LeDerivation::claimed(Clause::Succ, a, 0, {}, a, b);
      }
    }();
    if (check_derivation(d)) {
      ++accepted;
      expect_sound(d);
    }
  }
  EXPECT_GT(accepted, 1000u);
}

TEST(Derivation, Helpers) {
  LeDerivation d = derive_le(Ordinal::finite(3), ord("w^w"));
  EXPECT_GE(d.node_count(), 3u);
  EXPECT_EQ(max_omega_step(derive_le(ord("w*2"), ord("w^2"))), 2u);
  EXPECT_EQ(max_omega_step(LeDerivation::refl(Ordinal::one())), 0u);
  EXPECT_STREQ(clause_name(Clause::OmegaStep), "omega-step");
  EXPECT_STREQ(clause_name(Clause::SumMono), "sum-mono");
  EXPECT_STREQ(clause_name(Clause::ExpMono), "exp-mono");
}

}  // namespace
}  // namespace typerank
