#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

namespace typerank {
namespace {

using namespace support;

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(ty("N->N->N")).type(), ty("N*N->N"));
  EXPECT_EQ(canonicalize(ty("N->N*N")).type(), ty("(N->N)*(N->N)"));
  EXPECT_EQ(canonicalize(ty("(N->N)*((N->N)->N)")).type(), ty("((N->N)->N)*(N->N)"));
  EXPECT_EQ(canonicalize(N).type(), N);
  EXPECT_EQ(canonicalize(ty("N*(N*N)")).type(), ty("N*N*N"));
  EXPECT_EQ(canonicalize(ty("N*(N->N)")).type(), ty("(N->N)*N"));
  EXPECT_EQ(canonicalize(ty("N->(N->N)->N")).type(), ty("(N->N)*N->N"));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(N), Ordinal::one());
  EXPECT_EQ(rank(ty("N->N")), Ordinal::omega());
  EXPECT_EQ(rank(ty("(N*N->N)->N")), ord("w^(w^2)"));
  EXPECT_EQ(rank(ty("(N->N)*(N->N)->N")), ord("w^(w*2)"));
  EXPECT_EQ(rank(ty("((N->N)->N)*((N->N)->N)")), ord("w^w*2"));
  EXPECT_EQ(rank(ty("N*N")), Ordinal::finite(2));
  EXPECT_EQ(rank(ty("(N->N)*N")), ord("w + 1"));
  EXPECT_EQ(rank(ty("N->N*N")), ord("w*2"));
}

TEST(TypeOfOrdinal, Examples) {
  EXPECT_EQ(type_of_ordinal(Ordinal::one()).type(), N);
  EXPECT_EQ(type_of_ordinal(ord("w + 1")).type(), ty("(N->N)*N"));
  EXPECT_EQ(type_of_ordinal(ord("w^w")).type(), ty("(N->N)->N"));
  EXPECT_EQ(print_type(type_of_ordinal(ord("w^w")).type()), "(N->N)->N");
  EXPECT_EQ(type_of_ordinal(ord("w^2")).type(), ty("N*N->N"));
  EXPECT_THROW(type_of_ordinal(Ordinal::zero()), DomainError);
}

TEST(CompareTypes, Examples) {
  EXPECT_EQ(compare_types(ty("N*N"), ty("N->N")), Order::Less);
  EXPECT_EQ(compare_types(ty("(N*N->N)->N"), ty("((N->N)->N)*((N->N)->N)")), Order::Greater);
  EXPECT_EQ(compare_types(ty("N->N->N"), ty("N*N->N")), Order::Equal);
}

TEST(TriviallyIsomorphic, Examples) {
  EXPECT_TRUE(trivially_isomorphic(ty("N->N->N"), ty("N*N->N")));
  EXPECT_FALSE(trivially_isomorphic(N, ty("N->N")));
  EXPECT_TRUE(trivially_isomorphic(ty("N*(N->N)"), ty("(N->N)*N")));
}

// Grammar of canonical types, checked independently of the implementation.
bool matches_canonical_grammar(const Type& t);

bool is_factor(const Type& t) {
  if (t.is_base()) return true;
  return t.is_arrow() && t.codomain().is_base() && matches_canonical_grammar(t.domain());
}

bool matches_canonical_grammar(const Type& t) {
  std::vector<Type> factors;
  Type cur = t;
  while (cur.is_prod()) {
    factors.push_back(cur.right());
    cur = cur.left();
  }
  factors.push_back(cur);
  std::reverse(factors.begin(), factors.end());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_factor(factors[i])) return false;
    if (i > 0 && rank(factors[i - 1]) < rank(factors[i])) return false;
  }
  return true;
}

TEST(Canonicalize, OutputMatchesGrammarAndIsIdempotent) {
  for (const Type& t : types_up_to(12)) {
    Type c = canonicalize(t).type();
    ASSERT_TRUE(matches_canonical_grammar(c)) << print_type(t) << " -> " << print_type(c);
    ASSERT_TRUE(is_canonical(c)) << print_type(c);
    ASSERT_EQ(canonicalize(c).type(), c) << print_type(t);
    ASSERT_EQ(is_canonical(t), c == t) << print_type(t);
  }
}

TEST(Bijection, RankAndTypeOfOrdinalAreInverse) {
  std::set<Ordinal> ranks;
  for (const Type& t : types_up_to(12)) {
    Ordinal r = rank(t);
    ASSERT_GE(r, Ordinal::one());
    ASSERT_EQ(type_of_ordinal(r), canonicalize(t)) << print_type(t);
    ranks.insert(r);
  }
  for (const Ordinal& a : ranks) ASSERT_EQ(rank(type_of_ordinal(a).type()), a) << print_ordinal(a);
  for (const auto& [triple, a] : poly_range()) {
    if (!a.is_zero()) {
      ASSERT_EQ(rank(type_of_ordinal(a).type()), a) << print_ordinal(a);
    }
  }
}

// Every type obtained by one application of a generator of trivial
// isomorphism, in either direction, at the root.
std::vector<Type> root_rewrites(const Type& t) {
  std::vector<Type> out;
  if (t.is_arrow()) {
    const Type& a = t.domain();
    const Type& c = t.codomain();
    if (a.is_prod()) out.push_back(arr(a.left(), arr(a.right(), c)));
    if (c.is_arrow()) {
      out.push_back(arr(prd(a, c.domain()), c.codomain()));
      out.push_back(arr(c.domain(), arr(a, c.codomain())));
    }
    if (c.is_prod()) out.push_back(prd(arr(a, c.left()), arr(a, c.right())));
  } else if (t.is_prod()) {
    const Type& l = t.left();
    const Type& r = t.right();
    out.push_back(prd(r, l));
    if (l.is_prod()) out.push_back(prd(l.left(), prd(l.right(), r)));
    if (r.is_prod()) out.push_back(prd(prd(l, r.left()), r.right()));
    if (l.is_arrow() && r.is_arrow() && l.domain() == r.domain()) {
      out.push_back(arr(l.domain(), prd(l.codomain(), r.codomain())));
    }
  }
  return out;
}

std::vector<Type> rewrites_anywhere(const Type& t) {
  std::vector<Type> out = root_rewrites(t);
  if (t.is_base()) return out;
  for (const Type& l : rewrites_anywhere(t.left())) out.push_back(t.is_arrow() ? arr(l, t.right()) : prd(l, t.right()));
  for (const Type& r : rewrites_anywhere(t.right())) out.push_back(t.is_arrow() ? arr(t.left(), r) : prd(t.left(), r));
  return out;
}

TEST(Rank, InvariantUnderGeneratorRewrites) {
  std::mt19937_64 rng(17);
  std::size_t checked = 0;
  for (const Type& t : types_up_to(11)) {
    for (const Type& u : rewrites_anywhere(t)) {
      ASSERT_EQ(rank(u), rank(t)) << print_type(t) << " ~ " << print_type(u);
      ASSERT_TRUE(trivially_isomorphic(t, u)) << print_type(t) << " ~ " << print_type(u);
      ++checked;
    }
  }
  // Random walks of rewrites on larger random types.
  for (int i = 0; i < 300; ++i) {
    Type t = random_type(rng, 5), u = t;
    for (int step = 0; step < 8; ++step) {
      auto next = rewrites_anywhere(u);
      if (next.empty()) break;
      u = next[rng() % next.size()];
      ASSERT_EQ(rank(u), rank(t)) << print_type(t) << " ~ " << print_type(u);
      ++checked;
    }
  }
  EXPECT_GT(checked, 10000u);
}

TEST(CompareTypes, AntisymmetryAndTotality) {
  auto all = types_up_to(9);
  for (const Type& s : all) {
    for (const Type& t : all) {
      Order st = compare_types(s, t), ts = compare_types(t, s);
      bool same = canonicalize(s) == canonicalize(t);
      ASSERT_EQ(st == Order::Equal, same) << print_type(s) << " vs " << print_type(t);
      ASSERT_EQ(st == Order::Equal, ts == Order::Equal);
      ASSERT_EQ(st == Order::Less, ts == Order::Greater);
      ASSERT_EQ(trivially_isomorphic(s, t), same);
    }
  }
}

TEST(CompareTypes, EqualRankFactorsAreIdentical) {
  auto all = types_up_to(11);
  std::map<Ordinal, Type> seen;
  for (const Type& t : all) {
    Type c = canonicalize(t).type();
    auto [it, fresh] = seen.emplace(rank(t), c);
    if (!fresh) {
      ASSERT_EQ(it->second, c) << print_type(t);
    }
  }
}

TEST(CompareTypes, ProductWithNIsStrictlyLarger) {
  for (const Type& t : types_up_to(12)) {
    ASSERT_EQ(compare_types(prd(t, N), t), Order::Greater) << print_type(t);
    ASSERT_EQ(compare_types(prd(N, t), t), Order::Greater) << print_type(t);
  }
}

void expect_witness_verifies(const Type& s, const Type& t) {
  IsoWitness w = iso_witness(s, t);
  ASSERT_EQ(w.source, s);
  ASSERT_EQ(w.target, t);
  ASSERT_EQ(typecheck(w.fwd), arr(s, t)) << print_term(w.fwd);
  ASSERT_EQ(typecheck(w.bwd), arr(t, s)) << print_term(w.bwd);
  ASSERT_TRUE(free_variables(w.fwd).empty());
  ASSERT_TRUE(numerals(w.fwd).empty() && numerals(w.bwd).empty()) << "iso witnesses are numeral-free";
  ASSERT_TRUE(equal_terms(compose(s, w.fwd, w.bwd), identity(s), arr(s, s)))
      << print_type(s) << " ~ " << print_type(t) << "\nfwd " << print_term(w.fwd) << "\nbwd " << print_term(w.bwd);
  ASSERT_TRUE(equal_terms(compose(t, w.bwd, w.fwd), identity(t), arr(t, t)))
      << print_type(s) << " ~ " << print_type(t) << "\nfwd " << print_term(w.fwd) << "\nbwd " << print_term(w.bwd);
}

TEST(IsoWitness, Examples) {
  IsoWitness id = iso_witness(N, N);
  EXPECT_EQ(id.fwd, identity(N));
  EXPECT_EQ(id.bwd, identity(N));

  IsoWitness curry = iso_witness(ty("N*N->N"), ty("N->N->N"));
  EXPECT_EQ(curry.fwd, parse_term("\\f:N*N->N. \\a:N. \\b:N. f <a, b>")) << print_term(curry.fwd);
  EXPECT_EQ(curry.bwd, parse_term("\\g:N->N->N. \\p:N*N. g (fst p) (snd p)")) << print_term(curry.bwd);

  IsoWitness swap = iso_witness(ty("N*(N->N)"), ty("(N->N)*N"));
  EXPECT_EQ(swap.fwd, parse_term("\\p:N*(N->N). <snd p, fst p>")) << print_term(swap.fwd);

  EXPECT_THROW(iso_witness(N, ty("N->N")), DomainError);
}

TEST(IsoWitness, ToCanonicalFormVerifiesExhaustively) {
  for (const Type& t : types_up_to(11)) expect_witness_verifies(t, canonicalize(t).type());
}

TEST(IsoWitness, BetweenEquivalentTypesVerifies) {
  auto all = types_up_to(9);
  for (const Type& s : all) {
    for (const Type& t : all) {
      if (trivially_isomorphic(s, t)) expect_witness_verifies(s, t);
    }
  }
  for (const Type& t : types_up_to(9)) {
    for (const Type& u : rewrites_anywhere(t)) expect_witness_verifies(t, u);
  }
}

}  // namespace
}  // namespace typerank
