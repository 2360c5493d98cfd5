#include <gtest/gtest.h>

#include <iostream>

#include "ringlab/corpus.hpp"
#include "ringlab/isoclin.hpp"

using namespace ringlab;

namespace {

RingPair scalar_in_upper_tri(const FiniteRing& ut) {
  return RingPair::make(ut, named_subring(ut, "scalars"));
}

RingPair zero_in_row(const FiniteRing& row) { return RingPair::make(row, zero_subring(row)); }

}  // namespace

TEST(PairInvariants, CyclicAndTriangularQuotients) {
  const FiniteRing z8 = zn(8);
  const RingPair p1 = RingPair::make(z8, subring_closure(z8, {4}));
  const PairInvariants i1 = pair_invariants(p1);
  EXPECT_EQ(i1.quotient_factors, (std::vector<long long>{4}));
  EXPECT_TRUE(i1.commutator_factors.empty());
  EXPECT_EQ(i1.pr_value, Rational::one());

  const FiniteRing z12 = zn(12);
  const RingPair p2 = RingPair::make(z12, subring_closure(z12, {3}));
  EXPECT_EQ(pair_invariants(p2).quotient_factors, (std::vector<long long>{3}));

  const FiniteRing ut = mat_upper_tri(3);
  const PairInvariants i3 = pair_invariants(scalar_in_upper_tri(ut));
  EXPECT_EQ(i3.quotient_factors, (std::vector<long long>{3, 3}));  // Z_p x Z_p
  EXPECT_TRUE(i3.sub_quotient_factors.empty());                    // S = Z(S,R)
}

TEST(FindIsoclinism, ScalarPairMatchesZeroPair) {
  for (long long p : {2LL, 3LL, 5LL}) {
    SCOPED_TRACE(p);
    const FiniteRing ut = mat_upper_tri(p);
    const FiniteRing row = mat_row(p);
    const RingPair p1 = scalar_in_upper_tri(ut);
    const RingPair p2 = zero_in_row(row);
    const auto w = find_isoclinism(p1, p2);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_witness(p1, p2, *w));
    EXPECT_TRUE(verify_invariance(p1, p2, *w).passed());
    EXPECT_TRUE(verify_coset_commutator_iso(p1, p2, *w).passed());
    EXPECT_EQ(pr_pair_count(p1.sub), Rational::one());
    EXPECT_EQ(pr_pair_count(p2.sub), Rational::one());
  }
}

TEST(FindIsoclinism, CyclicPairsWithDifferentQuotients) {
  const FiniteRing z8 = zn(8);
  const FiniteRing z12 = zn(12);
  const RingPair p1 = RingPair::make(z8, subring_closure(z8, {4}));
  const RingPair p2 = RingPair::make(z12, subring_closure(z12, {3}));
  EXPECT_FALSE(find_isoclinism(p1, p2).has_value());

  const IsoclinismDecision d = decide_isoclinism(p1, p2);
  EXPECT_EQ(d.kind, IsoclinismDecision::Kind::not_isoclinic);
  EXPECT_EQ(d.reason, "quotient invariants [4] vs [3]");
}

TEST(FindIsoclinism, IdentityAndReflexivity) {
  const FiniteRing r = mat_row(2);
  for (const Subring& s : enumerate_subrings(r)) {
    const RingPair p = RingPair::make(r, s);
    const auto w = find_isoclinism(p, p);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_witness(p, p, *w));
  }
}

TEST(FindIsoclinism, SymmetryOnSamples) {
  const FiniteRing a = mat_row(2);
  const FiniteRing b = mat_upper_tri(2);
  const FiniteRing c = zn(4);
  const std::vector<RingPair> pairs = {
      RingPair::make(a, full_subring(a)),
      RingPair::make(b, full_subring(b)),
      RingPair::make(c, full_subring(c)),
      RingPair::make(b, named_subring(b, "scalars")),
  };
  for (const RingPair& x : pairs)
    for (const RingPair& y : pairs)
      EXPECT_EQ(find_isoclinism(x, y).has_value(), find_isoclinism(y, x).has_value());
}

TEST(RingsIsoclinic, CommutativeRingsAreAllIsoclinic) {
  const auto w = rings_isoclinic(zn(2), zn(3));
  ASSERT_TRUE(w.has_value());  // both quotients and commutators trivial
  EXPECT_TRUE(rings_isoclinic(zn(4), zero_ring({9})).has_value());
}

TEST(RingsIsoclinic, CommutatorObstruction) {
  EXPECT_FALSE(rings_isoclinic(mat_row(2), zn(4)).has_value());
  const FiniteRing row = mat_row(2);
  const FiniteRing z4 = zn(4);
  const IsoclinismDecision d = decide_isoclinism(RingPair::make(row, full_subring(row)),
                                                 RingPair::make(z4, full_subring(z4)));
  EXPECT_EQ(d.kind, IsoclinismDecision::Kind::not_isoclinic);
  EXPECT_NE(d.reason.find("quotient invariants"), std::string::npos);
}

TEST(RingsIsoclinic, RowAndUpperTriangularAreIsoclinic) {
  // both have R/Z(R) = Z_2 x Z_2, [R,R] = Z_2 and Pr = 5/8
  const FiniteRing row = mat_row(2);
  const FiniteRing ut = mat_upper_tri(2);
  const auto w = rings_isoclinic(row, ut);
  ASSERT_TRUE(w.has_value());
  const RingPair p1 = RingPair::make(row, full_subring(row));
  const RingPair p2 = RingPair::make(ut, full_subring(ut));
  EXPECT_TRUE(verify_witness(p1, p2, *w));
  EXPECT_TRUE(verify_invariance(p1, p2, *w).passed());
  EXPECT_TRUE(verify_coset_commutator_iso(p1, p2, *w).passed());
}

TEST(FindIsoclinism, PrefilterNeverChangesAnswers) {
  const FiniteRing r1 = mat_row(2), r2 = zn(4), r3 = zero_ring({2, 2}), r4 = mat_upper_tri(2);
  std::vector<RingPair> pairs;
  for (const FiniteRing* r : {&r1, &r2, &r3, &r4})
    for (const Subring& s : enumerate_subrings(*r)) pairs.push_back(RingPair::make(*r, s));
  for (const RingPair& x : pairs)
    for (const RingPair& y : pairs) {
      const bool with = find_isoclinism(x, y, kDefaultPhiBudget, true).has_value();
      const bool without = find_isoclinism(x, y, kDefaultPhiBudget, false).has_value();
      EXPECT_EQ(with, without);
    }
}

TEST(FindIsoclinism, BudgetExhaustionIsUndecided) {
  const FiniteRing ut = mat_upper_tri(2);
  const FiniteRing row = mat_row(2);
  const RingPair p1 = scalar_in_upper_tri(ut);
  const RingPair p2 = zero_in_row(row);
  EXPECT_THROW(find_isoclinism(p1, p2, 1), SearchBudgetExceeded);
  const IsoclinismDecision d = decide_isoclinism(p1, p2, 1);
  EXPECT_EQ(d.kind, IsoclinismDecision::Kind::undecided);
}

TEST(VerifyWitness, RejectsTamperedWitnesses) {
  const FiniteRing row = mat_row(2);
  const FiniteRing ut = mat_upper_tri(2);
  const RingPair p1 = RingPair::make(row, full_subring(row));
  const RingPair p2 = RingPair::make(ut, full_subring(ut));
  auto w = rings_isoclinic(row, ut);
  ASSERT_TRUE(w.has_value());

  IsoclinismWitness broken_phi = *w;
  std::swap(broken_phi.phi[0], broken_phi.phi[1]);
  EXPECT_FALSE(verify_witness(p1, p2, broken_phi));

  IsoclinismWitness broken_psi = *w;
  std::swap(broken_psi.psi_image[0], broken_psi.psi_image[1]);
  EXPECT_FALSE(verify_witness(p1, p2, broken_psi));
  EXPECT_THROW(verify_invariance(p1, p2, broken_psi), Error);
}

TEST(Invariance, WitnessesAcrossCorpusPreservePr) {
  // every witness found among pairs drawn from a small corpus keeps Pr equal
  const auto corpus = builtin_corpus(9);
  std::vector<RingPair> pairs;
  for (const auto& rp : corpus)
    for (const Subring& s : enumerate_subrings(*rp)) pairs.push_back(RingPair::make(*rp, s));

  long long witnesses = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pair_invariants(pairs[i]) != pair_invariants(pairs[j])) continue;
      const auto w = find_isoclinism(pairs[i], pairs[j]);
      if (!w) continue;
      ++witnesses;
      ASSERT_TRUE(verify_witness(pairs[i], pairs[j], *w));
      EXPECT_EQ(pr_pair_count(pairs[i].sub), pr_pair_count(pairs[j].sub));
    }
  EXPECT_GT(witnesses, 0);
}

// transitivity of pairwise Z-isoclinism is not asserted anywhere; the sweep
// only records what it sees
TEST(Isoclinism, TransitivityStatisticsRecordedOnly) {
  const FiniteRing a = mat_row(2);
  const FiniteRing b = mat_upper_tri(2);
  const FiniteRing c = mat_full(2, 2);
  const std::vector<RingPair> pairs = {RingPair::make(a, full_subring(a)),
                                       RingPair::make(b, full_subring(b)),
                                       RingPair::make(c, full_subring(c))};
  long long triples = 0, transitive = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j)
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        if (find_isoclinism(pairs[i], pairs[j]) && find_isoclinism(pairs[j], pairs[k])) {
          ++triples;
          if (find_isoclinism(pairs[i], pairs[k])) ++transitive;
        }
      }
  std::cout << "[ stats  ] transitive chains: " << transitive << "/" << triples << "\n";
  SUCCEED();
}
