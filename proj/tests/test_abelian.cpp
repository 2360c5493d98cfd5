#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "ringlab/abelian.hpp"

using namespace ringlab;

namespace {

AbelianGroup Z(std::vector<long long> orders) { return AbelianGroup(std::move(orders)); }

}  // namespace

TEST(Smith, DiagonalChains) {
  EXPECT_EQ(smith_normal_form({{2, 0}, {0, 3}}), (std::vector<long long>{1, 6}));
  EXPECT_EQ(smith_normal_form({{2, 0}, {0, 4}}), (std::vector<long long>{2, 4}));
  EXPECT_EQ(smith_normal_form({{4, 0}, {0, 6}}), (std::vector<long long>{2, 12}));
  EXPECT_TRUE(smith_normal_form({}).empty());
}

TEST(Smith, ShapesAndSigns) {
  EXPECT_EQ(smith_normal_form({{0, 0}, {0, 0}}), (std::vector<long long>{0, 0}));
  EXPECT_EQ(smith_normal_form({{2, 4}}), (std::vector<long long>{2}));
  EXPECT_EQ(smith_normal_form({{3}, {6}}), (std::vector<long long>{3}));
  EXPECT_EQ(smith_normal_form({{-2, 0}, {0, -3}}), (std::vector<long long>{1, 6}));
  EXPECT_EQ(smith_normal_form({{5, -3}, {-3, 5}}), (std::vector<long long>{1, 16}));
}

TEST(Smith, DivisibilityChainHolds) {
  const auto d = smith_normal_form({{6, 4, 2}, {4, 8, 2}, {2, 2, 10}});
  long long prod = 1;
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] != 0 && d[i + 1] != 0) {
      EXPECT_EQ(d[i + 1] % d[i], 0);
    }
  for (long long v : d) prod *= std::max(v, 1LL);
  // determinant magnitude is preserved by unimodular operations
  EXPECT_EQ(prod, 296);
}

TEST(AbelianGroup, ElementArithmetic) {
  const AbelianGroup g = Z({2, 4});
  EXPECT_EQ(g.order, 8);
  EXPECT_EQ(g.element({1, 3}), g.add(g.element({1, 1}), g.element({0, 2})));
  EXPECT_EQ(g.neg(g.element({1, 3})), g.element({1, 1}));
  EXPECT_EQ(g.scalar_mul(3, g.element({1, 2})), g.element({1, 2}));
  EXPECT_EQ(g.element_order(g.element({1, 2})), 2);
  EXPECT_EQ(g.element_order(g.element({0, 1})), 4);
  EXPECT_EQ(g.element_order(0), 1);
  EXPECT_THROW(g.add(0, 99), MismatchError);
  EXPECT_THROW(Z({1}), Error);
}

TEST(AbelianGroup, TrivialGroup) {
  const AbelianGroup g = Z({});
  EXPECT_EQ(g.order, 1);
  EXPECT_EQ(g.add(0, 0), 0);
  EXPECT_TRUE(invariant_factors(g).empty());
  EXPECT_TRUE(is_cyclic(g));
}

TEST(InvariantFactors, CanonicalForms) {
  EXPECT_EQ(invariant_factors(Z({2, 4})), (std::vector<long long>{2, 4}));
  EXPECT_EQ(invariant_factors(Z({3, 4})), (std::vector<long long>{12}));
  EXPECT_EQ(invariant_factors(Z({4, 2})), invariant_factors(Z({2, 4})));
  EXPECT_EQ(invariant_factors(Z({6, 4})), (std::vector<long long>{2, 12}));
}

TEST(InvariantFactors, MatchesOrderStatisticsOracle) {
  for (const auto& orders : std::vector<std::vector<long long>>{
           {8}, {2, 4}, {2, 2, 2}, {3, 9}, {6, 4}, {2, 3, 5}, {12, 2}}) {
    const AbelianGroup g = Z(orders);
    EXPECT_EQ(invariant_factors(g), oracle::stats_invariant_factors(g)) << "orders " << orders[0];
  }
}

TEST(Subgroups, GeneratedClosure) {
  const AbelianGroup z8 = Z({8});
  EXPECT_EQ(subgroup_generated(z8, {4}).elements, (std::vector<Elem>{0, 4}));
  EXPECT_EQ(subgroup_generated(z8, {}).elements, (std::vector<Elem>{0}));
  const AbelianGroup v4 = Z({2, 2});
  EXPECT_EQ(subgroup_generated(v4, {v4.element({1, 0}), v4.element({0, 1})}).size(), 4);
  EXPECT_THROW(subgroup_generated(z8, {8}), MismatchError);
}

TEST(Subgroups, LagrangeOnAllSubgroups) {
  for (const auto& orders :
       std::vector<std::vector<long long>>{{12}, {2, 4}, {2, 2, 2}, {3, 3}}) {
    const AbelianGroup g = Z(orders);
    for (const Subgroup& h : all_subgroups(g)) EXPECT_EQ(g.order % h.size(), 0);
  }
}

TEST(Subgroups, CountsAgainstBruteForce) {
  EXPECT_EQ(all_subgroups(Z({4})).size(), 3u);
  EXPECT_EQ(all_subgroups(Z({2, 2})).size(), 5u);
  EXPECT_EQ(all_subgroups(Z({})).size(), 1u);
  for (const auto& orders : std::vector<std::vector<long long>>{{4}, {6}, {2, 2}, {8}, {2, 4}}) {
    const AbelianGroup g = Z(orders);
    EXPECT_EQ(static_cast<long long>(all_subgroups(g).size()), oracle::brute_subgroup_count(g));
  }
}

TEST(Subgroups, EnumerationIsDeterministicAndUnique) {
  const AbelianGroup g = Z({2, 4});
  const auto a = all_subgroups(g);
  const auto b = all_subgroups(g);
  ASSERT_EQ(a.size(), b.size());
  std::set<std::vector<Elem>> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].elements, b[i].elements);
    EXPECT_TRUE(seen.insert(a[i].elements).second);
  }
  EXPECT_THROW(all_subgroups(Z({128}), 64), CapExceeded);
}

TEST(Quotients, SmallCyclicExamples) {
  const AbelianGroup z8 = Z({8});
  const QuotientGroup q1 = quotient(z8, subgroup_generated(z8, {4}));
  EXPECT_EQ(q1.structure, (std::vector<long long>{4}));

  const AbelianGroup z12 = Z({12});
  const QuotientGroup q2 = quotient(z12, subgroup_generated(z12, {3}));
  EXPECT_EQ(q2.structure, (std::vector<long long>{3}));

  EXPECT_FALSE(is_isomorphic(q1, q2));
  EXPECT_TRUE(quotient(z8, full_subgroup(z8)).structure.empty());
}

TEST(Quotients, StructureProductEqualsIndex) {
  for (const auto& orders : std::vector<std::vector<long long>>{{2, 4}, {2, 2, 2}, {12}, {3, 9}}) {
    const AbelianGroup g = Z(orders);
    for (const Subgroup& h : all_subgroups(g)) {
      const QuotientGroup q = quotient(g, h);
      long long prod = 1;
      for (long long d : q.structure) prod *= d;
      EXPECT_EQ(prod, g.order / h.size());
      EXPECT_EQ(q.order(), g.order / h.size());
    }
  }
}

// dual-route check: SNF structure of the quotient vs direct decomposition of
// the coset group
TEST(Quotients, SnfAgreesWithCosetDecomposition) {
  for (const auto& orders : std::vector<std::vector<long long>>{{2, 4}, {8}, {2, 2, 2}, {6, 2}}) {
    const AbelianGroup g = Z(orders);
    for (const Subgroup& h : all_subgroups(g)) {
      const QuotientGroup q = quotient(g, h);
      const auto dec = decompose_concrete(q.order(), [&](Elem a, Elem b) { return q.add(a, b); });
      EXPECT_EQ(q.structure, dec.factors);
    }
  }
}

TEST(Index, Basics) {
  const AbelianGroup z8 = Z({8});
  EXPECT_EQ(index(z8, subgroup_generated(z8, {4})), 4);
  EXPECT_EQ(index(z8, full_subgroup(z8)), 1);
  EXPECT_EQ(index(z8, trivial_subgroup(z8)), 8);
  EXPECT_THROW(index(z8, trivial_subgroup(Z({4}))), MismatchError);
}

TEST(IsCyclic, Basics) {
  EXPECT_TRUE(is_cyclic(Z({6})));
  EXPECT_FALSE(is_cyclic(Z({2, 2})));
  EXPECT_TRUE(is_cyclic(Z({3, 4})));  // Z_3 x Z_4 = Z_12
}

TEST(IsIsomorphic, EquivalenceRelation) {
  const std::vector<AbelianGroup> groups = {Z({4}), Z({2, 2}), Z({12}), Z({3, 4}), Z({2, 6})};
  for (const auto& a : groups) EXPECT_TRUE(is_isomorphic(a, a));
  for (const auto& a : groups)
    for (const auto& b : groups) EXPECT_EQ(is_isomorphic(a, b), is_isomorphic(b, a));
  for (const auto& a : groups)
    for (const auto& b : groups)
      for (const auto& c : groups)
        if (is_isomorphic(a, b) && is_isomorphic(b, c)) {
          EXPECT_TRUE(is_isomorphic(a, c));
        }
  EXPECT_FALSE(is_isomorphic(Z({4}), Z({2, 2})));
  EXPECT_TRUE(is_isomorphic(Z({12}), Z({3, 4})));
}

TEST(Decompose, RebuildsKnownGroups) {
  for (const auto& orders : std::vector<std::vector<long long>>{{2, 4}, {2, 2, 2}, {8}, {3, 3}}) {
    const AbelianGroup g = Z(orders);
    const auto dec = decompose_concrete(g.order, [&](Elem a, Elem b) { return g.add(a, b); });
    EXPECT_EQ(dec.factors, invariant_factors(g));
    // to_abstract must be an additive bijection
    std::set<Elem> image(dec.to_abstract.begin(), dec.to_abstract.end());
    EXPECT_EQ(static_cast<long long>(image.size()), g.order);
    for (Elem a = 0; a < g.order; ++a)
      for (Elem b = 0; b < g.order; ++b)
        EXPECT_EQ(dec.to_abstract[static_cast<std::size_t>(g.add(a, b))],
                  dec.group.add(dec.to_abstract[static_cast<std::size_t>(a)],
                                dec.to_abstract[static_cast<std::size_t>(b)]));
  }
}

TEST(SubgroupInvariants, MatchOracle) {
  const AbelianGroup g = Z({2, 4});
  for (const Subgroup& h : all_subgroups(g))
    EXPECT_EQ(invariant_factors(h), oracle::stats_invariant_factors(h));
}

TEST(Isomorphisms, CountsMatchBruteForce) {
  EXPECT_EQ(isomorphisms(Z({2}), Z({2})).size(), 1u);
  EXPECT_TRUE(isomorphisms(Z({4}), Z({2, 2})).empty());

  const AbelianGroup v4 = Z({2, 2});
  EXPECT_EQ(static_cast<long long>(isomorphisms(v4, v4).size()),
            oracle::brute_additive_bijection_count(v4, v4));  // |GL(2,2)| = 6
  EXPECT_EQ(isomorphisms(v4, v4).size(), 6u);

  const AbelianGroup g9 = Z({3, 3});
  EXPECT_EQ(static_cast<long long>(isomorphisms(g9, g9).size()),
            oracle::brute_additive_bijection_count(g9, g9));  // |GL(2,3)| = 48
  EXPECT_EQ(isomorphisms(g9, g9).size(), 48u);
}

TEST(Isomorphisms, MapsAreAdditiveBijections) {
  const AbelianGroup g = Z({2, 4});
  const AbelianGroup h = Z({4, 2});
  const auto isos = isomorphisms(g, h);
  ASSERT_FALSE(isos.empty());
  for (const GroupIso& iso : isos) {
    std::set<Elem> image(iso.map.begin(), iso.map.end());
    EXPECT_EQ(static_cast<long long>(image.size()), g.order);
    for (Elem a = 0; a < g.order; ++a)
      for (Elem b = 0; b < g.order; ++b)
        EXPECT_EQ(iso.map[static_cast<std::size_t>(g.add(a, b))],
                  h.add(iso.map[static_cast<std::size_t>(a)], iso.map[static_cast<std::size_t>(b)]));
  }
}

TEST(Isomorphisms, DeterministicLexicographicOrder) {
  const AbelianGroup v4 = Z({2, 2});
  const auto a = isomorphisms(v4, v4);
  const auto b = isomorphisms(v4, v4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    EXPECT_EQ(a[i].generator_images, b[i].generator_images);
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    EXPECT_LT(a[i].generator_images, a[i + 1].generator_images);
}

TEST(Isomorphisms, BudgetThrows) {
  const AbelianGroup g9 = Z({3, 3});
  EXPECT_THROW(
      for_each_isomorphism(g9, g9, [](const GroupIso&) { return true; }, 5),
      SearchBudgetExceeded);
}

TEST(CosetGroupFactors, SubgroupQuotients) {
  const AbelianGroup g = Z({2, 4});
  const Subgroup whole = full_subgroup(g);
  const Subgroup two = subgroup_generated(g, {g.element({0, 2})});
  const auto add = [&](Elem a, Elem b) { return g.add(a, b); };
  EXPECT_EQ(coset_group_factors(whole.elements, two.elements, add),
            (std::vector<long long>{2, 2}));
  EXPECT_EQ(coset_group_factors(whole.elements, whole.elements, add), (std::vector<long long>{}));
  EXPECT_EQ(coset_group_factors(two.elements, two.elements, add), (std::vector<long long>{}));
}
