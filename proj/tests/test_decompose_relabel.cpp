#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "ringlab/abelian.hpp"

using namespace ringlab;

// decompose_concrete only sees an addition table, so scrambling the element
// labels of a known group must never change the recovered invariant factors.
// Hand-rolled LCG keeps the shuffles reproducible.

namespace {

struct Lcg {
  std::uint64_t state;
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
};

std::vector<Elem> shuffled_labels(long long n, Lcg& rng) {
  std::vector<Elem> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size() - 1; i > 1; --i)
    std::swap(perm[i], perm[1 + rng.next() % i]);  // position 0 stays the identity
  return perm;
}

}  // namespace

TEST(DecomposeRelabel, InvariantFactorsSurviveRelabeling) {
  Lcg rng{20260810};
  for (const auto& orders : std::vector<std::vector<long long>>{
           {2, 4}, {2, 2, 2}, {8}, {3, 3}, {2, 6}, {4, 4}, {2, 2, 3}}) {
    const AbelianGroup g(orders);
    const auto expected = invariant_factors(g);
    for (int trial = 0; trial < 5; ++trial) {
      const std::vector<Elem> sigma = shuffled_labels(g.order, rng);
      std::vector<Elem> inverse(sigma.size());
      for (std::size_t i = 0; i < sigma.size(); ++i)
        inverse[static_cast<std::size_t>(sigma[i])] = static_cast<Elem>(i);

      const auto dec = decompose_concrete(g.order, [&](Elem a, Elem b) {
        return sigma[static_cast<std::size_t>(
            g.add(inverse[static_cast<std::size_t>(a)], inverse[static_cast<std::size_t>(b)]))];
      });
      EXPECT_EQ(dec.factors, expected);

      // and the recovered coordinate map is an isomorphism of the relabeled table
      for (Elem a = 0; a < g.order; ++a)
        for (Elem b = 0; b < g.order; ++b) {
          const Elem sum = sigma[static_cast<std::size_t>(
              g.add(inverse[static_cast<std::size_t>(a)], inverse[static_cast<std::size_t>(b)]))];
          EXPECT_EQ(dec.to_abstract[static_cast<std::size_t>(sum)],
                    dec.group.add(dec.to_abstract[static_cast<std::size_t>(a)],
                                  dec.to_abstract[static_cast<std::size_t>(b)]));
        }
    }
  }
}
