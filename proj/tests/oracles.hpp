#pragma once

// Test-only oracles, independent of the library's computation paths.
//
// - invariant factors from element-order statistics (never touches SNF or
//   the decomposition algorithm)
// - subgroup counting by subset enumeration
// - a literal 2x2-matrix model for the matrix ring families
// - additive/ring isomorphism counting by permutation filtering

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "ringlab/abelian.hpp"
#include "ringlab/ring.hpp"

namespace oracle {

using ringlab::Elem;

// ---------------------------------------------------------------------------
// Invariant factors via order statistics: for each prime p dividing n, the
// counts c_j = #{x : p^j x = 0} determine the p-partition through its
// conjugate, and the per-prime partitions merge into invariant factors.
inline std::vector<long long> stats_invariant_factors(
    long long n, const std::function<Elem(Elem, Elem)>& add) {
  if (n == 1) return {};

  const auto smul = [&](long long c, Elem x) {
    Elem r = 0;
    for (long long i = 0; i < c; ++i) r = add(r, x);
    return r;
  };

  std::vector<long long> primes;
  {
    long long m = n;
    for (long long p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
  }

  std::map<long long, std::vector<long long>> partitions;  // prime -> descending partition
  for (long long p : primes) {
    long long ppart = 1, m = n;
    while (m % p == 0) {
      ppart *= p;
      m /= p;
    }
    // m_j with p^{m_j} = #{x : p^j x = 0}
    std::vector<long long> mj{0};
    long long pj = 1;
    while (pj < ppart) {
      pj *= p;
      long long count = 0;
      for (Elem x = 0; x < n; ++x)
        if (smul(pj, x) == 0) ++count;
      long long e = 0;
      while (count > 1) {
        count /= p;
        ++e;
      }
      mj.push_back(e);
      if (pj >= ppart) break;
    }
    std::vector<long long> conj;  // conj[j-1] = #{i : lambda_i >= j}
    for (std::size_t j = 1; j < mj.size(); ++j) conj.push_back(mj[j] - mj[j - 1]);
    std::vector<long long> lambda;
    for (long long i = 1;; ++i) {
      long long cnt = 0;
      for (long long c : conj)
        if (c >= i) ++cnt;
      if (cnt == 0) break;
      lambda.push_back(cnt);
    }
    // lambda currently counts conj >= i which is the conjugate of conj, i.e.
    // the original partition, descending
    partitions[p] = lambda;
  }

  std::size_t len = 0;
  for (const auto& [p, lam] : partitions) len = std::max(len, lam.size());
  std::vector<long long> descending(len, 1);
  for (const auto& [p, lam] : partitions)
    for (std::size_t i = 0; i < lam.size(); ++i) {
      long long pe = 1;
      for (long long t = 0; t < lam[i]; ++t) pe *= p;
      descending[i] *= pe;
    }
  return {descending.rbegin(), descending.rend()};
}

inline std::vector<long long> stats_invariant_factors(const ringlab::AbelianGroup& g) {
  return stats_invariant_factors(g.order, [&](Elem a, Elem b) { return g.add(a, b); });
}

inline std::vector<long long> stats_invariant_factors(const ringlab::Subgroup& h) {
  const auto& els = h.elements;
  const auto local = [&](Elem x) {
    return static_cast<Elem>(std::lower_bound(els.begin(), els.end(), x) - els.begin());
  };
  return stats_invariant_factors(h.size(), [&, local](Elem a, Elem b) {
    return local(h.parent.add(els[static_cast<std::size_t>(a)], els[static_cast<std::size_t>(b)]));
  });
}

// ---------------------------------------------------------------------------
// Subgroup counting by brute force over subsets (keeps 0, order <= ~16).
inline long long brute_subgroup_count(const ringlab::AbelianGroup& g) {
  const long long n = g.order;
  long long count = 0;
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    std::vector<Elem> set{0};
    for (long long i = 1; i < n; ++i)
      if (mask & (1UL << (i - 1))) set.push_back(i);
    bool closed = true;
    for (Elem a : set) {
      for (Elem b : set)
        if (!std::binary_search(set.begin(), set.end(), g.add(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Literal 2x2 matrices over Z_m.
struct Mat2 {
  long long a, b, c, d;  // [a b; c d]
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 mat2_mul(long long m, const Mat2& x, const Mat2& y) {
  return Mat2{(x.a * y.a + x.b * y.c) % m, (x.a * y.b + x.b * y.d) % m,
              (x.c * y.a + x.d * y.c) % m, (x.c * y.b + x.d * y.d) % m};
}

inline Mat2 mat2_sub(long long m, const Mat2& x, const Mat2& y) {
  const auto f = [&](long long u, long long v) { return ((u - v) % m + m) % m; };
  return Mat2{f(x.a, y.a), f(x.b, y.b), f(x.c, y.c), f(x.d, y.d)};
}

// ---------------------------------------------------------------------------
// Additive bijections G -> H by filtering permutations that fix 0.
inline long long brute_additive_bijection_count(const ringlab::AbelianGroup& g,
                                                const ringlab::AbelianGroup& h) {
  if (g.order != h.order) return 0;
  const long long n = g.order;
  std::vector<Elem> perm(static_cast<std::size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 1);
  long long count = 0;
  do {
    std::vector<Elem> map(static_cast<std::size_t>(n));
    map[0] = 0;
    for (long long i = 1; i < n; ++i) map[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i - 1)];
    bool additive = true;
    for (Elem a = 0; a < n && additive; ++a)
      for (Elem b = a; b < n; ++b)
        if (map[static_cast<std::size_t>(g.add(a, b))] !=
            h.add(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) {
          additive = false;
          break;
        }
    if (additive) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// ---------------------------------------------------------------------------
// Ring isomorphism by brute force: some additive bijection that also
// preserves products (tiny rings only).
inline bool brute_ring_isomorphic(const ringlab::FiniteRing& A, const ringlab::FiniteRing& B) {
  if (A.order() != B.order()) return false;
  const long long n = A.order();
  std::vector<Elem> perm(static_cast<std::size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<Elem> map(static_cast<std::size_t>(n));
    map[0] = 0;
    for (long long i = 1; i < n; ++i) map[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(i - 1)];
    bool good = true;
    for (Elem a = 0; a < n && good; ++a)
      for (Elem b = 0; b < n; ++b)
        if (map[static_cast<std::size_t>(A.add(a, b))] !=
                B.add(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) ||
            map[static_cast<std::size_t>(A.mul(a, b))] !=
                B.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) {
          good = false;
          break;
        }
    if (good) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
