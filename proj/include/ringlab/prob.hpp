#pragma once

// Relative commuting probability Pr(S,R), computed by three independent
// routes that serve as mutual oracles:
//
//   pr_pair_count       - the defining count over S x R
//   pr_centralizer_sum  - (1/|S||R|) sum over s of |C_R(s)|, cross-checked
//                         against the transposed sum over r of |C_S(r)|
//   pr_coset_form       - (1/|S:Z(S,R)|) sum over cosets of 1/|[s,R]|
//
// Exact rational equality of the three on every corpus pair is an
// acceptance gate, not a rounding aspiration.

#include <vector>

#include "ringlab/abelian.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/rational.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Fraction of commuting pairs in A x B (both subsets of r).
inline Probability commuting_fraction(const FiniteRing& r, const std::vector<Elem>& a,
                                      const std::vector<Elem>& b) {
  if (a.empty() || b.empty()) throw Error("commuting_fraction: empty set");
  long long hits = 0;
  for (Elem x : a)
    for (Elem y : b)
      if (r.commute(x, y)) ++hits;
  return Rational(hits, static_cast<long long>(a.size()) * static_cast<long long>(b.size()));
}

/// Pr(S,R) by its definition: commuting pairs over |S x R|.
inline Probability pr_pair_count(const Subring& s) {
  const FiniteRing& r = s.ring();
  long long hits = 0;
  for (Elem x : s.elements)
    for (Elem y = 0; y < r.order(); ++y)
      if (r.commute(x, y)) ++hits;
  return Rational(hits, s.size() * r.order());
}

/// Pr(S,R) via centralizer sums. Both orders of summation are computed and
/// must agree; a mismatch is a bug signal, not a data condition.
inline Probability pr_centralizer_sum(const Subring& s) {
  const FiniteRing& r = s.ring();
  long long over_s = 0;
  for (Elem x : s.elements)
    for (Elem y = 0; y < r.order(); ++y)
      if (r.commute(x, y)) ++over_s;

  long long over_r = 0;
  for (Elem y = 0; y < r.order(); ++y)
    for (Elem x : s.elements)
      if (r.commute(y, x)) ++over_r;

  if (over_s != over_r)
    throw InternalMismatch("centralizer sums disagree: " + std::to_string(over_s) + " vs " +
                           std::to_string(over_r));
  return Rational(over_s, s.size() * r.order());
}

/// Pr(S,R) via cosets of Z(S,R) in S: (1/|S:Z|) * sum of 1/|[s,R]| over one
/// representative per coset. [s,R] depends only on the coset because
/// Z(S,R) is central in R.
inline Probability pr_coset_form(const Subring& s) {
  const FiniteRing& r = s.ring();
  const Subring z = relative_center(s);

  std::vector<Elem> reps;
  std::vector<char> assigned(static_cast<std::size_t>(r.order()), 0);
  for (Elem x : s.elements) {
    if (assigned[static_cast<std::size_t>(x)]) continue;
    reps.push_back(x);
    for (Elem c : z.elements) assigned[static_cast<std::size_t>(r.add(x, c))] = 1;
  }

  Rational sum = Rational::zero();
  for (Elem x : reps) sum = sum + Rational(1, element_commutator_subgroup(r, x).size());
  return sum * Rational(z.size(), s.size());
}

/// Pr(R) = Pr(R,R).
inline Probability pr(const FiniteRing& r) {
  const Subring whole = full_subring(r);
  return pr_centralizer_sum(whole);
}

/// Pr(S): the subring viewed as a ring in its own right.
inline Probability pr(const Subring& s) {
  return commuting_fraction(s.ring(), s.elements, s.elements);
}

}  // namespace ringlab
