#pragma once

// One checkable operation per theorem, lemma and corollary about bounds on
// Pr(S,R). Checks evaluate exact rational inequalities and biconditionals
// on concrete (subring, ring) inputs and return structured verdicts; they
// never prove anything. A failed clause on valid input would contradict the
// underlying mathematics and is treated as build-breaking by the sweeps.
//
// Structural precondition violations (wrong parent ring, non-ideal, value
// mismatch in the extremal classifier) throw. Mathematical side conditions
// (e.g. "S not inside Z(R)") produce hypotheses_hold = false so corpus
// sweeps can skip-and-record.

#include <optional>
#include <string>
#include <vector>

#include "ringlab/abelian.hpp"
#include "ringlab/prob.hpp"
#include "ringlab/rational.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct CheckClause {
  std::string label;
  bool holds{false};
  std::string detail;
};

struct TheoremCheck {
  std::string theorem_id;
  bool hypotheses_hold{true};
  std::string skip_reason;  // set when hypotheses_hold is false
  std::optional<Rational> lhs, rhs;
  std::optional<bool> inequality_holds;
  std::optional<bool> equality_attained;
  std::optional<bool> equality_condition_predicted;
  std::vector<CheckClause> clauses;
  std::vector<std::string> notes;
  std::optional<std::string> witness;  // describes the first violated clause

  void add(const std::string& label, bool holds, const std::string& detail = "") {
    clauses.push_back({label, holds, detail});
    if (!holds && !witness) witness = label + (detail.empty() ? "" : ": " + detail);
  }

  /// A check with failed hypotheses is a recorded skip, not a failure.
  bool passed() const {
    if (!hypotheses_hold) return true;
    for (const auto& c : clauses)
      if (!c.holds) return false;
    return true;
  }
};

namespace detail {

inline std::string vs(const Rational& a, const Rational& b) {
  return a.str() + " vs " + b.str();
}

inline bool sum_covers_ring(const FiniteRing& r, const std::vector<Elem>& s,
                            const std::vector<Elem>& c) {
  return static_cast<long long>(sum_set(r, s, c).size()) == r.order();
}

inline std::string factors_str(const std::vector<long long>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

}  // namespace detail

// --------------------------------------------------------------------------
// |S : C_S(r)| <= |R : C_R(r)|, equality iff S + C_R(r) = R.
inline TheoremCheck check_lemma_index(const Subring& s, Elem r) {
  const FiniteRing& R = s.ring();
  R.additive.check_element(r);
  TheoremCheck c;
  c.theorem_id = "lemma1";

  const Subring cs = centralizer(s, r);
  const Subring cr = centralizer(full_subring(R), r);
  const long long left = s.size() / cs.size();
  const long long right = R.order() / cr.size();
  c.lhs = Rational(left);
  c.rhs = Rational(right);
  c.inequality_holds = left <= right;
  c.add("index_le", left <= right,
        "|S:C_S(r)| = " + std::to_string(left) + ", |R:C_R(r)| = " + std::to_string(right));

  const bool eq = left == right;
  const bool cond = detail::sum_covers_ring(R, s.elements, cr.elements);
  c.equality_attained = eq;
  c.equality_condition_predicted = cond;
  c.add("equality_iff_sum_full", eq == cond,
        std::string("equality ") + (eq ? "holds" : "fails") + ", S + C_R(r) " +
            (cond ? "=" : "!=") + " R at r = " + element_str(R, r));
  return c;
}

// --------------------------------------------------------------------------
// Pr(R) <= Pr(S,R) <= Pr(S).
inline TheoremCheck check_sandwich(const Subring& s) {
  const FiniteRing& R = s.ring();
  TheoremCheck c;
  c.theorem_id = "theorem01";

  const Rational pr_r = pr(R);
  const Rational pr_sr = pr_centralizer_sum(s);
  const Rational pr_s = pr(s);
  c.lhs = pr_r;
  c.rhs = pr_s;
  c.add("pr_R_le_pr_SR", pr_r <= pr_sr, detail::vs(pr_r, pr_sr));
  c.add("pr_SR_le_pr_S", pr_sr <= pr_s, detail::vs(pr_sr, pr_s));
  c.inequality_holds = pr_r <= pr_sr && pr_sr <= pr_s;
  c.equality_attained = pr_r == pr_s;
  return c;
}

// --------------------------------------------------------------------------
// Pr(S,R) = Pr(R) iff S + C_R(r) = R for all r in R, and
// Pr(S,R) = Pr(S) iff S + C_R(r) = R for all r in S. Both directions of
// both biconditionals, plus the remark that the first equality forces the
// second.
inline TheoremCheck check_equality_conditions(const Subring& s) {
  const FiniteRing& R = s.ring();
  TheoremCheck c;
  c.theorem_id = "cor1";

  const Rational pr_r = pr(R);
  const Rational pr_sr = pr_centralizer_sum(s);
  const Rational pr_s = pr(s);

  const auto cond_over = [&](const std::vector<Elem>& range) {
    for (Elem x : range) {
      const Subring cr = centralizer(full_subring(R), x);
      if (!detail::sum_covers_ring(R, s.elements, cr.elements)) return false;
    }
    return true;
  };
  std::vector<Elem> all(static_cast<std::size_t>(R.order()));
  std::iota(all.begin(), all.end(), 0);

  const bool eq_r = pr_sr == pr_r;
  const bool eq_s = pr_sr == pr_s;
  const bool cond_r = cond_over(all);
  const bool cond_s = cond_over(s.elements);

  c.add("pr_eq_prR_iff_sum_all_R", eq_r == cond_r,
        std::string(eq_r ? "equal" : "unequal") + " while condition is " +
            (cond_r ? "true" : "false"));
  c.add("pr_eq_prS_iff_sum_all_S", eq_s == cond_s,
        std::string(eq_s ? "equal" : "unequal") + " while condition is " +
            (cond_s ? "true" : "false"));
  c.add("eqR_implies_eqS", !eq_r || eq_s);
  c.equality_attained = eq_r;
  c.equality_condition_predicted = cond_r;
  return c;
}

// --------------------------------------------------------------------------
// For S1 inside S2: Pr(S2,R) <= Pr(S1,R) <= Pr(S1,S2), refining the
// sandwich via Pr(R) <= Pr(S2,R) and Pr(S1,S2) <= Pr(S1).
inline TheoremCheck check_chain(const Subring& s1, const Subring& s2) {
  require_same_ring(s1, s2, "check_chain");
  const FiniteRing& R = s1.ring();
  if (!std::includes(s2.elements.begin(), s2.elements.end(), s1.elements.begin(),
                     s1.elements.end()))
    throw Error("check_chain: S1 must be contained in S2");

  TheoremCheck c;
  c.theorem_id = "refine";
  const Rational a = pr_centralizer_sum(s2);                                // Pr(S2,R)
  const Rational b = pr_centralizer_sum(s1);                                // Pr(S1,R)
  const Rational d = commuting_fraction(R, s1.elements, s2.elements);       // Pr(S1,S2)
  c.lhs = a;
  c.rhs = d;
  c.add("pr_S2R_le_pr_S1R", a <= b, detail::vs(a, b));
  c.add("pr_S1R_le_pr_S1S2", b <= d, detail::vs(b, d));
  c.add("pr_R_le_pr_S2R", pr(R) <= a);
  c.add("pr_S1S2_le_pr_S1", d <= pr(s1));
  c.inequality_holds = a <= b && b <= d;
  return c;
}

// --------------------------------------------------------------------------
// For p the smallest prime dividing |R|:
//   |Z(S,R)|/|S| + p(|S|-|Z(S,R)|)/(|S||R|) <= Pr(S,R)
//                                 <= ((p-1)|Z(S,R)| + |S|) / (p|S|).
inline TheoremCheck check_prime_bounds(const Subring& s) {
  const FiniteRing& R = s.ring();
  if (R.order() < 2) throw Error("check_prime_bounds: |R| must be >= 2");
  TheoremCheck c;
  c.theorem_id = "theorem001";

  const long long p = smallest_prime_divisor(R.order());
  const long long z = relative_center(s).size();
  const long long ns = s.size(), nr = R.order();
  const Rational lower = Rational(z, ns) + Rational(p * (ns - z), ns * nr);
  const Rational upper = Rational((p - 1) * z + ns, p * ns);
  const Rational val = pr_pair_count(s);

  c.lhs = lower;
  c.rhs = upper;
  c.add("lower_le_pr", lower <= val, detail::vs(lower, val));
  c.add("pr_le_upper", val <= upper, detail::vs(val, upper));
  c.inequality_holds = lower <= val && val <= upper;
  c.equality_attained = val == lower && val == upper;
  c.notes.push_back("p = " + std::to_string(p) + ", |Z(S,R)| = " + std::to_string(z));
  return c;
}

// --------------------------------------------------------------------------
// The S = R specialization, plus the comparison against the classical
// (p^2+p-1)/p^3 upper bound for non-commutative R.
inline TheoremCheck check_pr_prime_bounds(const FiniteRing& R) {
  if (R.order() < 2) throw Error("check_pr_prime_bounds: |R| must be >= 2");
  TheoremCheck c;
  c.theorem_id = "corprbd";

  const long long p = smallest_prime_divisor(R.order());
  const long long z = center(R).size();
  const long long nr = R.order();
  const Rational lower = Rational(z, nr) + Rational(p * (nr - z), nr * nr);
  const Rational upper = Rational((p - 1) * z + nr, p * nr);
  const Rational val = pr(R);

  c.lhs = lower;
  c.rhs = upper;
  c.add("lower_le_pr", lower <= val, detail::vs(lower, val));
  c.add("pr_le_upper", val <= upper, detail::vs(val, upper));
  c.inequality_holds = lower <= val && val <= upper;
  if (!R.is_commutative()) {
    const Rational classical(p * p + p - 1, p * p * p);
    c.add("upper_improves_classical", upper <= classical, detail::vs(upper, classical));
  }
  c.notes.push_back("p = " + std::to_string(p) + ", |Z(R)| = " + std::to_string(z));
  return c;
}

// --------------------------------------------------------------------------
// For S not inside Z(R): Pr(S,R) <= (2p-1)/p^2 when S is commutative and
// Pr(S,R) <= (p^2+p-1)/p^3 otherwise, with the p = 2 corollary values 3/4
// and 5/8 reported alongside.
inline TheoremCheck check_noncentral_thresholds(const Subring& s) {
  const FiniteRing& R = s.ring();
  if (R.order() < 2) throw Error("check_noncentral_thresholds: |R| must be >= 2");
  TheoremCheck c;
  c.theorem_id = "theorem02";

  const Subring z = center(R);
  const bool inside = std::includes(z.elements.begin(), z.elements.end(), s.elements.begin(),
                                    s.elements.end());
  if (inside) {
    c.hypotheses_hold = false;
    c.skip_reason = "S is contained in Z(R)";
    return c;
  }

  const long long p = smallest_prime_divisor(R.order());
  const Rational val = pr_pair_count(s);
  const bool s_comm = commuting_fraction(R, s.elements, s.elements) == Rational::one();
  c.lhs = val;
  if (s_comm) {
    const Rational bound(2 * p - 1, p * p);
    c.rhs = bound;
    c.add("pr_le_2p_minus_1_over_p2", val <= bound, detail::vs(val, bound));
    c.add("corollary_p2_value_3_4", val <= Rational(3, 4));
    c.equality_attained = val == bound;
  } else {
    const Rational bound(p * p + p - 1, p * p * p);
    c.rhs = bound;
    c.add("pr_le_p2_plus_p_minus_1_over_p3", val <= bound, detail::vs(val, bound));
    c.add("corollary_p2_value_5_8", val <= Rational(5, 8));
    c.equality_attained = val == bound;
  }
  c.inequality_holds = c.clauses[0].holds;
  c.notes.push_back(std::string("S is ") + (s_comm ? "commutative" : "non-commutative") +
                    ", p = " + std::to_string(p));
  return c;
}

// --------------------------------------------------------------------------
// Structure at the extremal values: a pair attaining (2p-1)/p^2 with S
// commutative has S/Z(S,R) isomorphic to Z_p; one attaining (p^2+p-1)/p^3
// with S non-commutative has S/Z(S,R) isomorphic to Z_p x Z_p. Requires the
// value to match exactly; anything else is a precondition error.
inline TheoremCheck classify_extremal(const Subring& s) {
  const FiniteRing& R = s.ring();
  if (R.order() < 2) throw Error("classify_extremal: |R| must be >= 2");

  const long long p = smallest_prime_divisor(R.order());
  const Rational val = pr_pair_count(s);
  const bool s_comm = commuting_fraction(R, s.elements, s.elements) == Rational::one();
  const Rational target = s_comm ? Rational(2 * p - 1, p * p) : Rational(p * p + p - 1, p * p * p);
  if (val != target)
    throw Error("classify_extremal: Pr(S,R) = " + val.str() + " does not match the extremal value " +
                target.str() + " for " + (s_comm ? "commutative" : "non-commutative") + " S");

  TheoremCheck c;
  c.theorem_id = s_comm ? "dc001" : "dc002";
  c.lhs = val;
  c.rhs = target;
  c.add("p_divides_order", R.order() % p == 0);

  const Subring z = relative_center(s);
  const auto factors =
      coset_group_factors(s.elements, z.elements, [&](Elem a, Elem b) { return R.add(a, b); });
  const std::vector<long long> expected = s_comm ? std::vector<long long>{p}
                                                 : std::vector<long long>{p, p};
  c.add("quotient_structure", factors == expected,
        "S/Z(S,R) has invariant factors " + detail::factors_str(factors) + ", expected " +
            detail::factors_str(expected));
  if (p == 2)
    c.notes.push_back(std::string("p = 2 corollary case: Pr(S,R) = ") + val.str() +
                      ", S/Z(S,R) expected " + detail::factors_str(expected));
  return c;
}

// --------------------------------------------------------------------------
// For N an ideal of R contained in the subring H:
//   lemma: (C_H(x) + N)/N is contained in C_{H/N}(x + N) for all x, with
//          equality whenever N meets [H,R] trivially;
//   theorem: Pr(H,R) <= Pr(H/N, R/N) * Pr(N), equality under the same
//            condition (as an implication only).
inline TheoremCheck check_quotient_factorization(const Subring& h, const Subring& n) {
  require_same_ring(h, n, "check_quotient_factorization");
  const FiniteRing& R = h.ring();
  if (!is_ideal(R, n.elements))
    throw NotAnIdeal("check_quotient_factorization: N is not an ideal of " + R.name);
  if (!std::includes(h.elements.begin(), h.elements.end(), n.elements.begin(), n.elements.end()))
    throw Error("check_quotient_factorization: N must be contained in H");

  TheoremCheck c;
  c.theorem_id = "theorem3";
  if (R.is_commutative())
    c.notes.push_back(
        "ring is commutative; the non-commutativity hypothesis fails, inequality evaluated anyway");

  const Subgroup hr = commutator_subgroup(h);
  std::vector<Elem> meet;
  std::set_intersection(n.elements.begin(), n.elements.end(), hr.elements.begin(),
                        hr.elements.end(), std::back_inserter(meet));
  const bool trivial_meet = meet.size() == 1;  // {0}

  const QuotientRing q = quotient_ring(R, n);
  std::vector<Elem> image;
  for (Elem x : h.elements) image.push_back(q.to_quotient[static_cast<std::size_t>(x)]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const Subring hn = subring_from_elements(q.ring, image);

  const Rational lhs = pr_pair_count(h);
  const Rational rhs = pr_pair_count(hn) * commuting_fraction(R, n.elements, n.elements);
  c.lhs = lhs;
  c.rhs = rhs;
  c.add("pr_le_product", lhs <= rhs, detail::vs(lhs, rhs));
  c.inequality_holds = lhs <= rhs;
  c.equality_attained = lhs == rhs;
  c.equality_condition_predicted = trivial_meet;
  c.add("equality_if_trivial_meet", !trivial_meet || lhs == rhs,
        std::string("N meets [H,R] ") + (trivial_meet ? "trivially" : "non-trivially"));
  if (lhs == rhs && !trivial_meet)
    c.notes.push_back("equality attained although N meets [H,R] non-trivially (recorded only)");

  // the lemma's inclusion, element by element
  bool inclusion = true, equality_under_cond = true;
  std::string bad;
  for (Elem x = 0; x < R.order() && inclusion && equality_under_cond; ++x) {
    const Subring chx = centralizer(h, x);
    const std::vector<Elem> lifted = sum_set(R, chx.elements, n.elements);
    std::vector<Elem> lhs_cosets;
    for (Elem t : lifted) lhs_cosets.push_back(q.to_quotient[static_cast<std::size_t>(t)]);
    std::sort(lhs_cosets.begin(), lhs_cosets.end());
    lhs_cosets.erase(std::unique(lhs_cosets.begin(), lhs_cosets.end()), lhs_cosets.end());

    const Elem xq = q.to_quotient[static_cast<std::size_t>(x)];
    std::vector<Elem> rhs_cosets;
    for (Elem t : hn.elements)
      if (q.ring.commute(t, xq)) rhs_cosets.push_back(t);

    if (!std::includes(rhs_cosets.begin(), rhs_cosets.end(), lhs_cosets.begin(),
                       lhs_cosets.end())) {
      inclusion = false;
      bad = element_str(R, x);
    } else if (trivial_meet && lhs_cosets != rhs_cosets) {
      equality_under_cond = false;
      bad = element_str(R, x);
    }
  }
  c.add("lemma2_inclusion_all_x", inclusion, inclusion ? "" : "fails at x = " + bad);
  c.add("lemma2_equality_under_condition", equality_under_cond,
        equality_under_cond ? "" : "fails at x = " + bad);
  return c;
}

// --------------------------------------------------------------------------
// R/C_R(x) is isomorphic to [x,R] as additive groups.
inline TheoremCheck check_centralizer_quotient_iso(const FiniteRing& R, Elem x) {
  R.additive.check_element(x);
  TheoremCheck c;
  c.theorem_id = "obs2.1";

  const Subring crx = centralizer(full_subring(R), x);
  const QuotientGroup q = quotient(R.additive, crx.additive_subgroup());
  const Subgroup xr = element_commutator_subgroup(R, x);
  const auto qf = invariant_factors(q);
  const auto xf = invariant_factors(xr);
  c.add("quotient_iso_commutator", qf == xf,
        "R/C_R(x) has " + detail::factors_str(qf) + ", [x,R] has " + detail::factors_str(xf) +
            " at x = " + element_str(R, x));
  c.inequality_holds = qf == xf;
  return c;
}

// --------------------------------------------------------------------------
// |[S,R]| >= |K(S,R)| >= |[s,R]| = |R : C_R(s)| for every s in S.
inline TheoremCheck check_commutator_chain(const Subring& s) {
  const FiniteRing& R = s.ring();
  TheoremCheck c;
  c.theorem_id = "eqlb";

  const long long ksr = static_cast<long long>(commutator_set(s).size());
  const long long sr = commutator_subgroup(s).size();
  c.add("subgroup_ge_set", sr >= ksr,
        "|[S,R]| = " + std::to_string(sr) + ", |K(S,R)| = " + std::to_string(ksr));

  bool per_element = true;
  std::string bad;
  for (Elem x : s.elements) {
    const long long m = element_commutator_subgroup(R, x).size();
    const long long idx = R.order() / centralizer(full_subring(R), x).size();
    if (!(ksr >= m && m == idx)) {
      per_element = false;
      bad = element_str(R, x) + ": |K| = " + std::to_string(ksr) + ", |[s,R]| = " +
            std::to_string(m) + ", |R:C_R(s)| = " + std::to_string(idx);
      break;
    }
  }
  c.add("set_ge_element_and_index_eq", per_element, bad);
  c.lhs = Rational(sr);
  c.rhs = Rational(ksr);
  c.inequality_holds = c.passed();
  return c;
}

// --------------------------------------------------------------------------
// Lower bounds via K(S,R) and [S,R]:
//   Pr(S,R) >= (1/|K|)(1 + (|K|-1)/|S:Z(S,R)|), strict above 1/|K| when
//   Z(S,R) != S, the analogous [S,R] bound, and the two closing
//   comparisons: the [S,R] bound dominates the prime lower bound (equality
//   iff |R:[S,R]| = p) and the K bound dominates the [S,R] bound (equality
//   iff K(S,R) = [S,R]).
inline TheoremCheck check_lower_bounds(const Subring& s) {
  const FiniteRing& R = s.ring();
  TheoremCheck c;
  c.theorem_id = "newlb1";

  const Subring z = relative_center(s);
  const long long isz = s.size() / z.size();
  const long long K = static_cast<long long>(commutator_set(s).size());
  const long long M = commutator_subgroup(s).size();
  const Rational val = pr_pair_count(s);
  const Rational bound_k(isz + K - 1, K * isz);
  const Rational bound_m(isz + M - 1, M * isz);

  c.lhs = bound_k;
  c.rhs = val;
  c.add("k_bound_le_pr", bound_k <= val, detail::vs(bound_k, val));
  c.add("m_bound_le_pr", bound_m <= val, detail::vs(bound_m, val));
  if (z.size() != s.size()) {
    c.add("strict_above_1_over_K", val > Rational(1, K), detail::vs(Rational(1, K), val));
    c.add("strict_above_1_over_M", val > Rational(1, M), detail::vs(Rational(1, M), val));
  }
  c.inequality_holds = bound_k <= val && bound_m <= val;
  c.equality_attained = val == bound_k;

  // closing comparison (a): against the prime lower bound
  if (R.order() >= 2 && M != R.order() && z.size() != s.size()) {
    const long long p = smallest_prime_divisor(R.order());
    const Rational prime_lower =
        Rational(z.size(), s.size()) + Rational(p * (s.size() - z.size()), s.size() * R.order());
    c.add("m_bound_ge_prime_lower", bound_m >= prime_lower, detail::vs(bound_m, prime_lower));
    const bool eq = bound_m == prime_lower;
    const bool idx_p = R.order() / M == p;
    c.add("comparison_a_equality_iff_index_p", eq == idx_p,
          "equality is " + std::string(eq ? "attained" : "not attained") + ", |R:[S,R]| = " +
              std::to_string(R.order() / M));
  }
  // closing comparison (b): K bound dominates [S,R] bound
  c.add("k_bound_ge_m_bound", bound_k >= bound_m, detail::vs(bound_k, bound_m));
  c.add("comparison_b_equality_iff_K_eq_SR", (bound_k == bound_m) == (K == M),
        "|K(S,R)| = " + std::to_string(K) + ", |[S,R]| = " + std::to_string(M));
  c.notes.push_back("|S:Z(S,R)| = " + std::to_string(isz));
  return c;
}

// --------------------------------------------------------------------------
// Registry: theorem id -> the operation that certifies it. The sweep layer
// enumerates inputs per operation; ids that specialize another id (S = R
// corollaries, p = 2 corollaries) are certified by the same operation.
inline const std::vector<std::pair<std::string, std::string>>& theorem_registry() {
  static const std::vector<std::pair<std::string, std::string>> reg = {
      {"lemma1", "check_lemma_index"},
      {"theorem01", "check_sandwich"},
      {"cor1", "check_equality_conditions"},
      {"refine", "check_chain"},
      {"theorem001", "check_prime_bounds"},
      {"corprbd", "check_pr_prime_bounds"},
      {"theorem02", "check_noncentral_thresholds"},
      {"theorem2", "check_noncentral_thresholds"},
      {"dc001", "classify_extremal"},
      {"dc002", "classify_extremal"},
      {"dc", "classify_extremal"},
      {"lemma2", "check_quotient_factorization"},
      {"theorem3", "check_quotient_factorization"},
      {"theorem3-corollary", "check_quotient_factorization"},
      {"obs2.1", "check_centralizer_quotient_iso"},
      {"eqlb", "check_commutator_chain"},
      {"newlb1", "check_lower_bounds"},
      {"newlb2", "check_lower_bounds"},
      {"newlb3", "check_lower_bounds"},
      {"newlb4", "check_lower_bounds"},
      {"bound-comparisons", "check_lower_bounds"},
  };
  return reg;
}

inline bool is_known_theorem_id(const std::string& id) {
  for (const auto& [tid, op] : theorem_registry())
    if (tid == id) return true;
  return false;
}

}  // namespace ringlab
