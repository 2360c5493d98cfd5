#pragma once

// Z-isoclinism of (subring, ring) pairs, decided by exhaustive witness
// search.
//
// A pair (S1,R1) is Z-isoclinic to (S2,R2) when there are additive
// isomorphisms phi : R1/Z(S1,R1) -> R2/Z(S2,R2) carrying S1/Z(S1,R1) onto
// S2/Z(S2,R2), and psi : [S1,R1] -> [S2,R2], with psi([u,v]) = [u',v'] for
// lifts u',v' of the phi-images. Commutators only depend on cosets because
// Z(S,R) sits inside the center of R, so the compatibility condition is
// checked on coset representatives and lift-independence is asserted
// exhaustively per run.
//
// psi is never searched independently: for a fixed phi the relation
// {([u,v], [u',v'])} generates a subgroup G of [S1,R1] x [S2,R2], and psi
// exists iff G is the graph of an additive bijection, which three subgroup
// conditions decide. The first phi (in lexicographic generator-image order)
// whose graph passes is returned.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/abelian.hpp"
#include "ringlab/bounds.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/prob.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Budget on candidate generator-image assignments explored while
/// enumerating phi; exceeding it reports "undecided", never "not
/// isoclinic".
inline constexpr long long kDefaultPhiBudget = 1'000'000;

struct RingPair {
  const FiniteRing* ring{nullptr};
  Subring sub;
  Subring zsr;                   // Z(S,R)
  QuotientGroup quo;             // (R,+) / Z(S,R)
  Decomposition qdec;            // the coset group in canonical coordinates
  std::vector<Elem> sub_cosets;  // coset ids forming S/Z(S,R), sorted
  Subgroup commutator;           // [S,R]
  Probability prob;              // Pr(S,R)

  static RingPair make(const FiniteRing& r, Subring s) {
    require_same_ring(s, r, "RingPair");
    RingPair p;
    p.ring = &r;
    p.sub = std::move(s);
    p.zsr = relative_center(p.sub);
    p.quo = quotient(r.additive, p.zsr.additive_subgroup());
    p.qdec = decompose_concrete(p.quo.order(),
                                [&](Elem a, Elem b) { return p.quo.add(a, b); });
    for (Elem x : p.sub.elements) p.sub_cosets.push_back(p.quo.coset_of(x));
    std::sort(p.sub_cosets.begin(), p.sub_cosets.end());
    p.sub_cosets.erase(std::unique(p.sub_cosets.begin(), p.sub_cosets.end()),
                       p.sub_cosets.end());
    p.commutator = commutator_subgroup(p.sub);
    p.prob = pr_pair_count(p.sub);
    return p;
  }
};

struct PairInvariants {
  std::vector<long long> quotient_factors;      // R/Z(S,R)
  std::vector<long long> sub_quotient_factors;  // S/Z(S,R)
  std::vector<long long> commutator_factors;    // [S,R]
  Probability pr_value;

  bool operator==(const PairInvariants&) const = default;
};

inline PairInvariants pair_invariants(const RingPair& p) {
  const FiniteRing& r = *p.ring;
  PairInvariants inv;
  inv.quotient_factors = p.quo.structure;
  inv.sub_quotient_factors = coset_group_factors(p.sub.elements, p.zsr.elements,
                                                 [&](Elem a, Elem b) { return r.add(a, b); });
  inv.commutator_factors = invariant_factors(p.commutator);
  inv.pr_value = p.prob;
  return inv;
}

/// Names the first invariant separating the two pairs; empty when they all
/// agree.
inline std::string describe_invariant_mismatch(const PairInvariants& a, const PairInvariants& b) {
  const auto fs = [](const std::vector<long long>& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + "]";
  };
  if (a.quotient_factors != b.quotient_factors)
    return "quotient invariants " + fs(a.quotient_factors) + " vs " + fs(b.quotient_factors);
  if (a.sub_quotient_factors != b.sub_quotient_factors)
    return "subring-quotient invariants " + fs(a.sub_quotient_factors) + " vs " +
           fs(b.sub_quotient_factors);
  if (a.commutator_factors != b.commutator_factors)
    return "commutator invariants " + fs(a.commutator_factors) + " vs " +
           fs(b.commutator_factors);
  if (a.pr_value != b.pr_value)
    return "relative commuting probabilities " + a.pr_value.str() + " vs " + b.pr_value.str();
  return "";
}

struct IsoclinismWitness {
  std::vector<Elem> phi;         // coset id of R1/Z1 -> coset id of R2/Z2
  std::vector<Elem> psi_domain;  // elements of [S1,R1], sorted
  std::vector<Elem> psi_image;   // psi of each domain entry, in [S2,R2]
  std::vector<std::string> transcript;

  Elem psi_of(Elem x) const {
    const auto it = std::lower_bound(psi_domain.begin(), psi_domain.end(), x);
    if (it == psi_domain.end() || *it != x)
      throw MismatchError("psi applied outside [S1,R1]");
    return psi_image[static_cast<std::size_t>(it - psi_domain.begin())];
  }
};

namespace detail {

/// Commutators must not depend on the choice of coset representative; this
/// asserts it exhaustively over S x R. A failure would mean Z(S,R) escaped
/// the center, i.e. a bug.
inline void assert_lift_independence(const RingPair& p) {
  const FiniteRing& r = *p.ring;
  for (Elem u : p.sub.elements) {
    const Elem ru = p.quo.coset_reps[static_cast<std::size_t>(p.quo.coset_of(u))];
    for (Elem v = 0; v < r.order(); ++v) {
      const Elem rv = p.quo.coset_reps[static_cast<std::size_t>(p.quo.coset_of(v))];
      if (r.bracket(u, v) != r.bracket(ru, rv))
        throw InternalMismatch("commutator depends on coset representatives");
    }
  }
}

}  // namespace detail

/// Full re-verification of a witness against the definition: phi additive
/// and bijective with the subring-image condition, psi additive and
/// bijective, and psi([u,v]) = [u',v'] over every pair (u,v) in S1 x R1.
/// On failure, appends the reason to *why when given.
inline bool verify_witness(const RingPair& p1, const RingPair& p2, const IsoclinismWitness& w,
                           std::vector<std::string>* why = nullptr) {
  const auto fail = [&](const std::string& reason) {
    if (why) why->push_back(reason);
    return false;
  };
  const FiniteRing& r1 = *p1.ring;
  const FiniteRing& r2 = *p2.ring;
  const long long q1 = p1.quo.order(), q2 = p2.quo.order();

  if (q1 != q2 || static_cast<long long>(w.phi.size()) != q1)
    return fail("phi is not a map between quotients of equal order");
  {
    std::vector<char> hit(static_cast<std::size_t>(q2), 0);
    for (Elem c : w.phi) {
      if (c < 0 || c >= q2 || hit[static_cast<std::size_t>(c)]) return fail("phi is not a bijection");
      hit[static_cast<std::size_t>(c)] = 1;
    }
  }
  for (Elem a = 0; a < q1; ++a)
    for (Elem b = 0; b < q1; ++b)
      if (w.phi[static_cast<std::size_t>(p1.quo.add(a, b))] !=
          p2.quo.add(w.phi[static_cast<std::size_t>(a)], w.phi[static_cast<std::size_t>(b)]))
        return fail("phi is not additive");

  std::vector<Elem> image;
  for (Elem c : p1.sub_cosets) image.push_back(w.phi[static_cast<std::size_t>(c)]);
  std::sort(image.begin(), image.end());
  if (image != p2.sub_cosets) return fail("phi does not map S1/Z1 onto S2/Z2");

  if (w.psi_domain != p1.commutator.elements ||
      w.psi_image.size() != w.psi_domain.size())
    return fail("psi domain is not [S1,R1]");
  {
    std::vector<Elem> img = w.psi_image;
    std::sort(img.begin(), img.end());
    if (img != p2.commutator.elements) return fail("psi is not a bijection onto [S2,R2]");
  }
  for (Elem x : w.psi_domain)
    for (Elem y : w.psi_domain)
      if (w.psi_of(r1.add(x, y)) != r2.add(w.psi_of(x), w.psi_of(y)))
        return fail("psi is not additive");

  for (Elem u : p1.sub.elements) {
    const Elem cu = w.phi[static_cast<std::size_t>(p1.quo.coset_of(u))];
    const Elem u2 = p2.quo.coset_reps[static_cast<std::size_t>(cu)];
    for (Elem v = 0; v < r1.order(); ++v) {
      const Elem cv = w.phi[static_cast<std::size_t>(p1.quo.coset_of(v))];
      const Elem v2 = p2.quo.coset_reps[static_cast<std::size_t>(cv)];
      if (w.psi_of(r1.bracket(u, v)) != r2.bracket(u2, v2))
        return fail("psi([u,v]) != [u',v'] at u = " + element_str(r1, u) + ", v = " +
                    element_str(r1, v));
    }
  }
  return true;
}

/// Searches for a Z-isoclinism witness. Enumerates phi in deterministic
/// lexicographic order, filters by the subring-image condition, then decides
/// the forced psi through the graph-subgroup construction. Returns the first
/// verified witness, nullopt when the search space is exhausted, and throws
/// SearchBudgetExceeded when the budget is hit first.
inline std::optional<IsoclinismWitness> find_isoclinism(const RingPair& p1, const RingPair& p2,
                                                        long long budget = kDefaultPhiBudget,
                                                        bool use_invariant_prefilter = true) {
  if (use_invariant_prefilter &&
      !describe_invariant_mismatch(pair_invariants(p1), pair_invariants(p2)).empty())
    return std::nullopt;

  detail::assert_lift_independence(p1);
  detail::assert_lift_independence(p2);

  const FiniteRing& r1 = *p1.ring;
  const FiniteRing& r2 = *p2.ring;
  const auto& a_elems = p1.commutator.elements;
  const auto& b_elems = p2.commutator.elements;
  const long long na = static_cast<long long>(a_elems.size());
  const long long nb = static_cast<long long>(b_elems.size());
  if (na != nb) return std::nullopt;  // commutator orders differ, no psi possible

  const auto a_index = [&](Elem x) {
    return static_cast<Elem>(std::lower_bound(a_elems.begin(), a_elems.end(), x) -
                             a_elems.begin());
  };
  const auto b_index = [&](Elem x) {
    return static_cast<Elem>(std::lower_bound(b_elems.begin(), b_elems.end(), x) -
                             b_elems.begin());
  };

  std::optional<IsoclinismWitness> found;

  for_each_isomorphism(
      p1.qdec.group, p2.qdec.group,
      [&](const GroupIso& iso) {
        // abstract map -> coset map
        std::vector<Elem> phi(static_cast<std::size_t>(p1.quo.order()));
        for (Elem c = 0; c < p1.quo.order(); ++c)
          phi[static_cast<std::size_t>(c)] = p2.qdec.from_abstract[static_cast<std::size_t>(
              iso.map[static_cast<std::size_t>(p1.qdec.to_abstract[static_cast<std::size_t>(c)])])];

        std::vector<Elem> image;
        for (Elem c : p1.sub_cosets) image.push_back(phi[static_cast<std::size_t>(c)]);
        std::sort(image.begin(), image.end());
        if (image != p2.sub_cosets) return true;  // next phi

        // graph of the forced psi inside [S1,R1] x [S2,R2]
        std::vector<char> in_graph(static_cast<std::size_t>(na * nb), 0);
        std::vector<Elem> graph{0};
        in_graph[0] = 1;
        std::vector<Elem> gens;
        for (Elem ca : p1.sub_cosets) {
          const Elem u1 = p1.quo.coset_reps[static_cast<std::size_t>(ca)];
          const Elem u2 = p2.quo.coset_reps[static_cast<std::size_t>(phi[static_cast<std::size_t>(ca)])];
          for (Elem cb = 0; cb < p1.quo.order(); ++cb) {
            const Elem v1 = p1.quo.coset_reps[static_cast<std::size_t>(cb)];
            const Elem v2 =
                p2.quo.coset_reps[static_cast<std::size_t>(phi[static_cast<std::size_t>(cb)])];
            gens.push_back(a_index(r1.bracket(u1, v1)) * nb + b_index(r2.bracket(u2, v2)));
          }
        }
        for (std::size_t i = 0; i < graph.size(); ++i)
          for (Elem g : gens) {
            const Elem xa = graph[i] / nb, xb = graph[i] % nb;
            const Elem ga = g / nb, gb = g % nb;
            const Elem sum =
                a_index(r1.add(a_elems[static_cast<std::size_t>(xa)],
                               a_elems[static_cast<std::size_t>(ga)])) *
                    nb +
                b_index(r2.add(b_elems[static_cast<std::size_t>(xb)],
                               b_elems[static_cast<std::size_t>(gb)]));
            if (!in_graph[static_cast<std::size_t>(sum)]) {
              in_graph[static_cast<std::size_t>(sum)] = 1;
              graph.push_back(sum);
            }
          }

        // single-valued, injective, surjective: then the graph is psi
        std::vector<Elem> psi(static_cast<std::size_t>(na), -1);
        std::vector<char> hit(static_cast<std::size_t>(nb), 0);
        bool ok = true;
        for (Elem pr_id : graph) {
          const Elem xa = pr_id / nb, xb = pr_id % nb;
          if ((xa == 0) != (xb == 0)) {
            ok = false;  // (0,y) kills single-valuedness, (x,0) kills injectivity
            break;
          }
          if (psi[static_cast<std::size_t>(xa)] != -1) {
            ok = false;
            break;
          }
          psi[static_cast<std::size_t>(xa)] = xb;
          hit[static_cast<std::size_t>(xb)] = 1;
        }
        if (ok)
          for (Elem i = 0; i < na; ++i)
            if (psi[static_cast<std::size_t>(i)] == -1 || !hit[static_cast<std::size_t>(i)]) {
              ok = false;
              break;
            }
        if (!ok) return true;  // next phi

        IsoclinismWitness w;
        w.phi = std::move(phi);
        w.psi_domain = a_elems;
        w.psi_image.resize(static_cast<std::size_t>(na));
        for (Elem i = 0; i < na; ++i)
          w.psi_image[static_cast<std::size_t>(i)] =
              b_elems[static_cast<std::size_t>(psi[static_cast<std::size_t>(i)])];
        w.transcript = {
            "phi: additive isomorphism of quotients, lexicographically first candidate",
            "phi maps S1/Z(S1,R1) onto S2/Z(S2,R2)",
            "lift independence of commutators verified on both sides",
            "graph subgroup is single-valued, injective and surjective",
            "psi extracted from the graph; psi([u,v]) = [u',v'] for all coset pairs",
        };
        found = std::move(w);
        return false;  // stop enumeration
      },
      budget);

  return found;
}

/// The S = R specialization: Z-isoclinism of rings via R/Z(R) and [R,R].
inline std::optional<IsoclinismWitness> rings_isoclinic(const FiniteRing& r1,
                                                        const FiniteRing& r2,
                                                        long long budget = kDefaultPhiBudget) {
  const RingPair p1 = RingPair::make(r1, full_subring(r1));
  const RingPair p2 = RingPair::make(r2, full_subring(r2));
  return find_isoclinism(p1, p2, budget);
}

/// CLI-facing decision with an explicit undecided state.
struct IsoclinismDecision {
  enum class Kind { witness, not_isoclinic, undecided };
  Kind kind{Kind::not_isoclinic};
  std::optional<IsoclinismWitness> witness;
  std::string reason;
};

inline IsoclinismDecision decide_isoclinism(const RingPair& p1, const RingPair& p2,
                                            long long budget = kDefaultPhiBudget) {
  IsoclinismDecision d;
  const std::string mismatch =
      describe_invariant_mismatch(pair_invariants(p1), pair_invariants(p2));
  if (!mismatch.empty()) {
    d.kind = IsoclinismDecision::Kind::not_isoclinic;
    d.reason = mismatch;
    return d;
  }
  try {
    auto w = find_isoclinism(p1, p2, budget, /*use_invariant_prefilter=*/false);
    if (w) {
      d.kind = IsoclinismDecision::Kind::witness;
      d.witness = std::move(w);
    } else {
      d.kind = IsoclinismDecision::Kind::not_isoclinic;
      d.reason = "all invariants agree but no compatible (phi, psi) exists; search exhausted";
    }
  } catch (const SearchBudgetExceeded& e) {
    d.kind = IsoclinismDecision::Kind::undecided;
    d.reason = e.what();
  }
  return d;
}

/// Pr(S1,R1) = Pr(S2,R2) for isoclinic pairs; the probabilities are
/// recomputed from scratch on both sides.
inline TheoremCheck verify_invariance(const RingPair& p1, const RingPair& p2,
                                      const IsoclinismWitness& w) {
  std::vector<std::string> why;
  if (!verify_witness(p1, p2, w, &why))
    throw Error("verify_invariance: invalid witness: " + (why.empty() ? "" : why.front()));
  TheoremCheck c;
  c.theorem_id = "isoclinism-invariance";
  const Rational a = pr_pair_count(p1.sub);
  const Rational b = pr_pair_count(p2.sub);
  c.lhs = a;
  c.rhs = b;
  c.add("pr_equal", a == b, a.str() + " vs " + b.str());
  c.inequality_holds = a == b;
  c.equality_attained = a == b;
  return c;
}

/// [s1,R1] and [s2,R2] are isomorphic for phi-matched cosets.
inline TheoremCheck verify_coset_commutator_iso(const RingPair& p1, const RingPair& p2,
                                                const IsoclinismWitness& w) {
  std::vector<std::string> why;
  if (!verify_witness(p1, p2, w, &why))
    throw Error("verify_coset_commutator_iso: invalid witness: " +
                (why.empty() ? "" : why.front()));
  TheoremCheck c;
  c.theorem_id = "isolem";
  bool all = true;
  std::string bad;
  for (Elem ca : p1.sub_cosets) {
    const Elem s1 = p1.quo.coset_reps[static_cast<std::size_t>(ca)];
    const Elem s2 =
        p2.quo.coset_reps[static_cast<std::size_t>(w.phi[static_cast<std::size_t>(ca)])];
    const Subgroup x1 = element_commutator_subgroup(*p1.ring, s1);
    const Subgroup x2 = element_commutator_subgroup(*p2.ring, s2);
    if (x1.size() != x2.size() || invariant_factors(x1) != invariant_factors(x2)) {
      all = false;
      bad = "at coset of " + element_str(*p1.ring, s1);
      break;
    }
  }
  c.add("coset_commutators_isomorphic", all, bad);
  c.inequality_holds = all;
  return c;
}

}  // namespace ringlab
