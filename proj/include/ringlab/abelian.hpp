#pragma once

// Finite abelian group engine.
//
// Groups are products of cyclic groups Z_{d_1} x ... x Z_{d_k} with every
// d_i >= 2; the empty product is the trivial group. Elements are encoded as
// mixed-radix ids in [0, order), coordinate 0 most significant, so id order
// is lexicographic coordinate order. The canonical form behind every
// isomorphism test is the invariant-factor list d_1 | d_2 | ... | d_m,
// computed by Smith normal form over the integers.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

/// Element id inside a fixed group; 0 is always the identity.
using Elem = std::int64_t;

/// Hard limit on materialized element sets. Enumeration-heavy operations
/// carry their own (smaller, configurable) caps on top of this.
inline constexpr long long kEnumLimit = 1 << 20;

// --------------------------------------------------------------------------
// Smith normal form

/// Smith normal form of an integer matrix. Returns the diagonal entries
/// (non-negative, each dividing the next, trailing zeros kept).
inline std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) throw Error("smith_normal_form: ragged matrix");
  const std::size_t k = std::min(rows, cols);
  std::vector<long long> diag(k, 0);

  std::size_t t = 0;
  while (t < k) {
    // move the submatrix entry of least absolute value to the pivot slot
    std::size_t pi = t, pj = t;
    long long best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
          best = std::llabs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;  // submatrix is all zero
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);

    const long long p = m[t][t];
    bool dirty = false;
    for (std::size_t i = t + 1; i < rows && !dirty; ++i)
      if (m[i][t] % p != 0) {
        const long long q = m[i][t] / p;
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        dirty = true;  // remainder is smaller than the pivot; re-pivot
      }
    if (dirty) continue;
    for (std::size_t j = t + 1; j < cols && !dirty; ++j)
      if (m[t][j] % p != 0) {
        const long long q = m[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        dirty = true;
      }
    if (dirty) continue;

    // pivot divides its row and column: clear them exactly
    for (std::size_t i = t + 1; i < rows; ++i)
      if (m[i][t] != 0) {
        const long long q = m[i][t] / p;
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      }
    for (std::size_t j = t + 1; j < cols; ++j) m[t][j] = 0;

    // enforce the divisibility chain before moving on
    bool divides_rest = true;
    for (std::size_t i = t + 1; i < rows && divides_rest; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[i][j] % p != 0) {
          for (std::size_t l = t; l < cols; ++l) m[t][l] += m[i][l];
          divides_rest = false;
          break;
        }
    if (!divides_rest) continue;

    diag[t] = std::llabs(p);
    ++t;
  }
  return diag;
}

// --------------------------------------------------------------------------
// Groups

struct AbelianGroup {
  std::vector<long long> cyclic_orders;  // each >= 2; empty = trivial group
  long long order{1};

  AbelianGroup() = default;

  explicit AbelianGroup(std::vector<long long> orders) : cyclic_orders(std::move(orders)) {
    order = 1;
    for (long long d : cyclic_orders) {
      if (d < 2) throw Error("cyclic order must be >= 2, got " + std::to_string(d));
      if (order > (1LL << 62) / d) throw CapExceeded("group order overflows");
      order *= d;
    }
    strides_.assign(cyclic_orders.size(), 1);
    for (std::size_t i = cyclic_orders.size(); i-- > 1;)
      strides_[i - 1] = strides_[i] * cyclic_orders[i];
  }

  std::size_t rank() const { return cyclic_orders.size(); }

  bool same_presentation(const AbelianGroup& other) const {
    return cyclic_orders == other.cyclic_orders;
  }

  void check_element(Elem a) const {
    if (a < 0 || a >= order)
      throw MismatchError("element id " + std::to_string(a) + " outside group of order " +
                          std::to_string(order));
  }

  /// The i-th canonical generator e_i (order cyclic_orders[i]).
  Elem generator(std::size_t i) const { return strides_.at(i); }

  std::vector<long long> coords(Elem a) const {
    check_element(a);
    std::vector<long long> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = (a / strides_[i]) % cyclic_orders[i];
    return c;
  }

  /// Element from a coordinate vector; coordinates are reduced mod d_i.
  Elem element(const std::vector<long long>& c) const {
    if (c.size() != rank())
      throw MismatchError("coordinate vector of length " + std::to_string(c.size()) +
                          " for group of rank " + std::to_string(rank()));
    Elem id = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      const long long d = cyclic_orders[i];
      id += (((c[i] % d) + d) % d) * strides_[i];
    }
    return id;
  }

  Elem add(Elem a, Elem b) const {
    check_element(a);
    check_element(b);
    Elem r = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      const long long d = cyclic_orders[i], s = strides_[i];
      long long c = (a / s) % d + (b / s) % d;
      if (c >= d) c -= d;
      r += c * s;
    }
    return r;
  }

  Elem neg(Elem a) const {
    check_element(a);
    Elem r = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      const long long d = cyclic_orders[i], s = strides_[i];
      const long long c = (a / s) % d;
      r += (c ? d - c : 0) * s;
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem scalar_mul(long long n, Elem a) const {
    check_element(a);
    Elem r = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      const long long d = cyclic_orders[i], s = strides_[i];
      const long long c = (a / s) % d;
      r += ((((n % d) * c) % d + d) % d) * s;
    }
    return r;
  }

  long long element_order(Elem a) const {
    check_element(a);
    long long o = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
      const long long d = cyclic_orders[i];
      const long long c = (a / strides_[i]) % d;
      o = std::lcm(o, d / std::gcd(d, c));
    }
    return o;
  }

 private:
  std::vector<long long> strides_;
};

struct Subgroup {
  AbelianGroup parent;
  std::vector<Elem> generators;
  std::vector<Elem> elements;  // sorted ascending; always contains 0

  long long size() const { return static_cast<long long>(elements.size()); }

  bool contains(Elem a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
  }
};

struct QuotientGroup {
  AbelianGroup parent;
  Subgroup kernel;
  std::vector<Elem> coset_reps;    // coset id -> least element of the coset
  std::vector<Elem> coset_index;   // parent element id -> coset id
  std::vector<long long> structure;  // invariant factors, via SNF

  long long order() const { return static_cast<long long>(coset_reps.size()); }

  Elem coset_of(Elem a) const {
    parent.check_element(a);
    return coset_index[a];
  }

  /// Coset addition on coset ids.
  Elem add(Elem ca, Elem cb) const {
    return coset_index[parent.add(coset_reps.at(ca), coset_reps.at(cb))];
  }
};

// --------------------------------------------------------------------------
// Subgroup construction

inline Subgroup trivial_subgroup(const AbelianGroup& g) { return Subgroup{g, {}, {0}}; }

/// Smallest subgroup containing gens, by closure under addition (which in a
/// finite group yields negation for free).
inline Subgroup subgroup_generated(const AbelianGroup& g, std::vector<Elem> gens) {
  if (g.order > kEnumLimit) throw CapExceeded("subgroup_generated: group too large");
  for (Elem x : gens) g.check_element(x);
  std::vector<char> in(static_cast<std::size_t>(g.order), 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Elem gen : gens) {
      const Elem y = g.add(elems[i], gen);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return Subgroup{g, std::move(gens), std::move(elems)};
}

inline Subgroup full_subgroup(const AbelianGroup& g) {
  if (g.order > kEnumLimit) throw CapExceeded("full_subgroup: group too large");
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
  std::vector<Elem> elems(static_cast<std::size_t>(g.order));
  std::iota(elems.begin(), elems.end(), 0);
  return Subgroup{g, std::move(gens), std::move(elems)};
}

/// Wrap an element set already known to be a subgroup; closure is verified.
inline Subgroup subgroup_from_elements(const AbelianGroup& g, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (Elem x : elems) g.check_element(x);
  if (elems.empty() || elems[0] != 0)
    throw ClosureViolation("subgroup must contain the identity");
  for (Elem a : elems)
    for (Elem b : elems)
      if (!std::binary_search(elems.begin(), elems.end(), g.add(a, b)))
        throw ClosureViolation("set not closed under addition: " + std::to_string(a) + " + " +
                               std::to_string(b));
  Subgroup h{g, elems, elems};
  return h;
}

inline void require_subgroup_of(const AbelianGroup& g, const Subgroup& h, const char* who) {
  if (!h.parent.same_presentation(g))
    throw MismatchError(std::string(who) + ": subgroup belongs to a different group");
}

/// |G : H|.
inline long long index(const AbelianGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "index");
  return g.order / h.size();
}

// --------------------------------------------------------------------------
// Quotients and canonical invariants

inline QuotientGroup quotient(const AbelianGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "quotient");
  if (g.order > kEnumLimit) throw CapExceeded("quotient: group too large");

  std::vector<Elem> coset_index(static_cast<std::size_t>(g.order), -1);
  std::vector<Elem> reps;
  for (Elem a = 0; a < g.order; ++a) {
    if (coset_index[static_cast<std::size_t>(a)] != -1) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem x : h.elements) coset_index[static_cast<std::size_t>(g.add(a, x))] = id;
  }

  // canonical structure from the relation matrix: G's defining relations
  // stacked with H's generators
  const std::size_t k = g.rank();
  std::vector<std::vector<long long>> rel;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<long long> row(k, 0);
    row[i] = g.cyclic_orders[i];
    rel.push_back(std::move(row));
  }
  for (Elem x : h.generators) rel.push_back(g.coords(x));

  std::vector<long long> structure;
  for (long long d : smith_normal_form(rel))
    if (d > 1) structure.push_back(d);

  long long prod = 1;
  for (long long d : structure) prod *= d;
  if (prod != g.order / h.size())
    throw InternalMismatch("quotient structure has order " + std::to_string(prod) +
                           ", expected " + std::to_string(g.order / h.size()));

  return QuotientGroup{g, h, std::move(reps), std::move(coset_index), std::move(structure)};
}

inline std::vector<long long> invariant_factors(const AbelianGroup& g) {
  const std::size_t k = g.rank();
  std::vector<std::vector<long long>> rel;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<long long> row(k, 0);
    row[i] = g.cyclic_orders[i];
    rel.push_back(std::move(row));
  }
  std::vector<long long> out;
  for (long long d : smith_normal_form(rel))
    if (d > 1) out.push_back(d);
  return out;
}

inline std::vector<long long> invariant_factors(const QuotientGroup& q) { return q.structure; }

// --------------------------------------------------------------------------
// Concrete decomposition
//
// Takes a finite abelian group handed to us as a raw addition law on ids
// 0..n-1 (0 = identity) and produces canonical invariant factors together
// with an explicit isomorphism in both directions. Used for subgroups,
// coset groups and quotient-ring carriers.

struct Decomposition {
  std::vector<long long> factors;   // invariant factors, ascending divisibility
  AbelianGroup group;               // AbelianGroup(factors)
  std::vector<Elem> basis;          // concrete ids; basis[i] generates factor i
  std::vector<Elem> to_abstract;    // concrete id -> abstract id
  std::vector<Elem> from_abstract;  // abstract id -> concrete id
};

namespace detail {

struct ConcreteGroup {
  long long n{1};
  std::vector<Elem> table;  // n*n flattened addition
  Elem sum(Elem a, Elem b) const {
    return table[static_cast<std::size_t>(a * n + b)];
  }
};

inline long long concrete_order(const ConcreteGroup& g, Elem a) {
  long long o = 1;
  Elem x = a;
  while (x != 0) {
    x = g.sum(x, a);
    ++o;
  }
  return o;
}

inline Elem concrete_smul(const ConcreteGroup& g, long long c, Elem a) {
  Elem r = 0;
  for (long long i = 0; i < c; ++i) r = g.sum(r, a);
  return r;
}

/// Orders (descending divisibility chain) and generators of a direct
/// decomposition into cyclic groups. Splits off a maximal-order cyclic
/// summand and recurses on the quotient, adjusting lifts so their orders
/// match their coset orders.
inline void decompose_rec(const ConcreteGroup& g, std::vector<long long>& orders,
                          std::vector<Elem>& basis) {
  if (g.n == 1) return;

  Elem gen = 0;
  long long m = 1;
  for (Elem a = 0; a < g.n; ++a) {
    const long long o = concrete_order(g, a);
    if (o > m) {
      m = o;
      gen = a;
    }
  }

  // discrete log inside <gen>
  std::vector<Elem> cyclic;
  std::vector<long long> log_in_cyclic(static_cast<std::size_t>(g.n), -1);
  {
    Elem x = 0;
    for (long long c = 0; c < m; ++c) {
      cyclic.push_back(x);
      log_in_cyclic[static_cast<std::size_t>(x)] = c;
      x = g.sum(x, gen);
    }
  }

  orders.push_back(m);
  basis.push_back(gen);
  if (m == g.n) return;  // cyclic, done

  // quotient by <gen>: coset ids in least-member order, coset of 0 first
  const long long q = g.n / m;
  std::vector<Elem> coset_of(static_cast<std::size_t>(g.n), -1);
  std::vector<Elem> rep;
  for (Elem a = 0; a < g.n; ++a) {
    if (coset_of[static_cast<std::size_t>(a)] != -1) continue;
    const Elem id = static_cast<Elem>(rep.size());
    rep.push_back(a);
    for (Elem h : cyclic) coset_of[static_cast<std::size_t>(g.sum(a, h))] = id;
  }

  ConcreteGroup quot;
  quot.n = q;
  quot.table.resize(static_cast<std::size_t>(q * q));
  for (Elem i = 0; i < q; ++i)
    for (Elem j = 0; j < q; ++j)
      quot.table[static_cast<std::size_t>(i * q + j)] =
          coset_of[static_cast<std::size_t>(g.sum(rep[static_cast<std::size_t>(i)],
                                                  rep[static_cast<std::size_t>(j)]))];

  std::vector<long long> sub_orders;
  std::vector<Elem> sub_basis;
  decompose_rec(quot, sub_orders, sub_basis);

  for (std::size_t i = 0; i < sub_basis.size(); ++i) {
    const long long o = sub_orders[i];
    Elem lift = rep[static_cast<std::size_t>(sub_basis[i])];
    // o * lift lands in <gen>, say k * gen with o | k; shift the lift so
    // its order drops to exactly o
    const Elem t = concrete_smul(g, o, lift);
    const long long k = log_in_cyclic[static_cast<std::size_t>(t)];
    if (k % o != 0) throw InternalMismatch("decompose: lift adjustment failed");
    lift = g.sum(lift, concrete_smul(g, m - (k / o) % m, gen));
    orders.push_back(o);
    basis.push_back(lift);
  }
}

}  // namespace detail

template <class AddFn>
Decomposition decompose_concrete(long long n, AddFn&& addfn) {
  if (n < 1) throw Error("decompose_concrete: empty carrier");
  if (n > 4096) throw CapExceeded("decompose_concrete: order " + std::to_string(n));

  detail::ConcreteGroup g;
  g.n = n;
  g.table.resize(static_cast<std::size_t>(n * n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) g.table[static_cast<std::size_t>(a * n + b)] = addfn(a, b);

  std::vector<long long> orders;
  std::vector<Elem> basis;
  detail::decompose_rec(g, orders, basis);

  Decomposition d;
  d.factors.assign(orders.rbegin(), orders.rend());
  d.basis.assign(basis.rbegin(), basis.rend());
  d.group = AbelianGroup(d.factors);
  if (d.group.order != n) throw InternalMismatch("decompose: order mismatch");

  d.to_abstract.assign(static_cast<std::size_t>(n), -1);
  d.from_abstract.assign(static_cast<std::size_t>(n), -1);
  for (Elem abs_id = 0; abs_id < n; ++abs_id) {
    const auto coords = d.group.coords(abs_id);
    Elem concrete = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      concrete = g.sum(concrete, detail::concrete_smul(g, coords[i], d.basis[i]));
    d.from_abstract[static_cast<std::size_t>(abs_id)] = concrete;
    if (d.to_abstract[static_cast<std::size_t>(concrete)] != -1)
      throw InternalMismatch("decompose: coordinate map not injective");
    d.to_abstract[static_cast<std::size_t>(concrete)] = abs_id;
  }
  return d;
}

/// Invariant factors of a subgroup in its own right.
inline std::vector<long long> invariant_factors(const Subgroup& h) {
  const auto& els = h.elements;
  const auto local = [&](Elem x) {
    return static_cast<Elem>(std::lower_bound(els.begin(), els.end(), x) - els.begin());
  };
  return decompose_concrete(h.size(), [&](Elem a, Elem b) {
           return local(h.parent.add(els[static_cast<std::size_t>(a)],
                                     els[static_cast<std::size_t>(b)]));
         })
      .factors;
}

/// Invariant factors of A/B for concrete subgroups B <= A handed over as
/// element lists plus an ambient addition law. The coset group is
/// materialized and decomposed.
template <class AddFn>
std::vector<long long> coset_group_factors(const std::vector<Elem>& big,
                                           const std::vector<Elem>& small, AddFn&& add) {
  if (big.empty() || small.empty() || big.size() % small.size() != 0)
    throw MismatchError("coset_group_factors: |B| must divide |A|");
  std::vector<Elem> sorted_big = big;
  std::sort(sorted_big.begin(), sorted_big.end());
  const auto local = [&](Elem x) {
    const auto it = std::lower_bound(sorted_big.begin(), sorted_big.end(), x);
    if (it == sorted_big.end() || *it != x)
      throw MismatchError("coset_group_factors: sum left the big subgroup");
    return static_cast<Elem>(it - sorted_big.begin());
  };
  const long long nb = static_cast<long long>(sorted_big.size());
  std::vector<Elem> coset_of(static_cast<std::size_t>(nb), -1);
  std::vector<Elem> rep;
  for (Elem i = 0; i < nb; ++i) {
    if (coset_of[static_cast<std::size_t>(i)] != -1) continue;
    const Elem id = static_cast<Elem>(rep.size());
    rep.push_back(sorted_big[static_cast<std::size_t>(i)]);
    for (Elem x : small) coset_of[static_cast<std::size_t>(local(add(sorted_big[static_cast<std::size_t>(i)], x)))] = id;
  }
  const long long q = static_cast<long long>(rep.size());
  return decompose_concrete(q, [&](Elem i, Elem j) {
           return coset_of[static_cast<std::size_t>(
               local(add(rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)])))];
         })
      .factors;
}

template <class A, class B>
bool is_isomorphic(const A& a, const B& b) {
  return invariant_factors(a) == invariant_factors(b);
}

template <class A>
bool is_cyclic(const A& a) {
  return invariant_factors(a).size() <= 1;
}

// --------------------------------------------------------------------------
// Isomorphism enumeration

struct GroupIso {
  std::vector<Elem> generator_images;  // images of the source generators e_i
  std::vector<Elem> map;               // full element map, size = source order
};

struct IsoSearchStats {
  long long nodes_visited{0};
  long long found{0};
};

inline constexpr long long kDefaultIsoBudget = 1'000'000;

/// Visits every additive isomorphism g -> h, in lexicographic order of the
/// generator-image tuple. Candidate images are pruned to elements of the
/// exact matching order before the partial map is materialized and checked
/// for injectivity. The visitor returns false to stop the enumeration.
/// Throws SearchBudgetExceeded once more than node_budget candidate choices
/// have been explored.
template <class Visitor>
IsoSearchStats for_each_isomorphism(const AbelianGroup& g, const AbelianGroup& h,
                                    Visitor&& visit, long long node_budget = kDefaultIsoBudget) {
  IsoSearchStats st;
  if (g.order != h.order) return st;
  if (g.order > 4096) throw CapExceeded("for_each_isomorphism: group too large");

  const std::size_t k = g.rank();
  if (k == 0) {
    GroupIso iso;
    iso.map = {0};
    ++st.found;
    visit(iso);
    return st;
  }

  std::vector<long long> horder(static_cast<std::size_t>(h.order));
  for (Elem x = 0; x < h.order; ++x) horder[static_cast<std::size_t>(x)] = h.element_order(x);

  std::vector<std::vector<Elem>> cands(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (Elem x = 0; x < h.order; ++x)
      if (horder[static_cast<std::size_t>(x)] == g.cyclic_orders[i]) cands[i].push_back(x);
    if (cands[i].empty()) return st;
  }

  // frames[i]: the span of e_0..e_{i-1} as parallel (source id, image) lists
  struct Frame {
    std::vector<Elem> ids, imgs;
  };
  std::vector<Frame> frames(k + 1);
  frames[0].ids = {0};
  frames[0].imgs = {0};

  std::vector<Elem> images(k);
  std::vector<long long> seen(static_cast<std::size_t>(h.order), -1);
  long long stamp = 0;
  bool stop = false;

  const auto rec = [&](auto&& self, std::size_t depth) -> void {
    for (Elem y : cands[depth]) {
      if (stop) return;
      if (++st.nodes_visited > node_budget)
        throw SearchBudgetExceeded("isomorphism search exceeded budget of " +
                                   std::to_string(node_budget) + " nodes");
      images[depth] = y;

      const Frame& prev = frames[depth];
      Frame& next = frames[depth + 1];
      next.ids = prev.ids;
      next.imgs = prev.imgs;
      const long long d = g.cyclic_orders[depth];
      const Elem gen = g.generator(depth);
      std::size_t block = 0;  // start of the previous coefficient block
      const std::size_t n_prev = prev.ids.size();
      for (long long c = 1; c < d; ++c) {
        for (std::size_t p = 0; p < n_prev; ++p) {
          next.ids.push_back(g.add(next.ids[block + p], gen));
          next.imgs.push_back(h.add(next.imgs[block + p], y));
        }
        block += n_prev;
      }

      ++stamp;
      bool injective = true;
      for (Elem img : next.imgs) {
        if (seen[static_cast<std::size_t>(img)] == stamp) {
          injective = false;
          break;
        }
        seen[static_cast<std::size_t>(img)] = stamp;
      }
      if (!injective) continue;

      if (depth + 1 == k) {
        GroupIso iso;
        iso.generator_images = images;
        iso.map.assign(static_cast<std::size_t>(g.order), 0);
        for (std::size_t p = 0; p < next.ids.size(); ++p)
          iso.map[static_cast<std::size_t>(next.ids[p])] = next.imgs[p];
        ++st.found;
        if (!visit(std::as_const(iso))) {
          stop = true;
          return;
        }
      } else {
        self(self, depth + 1);
      }
    }
  };
  rec(rec, 0);
  return st;
}

/// All additive isomorphisms g -> h; throws SearchBudgetExceeded when more
/// than max_count exist.
inline std::vector<GroupIso> isomorphisms(const AbelianGroup& g, const AbelianGroup& h,
                                          long long max_count = kDefaultIsoBudget) {
  std::vector<GroupIso> out;
  for_each_isomorphism(g, h, [&](const GroupIso& iso) {
    if (static_cast<long long>(out.size()) >= max_count)
      throw SearchBudgetExceeded("isomorphism count exceeds cap of " +
                                 std::to_string(max_count));
    out.push_back(iso);
    return true;
  });
  return out;
}

// --------------------------------------------------------------------------
// Subgroup lattice

/// Every subgroup of g, exactly once, sorted by (order, element list).
/// Found by closing each known subgroup with one extra element until no new
/// subgroup appears.
inline std::vector<Subgroup> all_subgroups(const AbelianGroup& g, long long cap = 64) {
  if (g.order > cap)
    throw CapExceeded("all_subgroups: order " + std::to_string(g.order) + " exceeds cap " +
                      std::to_string(cap));
  std::set<std::vector<Elem>> seen;
  std::deque<Subgroup> work;
  std::vector<Subgroup> out;

  Subgroup triv = trivial_subgroup(g);
  seen.insert(triv.elements);
  work.push_back(std::move(triv));

  while (!work.empty()) {
    Subgroup h = std::move(work.front());
    work.pop_front();
    for (Elem x = 1; x < g.order; ++x) {
      if (h.contains(x)) continue;
      std::vector<Elem> gens = h.generators;
      gens.push_back(x);
      Subgroup bigger = subgroup_generated(g, std::move(gens));
      if (seen.insert(bigger.elements).second) work.push_back(std::move(bigger));
    }
    out.push_back(std::move(h));
  }

  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

}  // namespace ringlab
