#pragma once

// Finite rings, not necessarily unital or commutative.
//
// A ring is an abelian group Z_{d_1} x ... x Z_{d_k} together with the k x k
// table of basis products e_i * e_j; multiplication of arbitrary elements is
// the bilinear extension. Construction validates well-definedness (the
// additive order of e_i * e_j must divide gcd(d_i, d_j)) and associativity on
// all basis triples, which bilinearity extends to the whole ring. Invalid
// rings are unrepresentable after construction.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/abelian.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

/// Full n x n operation tables are materialized up to this order; beyond it
/// products fall back to per-call structure-constant folds.
inline constexpr long long kRingTableLimit = 1024;

/// Default cap for enumeration-heavy operations (subring lattices, corpus
/// sweeps).
inline constexpr long long kDefaultRingCap = 64;

struct FiniteRing {
  AbelianGroup additive;
  std::vector<std::vector<Elem>> basis_product;  // e_i * e_j as element ids
  std::string name;
  /// Generator lists for subrings a builtin family singles out (e.g. the
  /// scalar matrices inside the upper-triangular ring).
  std::vector<std::pair<std::string, std::vector<Elem>>> named_subrings;

  // flattened order x order tables, present iff order() <= kRingTableLimit
  std::vector<Elem> add_table, mul_table, neg_table;

  long long order() const { return additive.order; }
  std::size_t rank() const { return additive.rank(); }
  bool has_tables() const { return !mul_table.empty() || order() == 0; }

  Elem add(Elem a, Elem b) const {
    if (!add_table.empty()) {
      additive.check_element(a);
      additive.check_element(b);
      return add_table[static_cast<std::size_t>(a * order() + b)];
    }
    return additive.add(a, b);
  }

  Elem neg(Elem a) const {
    if (!neg_table.empty()) {
      additive.check_element(a);
      return neg_table[static_cast<std::size_t>(a)];
    }
    return additive.neg(a);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (!mul_table.empty()) {
      additive.check_element(a);
      additive.check_element(b);
      return mul_table[static_cast<std::size_t>(a * order() + b)];
    }
    return mul_fold(a, b);
  }

  /// Additive commutator [a, b] = ab - ba.
  Elem bracket(Elem a, Elem b) const { return sub(mul(a, b), mul(b, a)); }

  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  /// Commutativity is equivalent to symmetry of the basis-product table.
  bool is_commutative() const {
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = i + 1; j < rank(); ++j)
        if (basis_product[i][j] != basis_product[j][i]) return false;
    return true;
  }

  Elem element(const std::vector<long long>& coords) const { return additive.element(coords); }

  /// Bilinear fold over the structure constants; the table-free path.
  Elem mul_fold(Elem a, Elem b) const {
    const auto ca = additive.coords(a);
    const auto cb = additive.coords(b);
    Elem acc = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (ca[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) {
        if (cb[j] == 0) continue;
        acc = additive.add(acc, additive.scalar_mul(ca[i] * cb[j], basis_product[i][j]));
      }
    }
    return acc;
  }
};

inline std::string element_str(const AbelianGroup& g, Elem a) {
  const auto c = g.coords(a);
  if (c.empty()) return "0";
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

inline std::string element_str(const FiniteRing& r, Elem a) { return element_str(r.additive, a); }

// --------------------------------------------------------------------------
// Construction and validation

/// Builds and validates a ring from cyclic orders and the basis-product
/// table given as coordinate vectors. Throws WellDefinednessViolation or
/// AssociativityViolation (naming the witnessing triple) on bad tables.
inline FiniteRing ring_from_structure(std::vector<long long> orders,
                                      const std::vector<std::vector<std::vector<long long>>>& products,
                                      std::string name = "") {
  FiniteRing r;
  r.additive = AbelianGroup(std::move(orders));
  r.name = std::move(name);
  const std::size_t k = r.rank();
  if (products.size() != k)
    throw Error("structure table has " + std::to_string(products.size()) + " rows, expected " +
                std::to_string(k));
  r.basis_product.assign(k, std::vector<Elem>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    if (products[i].size() != k)
      throw Error("structure table row " + std::to_string(i) + " has " +
                  std::to_string(products[i].size()) + " entries, expected " + std::to_string(k));
    for (std::size_t j = 0; j < k; ++j)
      r.basis_product[i][j] = r.additive.element(products[i][j]);
  }

  // well-definedness of the bilinear extension
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const long long need = std::gcd(r.additive.cyclic_orders[i], r.additive.cyclic_orders[j]);
      if (need % r.additive.element_order(r.basis_product[i][j]) != 0)
        throw WellDefinednessViolation(
            "order of e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = " +
            element_str(r, r.basis_product[i][j]) + " does not divide gcd(d_" +
            std::to_string(i + 1) + ", d_" + std::to_string(j + 1) + ") = " + std::to_string(need));
    }

  // associativity on basis triples extends bilinearly to the whole ring
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        const Elem lhs = r.mul_fold(r.basis_product[i][j], r.additive.generator(l));
        const Elem rhs = r.mul_fold(r.additive.generator(i), r.basis_product[j][l]);
        if (lhs != rhs)
          throw AssociativityViolation("(e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) +
                                       ") e" + std::to_string(l + 1) + " = " + element_str(r, lhs) +
                                       " but e" + std::to_string(i + 1) + " (e" +
                                       std::to_string(j + 1) + " e" + std::to_string(l + 1) +
                                       ") = " + element_str(r, rhs));
      }

  if (r.order() <= kRingTableLimit) {
    const long long n = r.order();
    r.add_table.resize(static_cast<std::size_t>(n * n));
    r.mul_table.resize(static_cast<std::size_t>(n * n));
    r.neg_table.resize(static_cast<std::size_t>(n));
    for (Elem a = 0; a < n; ++a) {
      r.neg_table[static_cast<std::size_t>(a)] = r.additive.neg(a);
      for (Elem b = 0; b < n; ++b) {
        r.add_table[static_cast<std::size_t>(a * n + b)] = r.additive.add(a, b);
        r.mul_table[static_cast<std::size_t>(a * n + b)] = r.mul_fold(a, b);
      }
    }
  }
  return r;
}

inline long long smallest_prime_divisor(long long n) {
  if (n < 2) throw Error("smallest_prime_divisor: argument must be >= 2");
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

inline bool is_prime(long long n) { return n >= 2 && smallest_prime_divisor(n) == n; }

// --------------------------------------------------------------------------
// Builtin families

/// The cyclic ring Z_n with its usual multiplication. zn(1) is the trivial
/// ring.
inline FiniteRing zn(long long n) {
  if (n < 1) throw Error("zn: order must be >= 1, got " + std::to_string(n));
  if (n == 1) return ring_from_structure({}, {}, "zn(1)");
  return ring_from_structure({n}, {{{1}}}, "zn(" + std::to_string(n) + ")");
}

/// Every product is zero. Always commutative and associative.
inline FiniteRing zero_ring(const std::vector<long long>& orders) {
  const std::size_t k = orders.size();
  std::vector<std::vector<std::vector<long long>>> products(
      k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  std::string label = "zero_ring(";
  for (std::size_t i = 0; i < k; ++i) label += (i ? "," : "") + std::to_string(orders[i]);
  label += ")";
  return ring_from_structure(orders, products, label);
}

/// Full n x n matrices over Z_m; basis is the matrix units E_ab in row-major
/// order, with E_ab E_cd = [b == c] E_ad.
inline FiniteRing mat_full(long long n, long long m) {
  if (n < 1 || m < 2) throw Error("mat_full: need n >= 1 and m >= 2");
  const std::size_t k = static_cast<std::size_t>(n * n);
  std::vector<long long> orders(k, m);
  std::vector<std::vector<std::vector<long long>>> products(
      k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      for (long long c = 0; c < n; ++c)
        for (long long d = 0; d < n; ++d)
          if (b == c)
            products[static_cast<std::size_t>(a * n + b)][static_cast<std::size_t>(c * n + d)]
                    [static_cast<std::size_t>(a * n + d)] = 1;
  return ring_from_structure(orders, products,
                             "mat_full(" + std::to_string(n) + "," + std::to_string(m) + ")");
}

/// Upper-triangular 2x2 matrices over Z_p, order p^3. Basis e1 = E11,
/// e2 = E12, e3 = E22. Carries the scalar matrices a*I as the named
/// subring "scalars".
inline FiniteRing mat_upper_tri(long long p) {
  if (!is_prime(p)) throw Error("mat_upper_tri: parameter must be prime, got " + std::to_string(p));
  FiniteRing r = ring_from_structure(
      {p, p, p},
      {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
       {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}},
       {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}},
      "mat_upper_tri(" + std::to_string(p) + ")");
  r.named_subrings.emplace_back("scalars", std::vector<Elem>{r.element({1, 0, 1})});
  return r;
}

/// Matrices {[x y; 0 0]} over Z_p, order p^2. Basis e1 = E11, e2 = E12.
/// Carries {[a a; 0 0]} as the named subring "equal_row".
inline FiniteRing mat_row(long long p) {
  if (!is_prime(p)) throw Error("mat_row: parameter must be prime, got " + std::to_string(p));
  FiniteRing r = ring_from_structure({p, p}, {{{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}},
                                     "mat_row(" + std::to_string(p) + ")");
  r.named_subrings.emplace_back("equal_row", std::vector<Elem>{r.element({1, 1})});
  return r;
}

/// The ambient ring of the scalar-subring pair: the upper-triangular ring
/// with "scalars" marked as the distinguished subring.
inline FiniteRing mat_scalar_subring_ambient(long long p) {
  FiniteRing r = mat_upper_tri(p);
  r.name = "mat_scalar_subring_ambient(" + std::to_string(p) + ")";
  return r;
}

/// Direct sum: componentwise operations, cross products zero.
inline FiniteRing direct_sum(const FiniteRing& a, const FiniteRing& b) {
  std::vector<long long> orders = a.additive.cyclic_orders;
  orders.insert(orders.end(), b.additive.cyclic_orders.begin(), b.additive.cyclic_orders.end());
  const std::size_t ka = a.rank(), kb = b.rank(), k = ka + kb;
  std::vector<std::vector<std::vector<long long>>> products(
      k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j) {
      const auto c = a.additive.coords(a.basis_product[i][j]);
      for (std::size_t l = 0; l < ka; ++l) products[i][j][l] = c[l];
    }
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < kb; ++j) {
      const auto c = b.additive.coords(b.basis_product[i][j]);
      for (std::size_t l = 0; l < kb; ++l) products[ka + i][ka + j][ka + l] = c[l];
    }
  return ring_from_structure(orders, products, "direct_sum(" + a.name + "," + b.name + ")");
}

/// Numeric-parameter builtin constructor; direct sums are composite and go
/// through the ring-spec expression syntax instead.
inline FiniteRing builtin(const std::string& name, const std::vector<long long>& params) {
  const auto want = [&](std::size_t n, const char* sig) {
    if (params.size() != n) throw Error("builtin " + name + " expects " + sig);
  };
  if (name == "zn") {
    want(1, "one parameter: zn(n)");
    return zn(params[0]);
  }
  if (name == "zero_ring") return zero_ring(params);
  if (name == "mat_full") {
    want(2, "two parameters: mat_full(n,m)");
    return mat_full(params[0], params[1]);
  }
  if (name == "mat_upper_tri") {
    want(1, "one parameter: mat_upper_tri(p)");
    return mat_upper_tri(params[0]);
  }
  if (name == "mat_row") {
    want(1, "one parameter: mat_row(p)");
    return mat_row(params[0]);
  }
  if (name == "mat_scalar_subring_ambient") {
    want(1, "one parameter: mat_scalar_subring_ambient(p)");
    return mat_scalar_subring_ambient(params[0]);
  }
  if (name == "direct_sum")
    throw Error("direct_sum takes ring expressions, e.g. direct_sum(mat_row(2),zn(3))");
  throw Error("unknown builtin ring family: " + name);
}

// --------------------------------------------------------------------------
// Subrings

struct Subring {
  const FiniteRing* parent{nullptr};
  std::vector<Elem> elements;  // sorted ascending; always contains 0
  std::vector<Elem> generators;

  long long size() const { return static_cast<long long>(elements.size()); }

  bool contains(Elem a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
  }

  const FiniteRing& ring() const { return *parent; }

  Subgroup additive_subgroup() const { return subgroup_from_elements(parent->additive, elements); }
};

inline void require_same_ring(const Subring& s, const FiniteRing& r, const char* who) {
  if (s.parent != &r) throw MismatchError(std::string(who) + ": subring of a different ring");
}

inline void require_same_ring(const Subring& a, const Subring& b, const char* who) {
  if (a.parent != b.parent) throw MismatchError(std::string(who) + ": subrings of different rings");
}

inline bool is_closed_add(const FiniteRing& r, const std::vector<Elem>& set) {
  for (Elem a : set)
    for (Elem b : set)
      if (!std::binary_search(set.begin(), set.end(), r.add(a, b))) return false;
  return true;
}

inline bool is_closed_mul(const FiniteRing& r, const std::vector<Elem>& set) {
  for (Elem a : set)
    for (Elem b : set)
      if (!std::binary_search(set.begin(), set.end(), r.mul(a, b))) return false;
  return true;
}

/// Subring test on a plain element set: contains 0, closed under +, - and *.
inline bool is_subring(const FiniteRing& r, std::vector<Elem> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (Elem a : set) r.additive.check_element(a);
  if (set.empty() || set[0] != 0) return false;
  for (Elem a : set)
    if (!std::binary_search(set.begin(), set.end(), r.neg(a))) return false;
  return is_closed_add(r, set) && is_closed_mul(r, set);
}

/// Two-sided ideal test: additive subgroup with rN and Nr inside N for all
/// r in R (multiplicative closure then comes for free).
inline bool is_ideal(const FiniteRing& r, std::vector<Elem> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (Elem a : set) r.additive.check_element(a);
  if (set.empty() || set[0] != 0) return false;
  if (!is_closed_add(r, set)) return false;
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem a : set)
      if (!std::binary_search(set.begin(), set.end(), r.mul(x, a)) ||
          !std::binary_search(set.begin(), set.end(), r.mul(a, x)))
        return false;
  return true;
}

/// Smallest subring containing gens: alternate additive closure with
/// product augmentation until stable.
inline Subring subring_closure(const FiniteRing& r, std::vector<Elem> gens) {
  for (Elem x : gens) r.additive.check_element(x);
  std::vector<Elem> current = subgroup_generated(r.additive, gens).elements;
  for (;;) {
    std::vector<Elem> extra;
    for (Elem a : current)
      for (Elem b : current) {
        const Elem p = r.mul(a, b);
        if (!std::binary_search(current.begin(), current.end(), p)) extra.push_back(p);
      }
    if (extra.empty()) break;
    std::vector<Elem> next_gens = current;
    next_gens.insert(next_gens.end(), extra.begin(), extra.end());
    current = subgroup_generated(r.additive, next_gens).elements;
  }
  return Subring{&r, std::move(current), std::move(gens)};
}

/// Wraps an element set after verifying it is a subring.
inline Subring subring_from_elements(const FiniteRing& r, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_subring(r, elems)) throw ClosureViolation("element set is not a subring");
  return Subring{&r, elems, elems};
}

inline Subring zero_subring(const FiniteRing& r) { return Subring{&r, {0}, {}}; }

inline Subring full_subring(const FiniteRing& r) {
  if (r.order() > kEnumLimit) throw CapExceeded("full_subring: ring too large");
  std::vector<Elem> all(static_cast<std::size_t>(r.order()));
  std::iota(all.begin(), all.end(), 0);
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.additive.generator(i));
  return Subring{&r, std::move(all), std::move(gens)};
}

/// Looks up a builtin-attached named subring, plus the universal names
/// "zero" and "full".
inline Subring named_subring(const FiniteRing& r, const std::string& name) {
  if (name == "zero") return zero_subring(r);
  if (name == "full") return full_subring(r);
  for (const auto& [label, gens] : r.named_subrings)
    if (label == name) return subring_closure(r, gens);
  throw Error("ring " + r.name + " has no subring named '" + name + "'");
}

// --------------------------------------------------------------------------
// Centralizers, centers, commutators

/// C_S(r) = {s in S : sr = rs}, returned as a subring of S's parent.
inline Subring centralizer(const Subring& s, Elem r) {
  const FiniteRing& R = s.ring();
  R.additive.check_element(r);
  std::vector<Elem> els;
  for (Elem x : s.elements)
    if (R.commute(x, r)) els.push_back(x);
  Subring c{&R, els, els};
  if (!is_closed_mul(R, c.elements) || !is_closed_add(R, c.elements))
    throw InternalMismatch("centralizer is not closed; ring validation is broken");
  return c;
}

/// Z(R): elements commuting with everything.
inline Subring center(const FiniteRing& r) {
  if (r.order() > kEnumLimit) throw CapExceeded("center: ring too large");
  std::vector<Elem> els;
  for (Elem x = 0; x < r.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < r.order() && central; ++y) central = r.commute(x, y);
    if (central) els.push_back(x);
  }
  return Subring{&r, els, els};
}

/// Z(S,R) = {s in S : sr = rs for all r in R}; computed directly and
/// cross-checked against Z(R) intersect S.
inline Subring relative_center(const Subring& s) {
  const FiniteRing& R = s.ring();
  std::vector<Elem> direct;
  for (Elem x : s.elements) {
    bool central = true;
    for (Elem y = 0; y < R.order() && central; ++y) central = R.commute(x, y);
    if (central) direct.push_back(x);
  }
  const Subring z = center(R);
  std::vector<Elem> via_center;
  std::set_intersection(z.elements.begin(), z.elements.end(), s.elements.begin(),
                        s.elements.end(), std::back_inserter(via_center));
  if (direct != via_center)
    throw InternalMismatch("Z(S,R) computed two ways disagrees");
  return Subring{&R, std::move(direct), {}};
}

/// K(S,R): the set of commutators [s, r], not necessarily a subgroup.
inline std::vector<Elem> commutator_set(const Subring& s) {
  const FiniteRing& R = s.ring();
  std::vector<Elem> out;
  for (Elem a : s.elements)
    for (Elem b = 0; b < R.order(); ++b) out.push_back(R.bracket(a, b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// [S,R]: the additive subgroup generated by K(S,R).
inline Subgroup commutator_subgroup(const Subring& s) {
  return subgroup_generated(s.ring().additive, commutator_set(s));
}

/// [x,R] = {[x,y] : y in R}. Closure under addition follows from
/// [x,y] + [x,z] = [x,y+z]; it is verified here, and a failure would mean an
/// implementation bug rather than bad input.
inline Subgroup element_commutator_subgroup(const FiniteRing& r, Elem x) {
  r.additive.check_element(x);
  std::vector<Elem> out;
  for (Elem y = 0; y < r.order(); ++y) out.push_back(r.bracket(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  try {
    return subgroup_from_elements(r.additive, out);
  } catch (const ClosureViolation&) {
    throw ClosureViolation("[x,R] not closed under addition for x = " + element_str(r, x) +
                           "; this is a bug");
  }
}

/// {a + b : a in A, b in B}.
inline std::vector<Elem> sum_set(const FiniteRing& r, const std::vector<Elem>& a,
                                 const std::vector<Elem>& b) {
  std::vector<Elem> out;
  out.reserve(a.size() * b.size());
  for (Elem x : a)
    for (Elem y : b) out.push_back(r.add(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --------------------------------------------------------------------------
// Quotient rings

struct QuotientRing {
  FiniteRing ring;
  std::vector<Elem> coset_reps;   // quotient element id -> a representative in the parent
  std::vector<Elem> to_quotient;  // parent element id -> quotient element id
};

/// R/N for a two-sided ideal N. The coset group is decomposed into cyclic
/// factors to obtain coordinates, and the induced multiplication is
/// re-validated through ring_from_structure.
inline QuotientRing quotient_ring(const FiniteRing& r, const Subring& n) {
  require_same_ring(n, r, "quotient_ring");
  if (!is_ideal(r, n.elements))
    throw NotAnIdeal("quotient_ring: subset is not a two-sided ideal of " + r.name);

  std::vector<Elem> coset_of(static_cast<std::size_t>(r.order()), -1);
  std::vector<Elem> rep;
  for (Elem a = 0; a < r.order(); ++a) {
    if (coset_of[static_cast<std::size_t>(a)] != -1) continue;
    const Elem id = static_cast<Elem>(rep.size());
    rep.push_back(a);
    for (Elem x : n.elements) coset_of[static_cast<std::size_t>(r.add(a, x))] = id;
  }
  const long long q = static_cast<long long>(rep.size());

  const Decomposition dec = decompose_concrete(q, [&](Elem i, Elem j) {
    return coset_of[static_cast<std::size_t>(
        r.add(rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)]))];
  });

  const std::size_t k = dec.factors.size();
  std::vector<std::vector<std::vector<long long>>> products(
      k, std::vector<std::vector<long long>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem pi = rep[static_cast<std::size_t>(dec.basis[i])];
      const Elem pj = rep[static_cast<std::size_t>(dec.basis[j])];
      const Elem prod_coset = coset_of[static_cast<std::size_t>(r.mul(pi, pj))];
      products[i][j] =
          dec.group.coords(dec.to_abstract[static_cast<std::size_t>(prod_coset)]);
    }

  QuotientRing out;
  out.ring = ring_from_structure(dec.factors, products, r.name + "/(" + std::to_string(n.size()) +
                                                            " elts)");
  out.coset_reps.resize(static_cast<std::size_t>(q));
  for (Elem abs_id = 0; abs_id < q; ++abs_id)
    out.coset_reps[static_cast<std::size_t>(abs_id)] =
        rep[static_cast<std::size_t>(dec.from_abstract[static_cast<std::size_t>(abs_id)])];
  out.to_quotient.resize(static_cast<std::size_t>(r.order()));
  for (Elem a = 0; a < r.order(); ++a)
    out.to_quotient[static_cast<std::size_t>(a)] =
        dec.to_abstract[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(a)])];
  return out;
}

// --------------------------------------------------------------------------
// Enumeration

/// Every subring of r exactly once: additive subgroups filtered by
/// multiplicative closure, in (order, elements) order.
inline std::vector<Subring> enumerate_subrings(const FiniteRing& r,
                                               long long cap = kDefaultRingCap) {
  if (r.order() > cap)
    throw CapExceeded("enumerate_subrings: order " + std::to_string(r.order()) +
                      " exceeds cap " + std::to_string(cap));
  std::vector<Subring> out;
  for (Subgroup& h : all_subgroups(r.additive, cap))
    if (is_closed_mul(r, h.elements))
      out.push_back(Subring{&r, std::move(h.elements), std::move(h.generators)});
  return out;
}

/// Every two-sided ideal, in (order, elements) order.
inline std::vector<Subring> enumerate_ideals(const FiniteRing& r,
                                             long long cap = kDefaultRingCap) {
  if (r.order() > cap)
    throw CapExceeded("enumerate_ideals: order " + std::to_string(r.order()) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<Subring> out;
  for (Subgroup& h : all_subgroups(r.additive, cap))
    if (is_ideal(r, h.elements))
      out.push_back(Subring{&r, std::move(h.elements), std::move(h.generators)});
  return out;
}

}  // namespace ringlab
