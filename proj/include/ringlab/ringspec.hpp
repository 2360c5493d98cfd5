#pragma once

// Line-oriented ring-spec text format, hand-writable fixtures for the CLI:
//
//   # comment
//   name my_ring                      (optional)
//   ring zn 8                         builtin with numeric parameters
//   ring mat_row(2)                   expression form works too
//   ring direct_sum mat_row(2) zn(3)  composite families take expressions
//   ring custom 2,4                   cyclic orders, then a product table:
//   mult 1 1 = 1,0                    e_i * e_j as coordinates (1-based i j;
//                                     missing entries default to zero)
//   subring S gen e1+e2, 2e2          generators are integer combinations of
//   subring T gen 4                   e1..ek; a bare integer n means n*e1
//
// Exactly one ring per document; subring lines follow it.

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

struct RingSpecDocument {
  std::string name;
  std::optional<std::string> builtin_expr;  // set for builtin/expression rings
  bool has_custom_table{false};
  FiniteRing ring;
  std::vector<std::pair<std::string, std::vector<Elem>>> subrings;  // name -> generators

  const std::vector<Elem>* find_subring(const std::string& n) const {
    for (const auto& [label, gens] : subrings)
      if (label == n) return &gens;
    return nullptr;
  }
};

namespace specdetail {

struct ExprCursor {
  const std::string& s;
  std::size_t pos{0};

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error("expected integer in ring expression at '" + s.substr(start) + "'");
    return std::stoll(s.substr(start, pos - start));
  }
};

inline FiniteRing parse_expr(ExprCursor& cur);

inline FiniteRing parse_call(ExprCursor& cur, const std::string& fn) {
  if (!cur.eat('(')) throw Error("expected '(' after '" + fn + "'");
  if (fn == "direct_sum") {
    std::vector<FiniteRing> parts;
    if (cur.peek() != ')') {
      parts.push_back(parse_expr(cur));
      while (cur.eat(',')) parts.push_back(parse_expr(cur));
    }
    if (!cur.eat(')')) throw Error("expected ')' in direct_sum(...)");
    if (parts.size() < 2) throw Error("direct_sum needs at least two components");
    FiniteRing acc = std::move(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
    return acc;
  }
  std::vector<long long> params;
  if (cur.peek() != ')') {
    params.push_back(cur.integer());
    while (cur.eat(',')) params.push_back(cur.integer());
  }
  if (!cur.eat(')')) throw Error("expected ')' in " + fn + "(...)");
  return builtin(fn, params);
}

inline FiniteRing parse_expr(ExprCursor& cur) {
  const std::string fn = cur.ident();
  if (fn.empty()) throw Error("expected a ring family name");
  return parse_call(cur, fn);
}

}  // namespace specdetail

/// Parses an inline ring expression like "zn(8)" or
/// "direct_sum(mat_row(2),zn(3))".
inline FiniteRing parse_ring_expr(const std::string& expr) {
  specdetail::ExprCursor cur{expr};
  FiniteRing r = specdetail::parse_expr(cur);
  if (!cur.done()) throw Error("trailing characters in ring expression: '" +
                               expr.substr(cur.pos) + "'");
  return r;
}

/// Parses a generator expression ("e1+e2", "2e1-e2", "4") into an element of
/// r. A bare integer n denotes n*e1.
inline Elem parse_element_expr(const FiniteRing& r, const std::string& text) {
  std::vector<long long> coords(r.rank(), 0);
  std::size_t i = 0;
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size()) throw Error("empty element expression");
  long long sign = 1;
  bool first = true;
  while (i < text.size()) {
    skip();
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw Error("expected '+' or '-' in element expression '" + text + "'");
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    first = false;
    long long coeff = 1;
    bool saw_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      coeff = std::stoll(text.substr(start, i - start));
      saw_coeff = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw Error("expected basis index after 'e' in '" + text + "'");
      const long long idx = std::stoll(text.substr(start, i - start));
      if (idx < 1 || idx > static_cast<long long>(r.rank()))
        throw Error("basis index e" + std::to_string(idx) + " out of range for rank " +
                    std::to_string(r.rank()));
      coords[static_cast<std::size_t>(idx - 1)] += sign * coeff;
    } else if (saw_coeff) {
      // bare integer term: n means n * e1
      if (r.rank() == 0) {
        if (coeff != 0) throw Error("nonzero element expression in the trivial ring");
      } else {
        coords[0] += sign * coeff;
      }
    } else {
      throw Error("cannot parse element expression '" + text + "'");
    }
    skip();
  }
  return r.element(coords);
}

namespace specdetail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::vector<long long> parse_int_list(const std::string& text, int line) {
  std::vector<long long> out;
  for (const std::string& part : split(text, ',')) {
    const std::string t = trim(part);
    if (t.empty()) throw SpecSyntaxError(line, "empty entry in integer list");
    try {
      out.push_back(std::stoll(t));
    } catch (const std::exception&) {
      throw SpecSyntaxError(line, "expected integer, got '" + t + "'");
    }
  }
  return out;
}

}  // namespace specdetail

inline RingSpecDocument parse_ringspec(const std::string& text) {
  using specdetail::parse_int_list;
  using specdetail::split;
  using specdetail::trim;
  using specdetail::words;

  RingSpecDocument doc;
  bool have_ring_line = false;
  bool ring_built = false;

  // custom-table state, materialized lazily
  std::vector<long long> custom_orders;
  std::vector<std::vector<std::vector<long long>>> custom_products;
  std::string pending_name;

  const auto build_ring = [&](int line) {
    if (ring_built) return;
    if (!have_ring_line) throw SpecSyntaxError(line, "no 'ring' line before this point");
    if (doc.has_custom_table) {
      doc.ring = ring_from_structure(custom_orders, custom_products,
                                     pending_name.empty() ? "custom" : pending_name);
    }
    if (!pending_name.empty()) doc.ring.name = pending_name;
    doc.name = doc.ring.name;
    ring_built = true;
  };

  const std::vector<std::string> lines = split(text, '\n');
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line = static_cast<int>(li) + 1;
    std::string s = lines[li];
    const std::size_t hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;

    const std::vector<std::string> w = words(s);
    const std::string& head = w[0];

    if (head == "name") {
      if (w.size() < 2) throw SpecSyntaxError(line, "name needs a value");
      pending_name = s.substr(s.find("name") + 4);
      pending_name = trim(pending_name);
      if (ring_built) {
        doc.ring.name = pending_name;
        doc.name = pending_name;
      }
    } else if (head == "ring") {
      if (have_ring_line) throw SpecSyntaxError(line, "more than one 'ring' line");
      if (w.size() < 2) throw SpecSyntaxError(line, "ring needs a family");
      have_ring_line = true;
      try {
        if (w[1] == "custom") {
          if (w.size() < 3) throw SpecSyntaxError(line, "ring custom needs cyclic orders");
          custom_orders = parse_int_list(trim(s.substr(s.find("custom") + 6)), line);
          const std::size_t k = custom_orders.size();
          custom_products.assign(
              k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
          doc.has_custom_table = true;
        } else if (w[1].find('(') != std::string::npos) {
          std::string expr;
          for (std::size_t i = 1; i < w.size(); ++i) expr += w[i];
          doc.ring = parse_ring_expr(expr);
          doc.builtin_expr = expr;
        } else if (w[1] == "direct_sum") {
          std::string expr = "direct_sum(";
          for (std::size_t i = 2; i < w.size(); ++i) expr += (i > 2 ? "," : "") + w[i];
          expr += ")";
          doc.ring = parse_ring_expr(expr);
          doc.builtin_expr = expr;
        } else {
          std::vector<long long> params;
          for (std::size_t i = 2; i < w.size(); ++i) {
            const auto part = parse_int_list(w[i], line);
            params.insert(params.end(), part.begin(), part.end());
          }
          doc.ring = builtin(w[1], params);
          std::string expr = w[1] + "(";
          for (std::size_t i = 0; i < params.size(); ++i)
            expr += (i ? "," : "") + std::to_string(params[i]);
          doc.builtin_expr = expr + ")";
        }
      } catch (const SpecSyntaxError&) {
        throw;
      } catch (const Error& e) {
        throw SpecSyntaxError(line, e.what());
      }
    } else if (head == "mult") {
      if (!doc.has_custom_table)
        throw SpecSyntaxError(line, "'mult' is only valid after 'ring custom'");
      if (ring_built) throw SpecSyntaxError(line, "'mult' after the table was finalized");
      // mult i j = c1,...,ck
      const std::size_t eq = s.find('=');
      if (eq == std::string::npos || w.size() < 3)
        throw SpecSyntaxError(line, "expected 'mult i j = c1,...,ck'");
      long long i, j;
      try {
        i = std::stoll(w[1]);
        j = std::stoll(w[2]);
      } catch (const std::exception&) {
        throw SpecSyntaxError(line, "expected basis indices after 'mult'");
      }
      const long long k = static_cast<long long>(custom_orders.size());
      if (i < 1 || i > k || j < 1 || j > k)
        throw SpecSyntaxError(line, "basis index out of range in 'mult'");
      const auto coords = parse_int_list(trim(s.substr(eq + 1)), line);
      if (coords.size() != custom_orders.size())
        throw SpecSyntaxError(line, "product entry needs " +
                                        std::to_string(custom_orders.size()) + " coordinates");
      custom_products[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = coords;
    } else if (head == "subring") {
      if (w.size() < 3 || w[2] != "gen")
        throw SpecSyntaxError(line, "expected 'subring <name> gen <exprs>'");
      try {
        build_ring(line);
      } catch (const SpecSyntaxError&) {
        throw;
      } catch (const Error& e) {
        throw SpecSyntaxError(line, e.what());
      }
      const std::string& sub_name = w[1];
      if (doc.find_subring(sub_name))
        throw SpecSyntaxError(line, "duplicate subring name '" + sub_name + "'");
      std::vector<Elem> gens;
      const std::size_t gen_pos = s.find(" gen");
      const std::string rest = trim(s.substr(gen_pos + 4));
      if (!rest.empty()) {
        for (const std::string& part : split(rest, ',')) {
          const std::string t = trim(part);
          if (t.empty()) throw SpecSyntaxError(line, "empty generator expression");
          try {
            gens.push_back(parse_element_expr(doc.ring, t));
          } catch (const Error& e) {
            throw SpecSyntaxError(line, e.what());
          }
        }
      }
      doc.subrings.emplace_back(sub_name, std::move(gens));
    } else {
      throw SpecSyntaxError(line, "unknown directive '" + head + "'");
    }
  }

  try {
    build_ring(static_cast<int>(lines.size()));
  } catch (const SpecSyntaxError&) {
    throw;
  } catch (const Error& e) {
    throw SpecSyntaxError(static_cast<int>(lines.size()), e.what());
  }
  return doc;
}

}  // namespace ringlab
