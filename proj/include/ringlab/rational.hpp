#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "ringlab/errors.hpp"

namespace ringlab {

/// Exact rational arithmetic. Every probability, bound and comparison in
/// this library is an exact identity of rationals; nothing here ever
/// touches floating point.
struct Rational {
  long long num{0};
  long long den{1};  // always > 0, gcd(|num|, den) == 1

  constexpr Rational() = default;

  Rational(long long n, long long d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : n;
    den = g ? d / g : d;
  }

  Rational(long long n) : num(n), den(1) {}  // NOLINT: integers promote to rationals

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce first so products of corpus-sized values stay far from overflow
    const long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    const long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den <= (__int128)b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  /// Canonical wire form, always "num/den" (e.g. "5/8", "1/1").
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  /// Display form: integers print without the denominator.
  std::string pretty() const {
    return den == 1 ? std::to_string(num) : str();
  }

  static std::optional<Rational> parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
};

/// Probabilities are plain rationals constrained to [0,1] at their
/// construction sites.
using Probability = Rational;

}  // namespace ringlab
