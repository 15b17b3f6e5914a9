/*
   Copyright 2026 The spechtlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spechtlab/errors.hpp"
#include "spechtlab/rational.hpp"

namespace spechtlab {

namespace detail {

// n = square * squarefree_part, by trial division. Inputs stay tiny here
// (squared axial distances), so nothing smarter is needed.
inline std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t n) {
  if (n == 0) throw DomainError("split_square: zero");
  std::uint64_t square_root = 1;
  std::uint64_t rest = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    for (int k = 0; k < mult / 2; ++k) square_root *= p;
    if (mult % 2) rest *= p;
  }
  rest *= n;
  return {square_root, rest};
}

inline bool is_squarefree(std::uint64_t n) { return n >= 1 && split_square(n).first == 1; }

}  // namespace detail

// Exact element of Q(sqrt 2, sqrt 3, sqrt 5, ...): a finite sum q_1 + sum_m q_m sqrt(m)
// over squarefree radicands m > 1. The rational part is held separately so
// the common case (no radicals at all) never allocates.
class RadicalRational {
 public:
  using Radicand = std::uint64_t;
  struct Term {
    Radicand radicand;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  RadicalRational() = default;
  RadicalRational(Rational q) : rational_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  RadicalRational(I v) : rational_(v) {}  // NOLINT(google-explicit-constructor)

  // q * sqrt(m) for any m >= 1; square factors are pulled out of m.
  static RadicalRational radical(const Rational& q, std::uint64_t m) {
    auto [s, free] = detail::split_square(m);
    RadicalRational r;
    r.add_term(free, q * Rational(s));
    return r;
  }

  static RadicalRational parse(std::string_view text);

  bool is_zero() const { return rational_.is_zero() && radicals_.empty(); }
  bool is_rational() const { return radicals_.empty(); }
  bool is_one() const { return radicals_.empty() && rational_.is_one(); }
  // Exactly one nonzero term (q sqrt(m)); these are the invertible values.
  bool is_single_term() const {
    return radicals_.empty() ? !rational_.is_zero() : (radicals_.size() == 1 && rational_.is_zero());
  }
  const Rational& rational_part() const { return rational_; }

  // Nonzero terms in ascending radicand order, rational part first.
  std::vector<Term> terms() const {
    std::vector<Term> out;
    out.reserve(radicals_.size() + 1);
    if (!rational_.is_zero()) out.push_back({1, rational_});
    out.insert(out.end(), radicals_.begin(), radicals_.end());
    return out;
  }

  Rational coeff(Radicand m) const {
    if (m == 1) return rational_;
    for (const auto& t : radicals_)
      if (t.radicand == m) return t.coeff;
    return {};
  }

  RadicalRational operator-() const {
    RadicalRational r;
    r.rational_ = -rational_;
    r.radicals_.reserve(radicals_.size());
    for (const auto& t : radicals_) r.radicals_.push_back({t.radicand, -t.coeff});
    return r;
  }

  RadicalRational& operator+=(const RadicalRational& o) {
    rational_ += o.rational_;
    for (const auto& t : o.radicals_) add_term(t.radicand, t.coeff);
    return *this;
  }
  RadicalRational& operator-=(const RadicalRational& o) { return *this += -o; }

  friend RadicalRational operator+(RadicalRational a, const RadicalRational& b) { return a += b; }
  friend RadicalRational operator-(RadicalRational a, const RadicalRational& b) { return a -= b; }

  friend RadicalRational operator*(const RadicalRational& a, const RadicalRational& b) {
    if (a.radicals_.empty() && b.radicals_.empty()) return RadicalRational(a.rational_ * b.rational_);
    RadicalRational r;
    const auto ta = a.terms();
    const auto tb = b.terms();
    for (const auto& x : ta) {
      for (const auto& y : tb) {
        // sqrt(a) sqrt(b) = g sqrt(ab/g^2); ab/g^2 is squarefree when a, b are.
        const std::uint64_t g = std::gcd(x.radicand, y.radicand);
        const std::uint64_t m = (x.radicand / g) * (y.radicand / g);
        r.add_term(m, x.coeff * y.coeff * Rational(g));
      }
    }
    return r;
  }
  RadicalRational& operator*=(const RadicalRational& o) { return *this = *this * o; }

  // Only single-term values are invertible here: (q sqrt m)^-1 = (1/(q m)) sqrt m.
  RadicalRational inverse() const {
    if (!is_single_term())
      throw DomainError("RadicalRational: only single-term values can be inverted, got " + str());
    if (radicals_.empty()) return RadicalRational(rational_.inverse());
    const auto& t = radicals_.front();
    RadicalRational r;
    r.add_term(t.radicand, (t.coeff * Rational(t.radicand)).inverse());
    return r;
  }

  friend RadicalRational operator/(const RadicalRational& a, const RadicalRational& b) {
    if (b.is_rational()) {
      if (b.rational_.is_zero()) throw DomainError("RadicalRational: division by zero");
      return a * RadicalRational(b.rational_.inverse());
    }
    return a * b.inverse();
  }

  friend bool operator==(const RadicalRational& a, const RadicalRational& b) {
    return a.rational_ == b.rational_ && a.radicals_ == b.radicals_;
  }

  std::size_t hash() const {
    std::size_t h = rational_.hash();
    for (const auto& t : radicals_) h = h * 31 + (t.radicand * 0x9e3779b97f4a7c15ULL ^ t.coeff.hash());
    return h;
  }

  // "q1 + q3*sqrt(3) - sqrt(5)"; zero renders as "0".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms()) {
      std::string piece;
      const bool neg = t.coeff.sign() < 0;
      const Rational mag = neg ? -t.coeff : t.coeff;
      if (t.radicand == 1) {
        piece = mag.str();
      } else {
        piece = mag.is_one() ? "" : mag.str() + "*";
        piece += "sqrt(" + std::to_string(t.radicand) + ")";
      }
      if (first) {
        out = neg ? "-" + piece : piece;
      } else {
        out += neg ? " - " : " + ";
        out += piece;
      }
      first = false;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const RadicalRational& r) { return os << r.str(); }

 private:
  void add_term(Radicand m, const Rational& q) {
    if (q.is_zero()) return;
    if (m == 1) {
      rational_ += q;
      return;
    }
    auto it = std::lower_bound(radicals_.begin(), radicals_.end(), m,
                               [](const Term& t, Radicand key) { return t.radicand < key; });
    if (it != radicals_.end() && it->radicand == m) {
      it->coeff += q;
      if (it->coeff.is_zero()) radicals_.erase(it);
    } else {
      radicals_.insert(it, Term{m, q});
    }
  }

  Rational rational_;
  std::vector<Term> radicals_;  // radicand > 1, ascending, nonzero coeffs
};

// r with r*r = q for q > 0: sqrt(a/b) = sqrt(a*b)/b, then the square part of
// a*b is pulled out by trial division.
inline RadicalRational sqrt_of_positive_rational(const Rational& q) {
  if (q.sign() <= 0) throw DomainError("sqrt_of_positive_rational: non-positive input " + q.str());
  const mpz_class num = q.numerator();
  const mpz_class den = q.denominator();
  const mpz_class prod = num * den;
  if (!prod.fits_ulong_p()) throw DomainError("sqrt_of_positive_rational: input too large for trial division");
  return RadicalRational::radical(Rational(mpz_class(1), den), prod.get_ui());
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

// Inverse of str(): a sum of terms "q", "q*sqrt(m)", "sqrt(m)" joined by + / -.
inline RadicalRational RadicalRational::parse(std::string_view text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw UsageError("empty radical expression");
  RadicalRational out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw UsageError("bad radical expression: " + s);
    }
    while (pos < s.size() && s[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && !((s[end] == '+' || s[end] == '-') && end > pos)) ++end;
    const std::string tok = s.substr(pos, end - pos);
    pos = end;
    first = false;
    Rational coeff = 1;
    std::uint64_t m = 1;
    const auto sq = tok.find("sqrt(");
    if (sq != std::string::npos) {
      if (tok.back() != ')') throw UsageError("bad radical term: " + tok);
      if (sq > 0) {
        if (tok[sq - 1] != '*') throw UsageError("bad radical term: " + tok);
        coeff = Rational::parse(tok.substr(0, sq - 1));
      }
      const std::string inner = tok.substr(sq + 5, tok.size() - sq - 6);
      try {
        const long long v = std::stoll(inner);
        if (v < 1) throw UsageError("bad radicand: " + inner);
        m = static_cast<std::uint64_t>(v);
      } catch (const std::logic_error&) {
        throw UsageError("bad radicand: " + inner);
      }
    } else {
      coeff = Rational::parse(tok);
    }
    out += RadicalRational::radical(sign < 0 ? -coeff : coeff, m);
  }
  return out;
}

}  // namespace spechtlab

template <>
struct std::hash<spechtlab::RadicalRational> {
  std::size_t operator()(const spechtlab::RadicalRational& r) const { return r.hash(); }
};
