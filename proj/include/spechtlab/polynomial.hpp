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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spechtlab/errors.hpp"
#include "spechtlab/permutation.hpp"
#include "spechtlab/radical.hpp"

namespace spechtlab {

enum class VarFamily : std::uint8_t { x, y };

inline char family_letter(VarFamily f) { return f == VarFamily::x ? 'x' : 'y'; }

// Exponent vector over at most kMaxDegree variables, one byte per exponent.
// Variable 1 occupies the most significant byte, so comparing packed words
// is lexicographic comparison of exponent vectors.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents) : n_(static_cast<std::uint8_t>(exponents.size())) {
    if (exponents.size() > static_cast<std::size_t>(kMaxDegree)) throw UsageError("too many variables");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0 || exponents[i] > 255) throw UsageError("exponent out of range");
      packed_ |= static_cast<std::uint64_t>(exponents[i]) << shift(static_cast<int>(i) + 1);
    }
  }

  static Monomial one(int n) {
    Monomial m;
    m.n_ = static_cast<std::uint8_t>(n);
    return m;
  }

  int size() const { return n_; }
  int exponent(int var) const { return static_cast<int>((packed_ >> shift(var)) & 0xff); }
  std::vector<int> exponents() const {
    std::vector<int> e(n_);
    for (int i = 1; i <= n_; ++i) e[static_cast<std::size_t>(i - 1)] = exponent(i);
    return e;
  }
  int degree() const {
    int d = 0;
    for (int i = 1; i <= n_; ++i) d += exponent(i);
    return d;
  }
  std::uint64_t packed() const { return packed_; }
  bool is_one() const { return packed_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 1; i <= a.n_; ++i) {
      const int e = a.exponent(i) + b.exponent(i);
      if (e > 255) throw UsageError("exponent overflow");
    }
    r.packed_ = a.packed_ + b.packed_;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 1; i <= n_; ++i)
      if (exponent(i) > o.exponent(i)) return false;
    return true;
  }
  // Precondition: divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r = o;
    r.packed_ = o.packed_ - packed_;
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.n_);
    for (int i = 1; i <= a.n_; ++i) e[static_cast<std::size_t>(i - 1)] = std::min(a.exponent(i), b.exponent(i));
    return Monomial(e);
  }

  // x_i -> x_{sigma(i)}: the exponent of variable i moves to sigma(i).
  Monomial permuted(const Permutation& sigma) const {
    Monomial r;
    r.n_ = n_;
    for (int i = 1; i <= n_; ++i)
      r.packed_ |= static_cast<std::uint64_t>(exponent(i)) << shift(sigma(i));
    return r;
  }

  std::string str(VarFamily f) const {
    std::string s;
    for (int i = 1; i <= n_; ++i) {
      const int e = exponent(i);
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += family_letter(f) + std::to_string(i);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.packed_ <=> b.packed_; }

 private:
  static int shift(int var) { return 8 * (kMaxDegree - var); }

  std::uint64_t packed_ = 0;
  std::uint8_t n_ = 0;
};

// Sparse polynomial in x_1..x_n (or y_1..y_n) over RadicalRational. Terms are
// kept in descending lexicographic monomial order with no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    RadicalRational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(VarFamily family, int n) : family_(family), n_(static_cast<std::uint8_t>(n)) {
    if (n < 0 || n > kMaxDegree) throw UsageError("variable count out of range");
  }

  static Polynomial constant(const RadicalRational& c, VarFamily family, int n) {
    Polynomial p(family, n);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(n), c});
    return p;
  }
  static Polynomial variable(int i, VarFamily family, int n) {
    if (i < 1 || i > n) throw UsageError("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    Polynomial p(family, n);
    p.terms_.push_back({Monomial(e), RadicalRational(1)});
    return p;
  }
  static Polynomial monomial(const Monomial& m, const RadicalRational& c, VarFamily family) {
    Polynomial p(family, m.size());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  // Any order, duplicates allowed; zero sums are dropped.
  static Polynomial from_terms(std::vector<Term> terms, VarFamily family, int n) {
    Polynomial p(family, n);
    for (const auto& t : terms)
      if (t.mono.size() != n) throw UsageError("monomial arity mismatch");
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  static Polynomial parse(std::string_view text, VarFamily family, int n);

  VarFamily family() const { return family_; }
  int arity() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  RadicalRational constant_value() const {
    if (!is_constant()) throw UsageError("polynomial is not constant: " + str());
    return terms_.empty() ? RadicalRational() : terms_[0].coeff;
  }
  RadicalRational coeff(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return {};
  }
  // Highest monomial in lex order.
  const Term& leading_term() const {
    if (terms_.empty()) throw UsageError("leading term of zero polynomial");
    return terms_.front();
  }
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  // True iff every term has total degree d.
  bool is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.add_scaled(b, RadicalRational(1)); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.add_scaled(b, RadicalRational(-1)); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  // this + c * o, merged in one pass.
  Polynomial add_scaled(const Polynomial& o, const RadicalRational& c) const {
    check_compatible(o);
    if (c.is_zero() || o.is_zero()) return *this;
    Polynomial r(family_, n_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    const bool unit = c.is_one();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
        r.terms_.push_back(*i++);
      } else if (i == terms_.end() || j->mono > i->mono) {
        r.terms_.push_back({j->mono, unit ? j->coeff : j->coeff * c});
        ++j;
      } else {
        RadicalRational s = i->coeff + (unit ? j->coeff : j->coeff * c);
        if (!s.is_zero()) r.terms_.push_back({i->mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend Polynomial operator*(const Polynomial& p, const RadicalRational& c) {
    if (c.is_zero()) return Polynomial(p.family_, p.n_);
    Polynomial r = p;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  friend Polynomial operator*(const RadicalRational& c, const Polynomial& p) { return p * c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.family_, a.n_);
    if (a.is_zero() || b.is_zero()) return r;
    if (b.is_constant()) return a * b.terms_[0].coeff;
    if (a.is_constant()) return b * a.terms_[0].coeff;
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
    r.terms_ = std::move(prod);
    r.canonicalize();
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int e) const {
    Polynomial r = constant(RadicalRational(1), family_, n_);
    for (int k = 0; k < e; ++k) r *= *this;
    return r;
  }

  // Variables relabelled x_i -> x_{sigma(i)}.
  Polynomial permuted(const Permutation& sigma) const {
    if (sigma.size() != n_) throw UsageError("permutation size does not match variable count");
    Polynomial r(family_, n_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono.permuted(sigma), t.coeff});
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    return r;
  }

  RadicalRational evaluate(std::span<const Rational> values) const {
    if (values.size() != n_) throw UsageError("evaluation point has wrong length");
    RadicalRational acc;
    for (const auto& t : terms_) {
      Rational v = 1;
      for (int i = 1; i <= n_ && !v.is_zero(); ++i)
        for (int k = 0; k < t.mono.exponent(i); ++k) v *= values[static_cast<std::size_t>(i - 1)];
      if (!v.is_zero()) acc += t.coeff * RadicalRational(v);
    }
    return acc;
  }

  // Degree-0 polynomial of the same family and arity.
  Polynomial substitute(std::span<const Rational> values) const {
    if (family_ != VarFamily::x) throw UsageError("substitute expects an x-polynomial");
    return constant(evaluate(values), family_, n_);
  }

  // Exact quotient p / q when q divides p, else nullopt. Lex long division;
  // the leading coefficient of q must be invertible (single term).
  std::optional<Polynomial> divide_exact(const Polynomial& q) const {
    check_compatible(q);
    if (q.is_zero()) throw DomainError("division by zero polynomial");
    const Term& lead = q.leading_term();
    const RadicalRational lead_inv = lead.coeff.inverse();
    Polynomial rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
      const Term& t = rem.leading_term();
      if (!lead.mono.divides(t.mono)) return std::nullopt;
      Term step{lead.mono.quotient_of(t.mono), t.coeff * lead_inv};
      rem = rem.add_scaled(q * monomial(step.mono, RadicalRational(1), family_), -step.coeff);
      quot.push_back(std::move(step));
    }
    return from_terms(std::move(quot), family_, n_);
  }

  // Greatest monomial dividing every term (one() for zero).
  Monomial monomial_content() const {
    if (terms_.empty()) return Monomial::one(n_);
    Monomial g = terms_[0].mono;
    for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
    return g;
  }
  Polynomial divided_by_monomial(const Monomial& m) const {
    Polynomial r(family_, n_);
    for (const auto& t : terms_) {
      if (!m.divides(t.mono)) throw UsageError("monomial does not divide polynomial");
      r.terms_.push_back({m.quotient_of(t.mono), t.coeff});
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.family_ == b.family_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_) * 131 + static_cast<std::size_t>(family_);
    for (const auto& t : terms_) h = (h * 1000003u) ^ (t.mono.packed() * 0x9e3779b97f4a7c15ULL) ^ t.coeff.hash();
    return h;
  }

  // "x1^2 - 2*x1*x2 + x2^2"; multi-term coefficients are parenthesised.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c;
      bool neg = false;
      if (t.coeff.is_single_term()) {
        const auto term = t.coeff.terms().front();
        neg = term.coeff.sign() < 0;
        c = (neg ? -t.coeff : t.coeff).str();
      } else {
        c = "(" + t.coeff.str() + ")";
      }
      std::string piece;
      if (t.mono.is_one()) {
        piece = c;
      } else if (c == "1") {
        piece = t.mono.str(family_);
      } else {
        piece = c + "*" + t.mono.str(family_);
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

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void check_compatible(const Polynomial& o) const {
    if (family_ != o.family_ || n_ != o.n_) throw UsageError("polynomial family/arity mismatch");
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono) {
        merged.back().coeff += t.coeff;
      } else {
        if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
    terms_ = std::move(merged);
  }

  VarFamily family_ = VarFamily::x;
  std::uint8_t n_ = 0;
  std::vector<Term> terms_;
};

namespace detail {

// Splits at top-level " + " / " - " separators (outside parentheses); the
// sign is kept with the following piece.
inline std::vector<std::pair<int, std::string>> split_signed_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0;
  int sign = 1;
  std::size_t start = 0;
  std::size_t i = 0;
  if (!s.empty() && s[0] == '-') {
    sign = -1;
    start = i = 1;
  }
  for (; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && i + 2 < s.size() && ch == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
      out.emplace_back(sign, trim(s.substr(start, i - start)));
      sign = s[i + 1] == '-' ? -1 : 1;
      start = i + 3;
      i += 2;
    }
  }
  out.emplace_back(sign, trim(s.substr(start)));
  return out;
}

}  // namespace detail

// Inverse of str() for the given family and arity.
inline Polynomial Polynomial::parse(std::string_view text, VarFamily family, int n) {
  const std::string s = detail::trim(text);
  if (s == "0") return Polynomial(family, n);
  std::vector<Term> terms;
  for (const auto& [sign, piece] : detail::split_signed_terms(s)) {
    if (piece.empty()) throw UsageError("bad polynomial: " + s);
    RadicalRational c(1);
    std::string rest = piece;
    if (rest.front() == '(') {
      std::size_t close = 0;
      for (int depth = 0; close < rest.size(); ++close) {
        if (rest[close] == '(') ++depth;
        if (rest[close] == ')' && --depth == 0) break;
      }
      if (close >= rest.size()) throw UsageError("unbalanced parentheses in polynomial: " + piece);
      c = RadicalRational::parse(rest.substr(1, close - 1));
      rest = close + 1 < rest.size() ? rest.substr(close + 2) : std::string();
    }
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::string coeff_text;
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto star = rest.find('*', pos);
      // Keep "q*sqrt(m)" together as a coefficient.
      if (star != std::string::npos && rest.compare(star + 1, 5, "sqrt(") == 0) star = rest.find('*', star + 1);
      const std::string factor = rest.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      if (!factor.empty() && factor[0] == family_letter(family)) {
        const auto caret = factor.find('^');
        int var = 0;
        int exp = 1;
        try {
          var = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
          if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
        } catch (const std::logic_error&) {
          throw UsageError("bad monomial factor: " + factor);
        }
        if (var < 1 || var > n) throw UsageError("variable out of range: " + factor);
        e[static_cast<std::size_t>(var - 1)] += exp;
      } else {
        if (!coeff_text.empty()) throw UsageError("bad polynomial term: " + piece);
        coeff_text = factor;
      }
      if (star == std::string::npos) break;
      pos = star + 1;
    }
    if (!coeff_text.empty()) c = c * RadicalRational::parse(coeff_text);
    terms.push_back({Monomial(e), sign < 0 ? -c : c});
  }
  return from_terms(std::move(terms), family, n);
}

}  // namespace spechtlab

template <>
struct std::hash<spechtlab::Polynomial> {
  std::size_t operator()(const spechtlab::Polynomial& p) const { return p.hash(); }
};
