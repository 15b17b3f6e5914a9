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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "spechtlab/errors.hpp"

namespace spechtlab {

// Exact rational number, always in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in a signed 64-bit word are kept
// inline and combined through __int128 intermediates; anything larger is
// promoted to a shared, immutable GMP rational. The representation is
// canonical: a value that fits inline is never stored as a GMP rational, so
// equality can compare fields directly.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    set_from_wide(static_cast<__int128>(value), 1);
  }

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    set_from_wide(num, den);
  }

  explicit Rational(const mpz_class& num, const mpz_class& den = 1) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    set_from_mpq(std::move(q));
  }

  explicit Rational(mpq_class q) {
    q.canonicalize();
    set_from_mpq(std::move(q));
  }

  // Accepts "a" or "a/b" with optional leading sign.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den = 1;
      if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
      if (slash != std::string::npos && (s.size() == slash + 1 || s[slash + 1] == '-' || s[slash + 1] == '+'))
        throw UsageError("bad rational: " + s);
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw UsageError("bad rational: '" + s + "'");
    }
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(to_mpz(num_)); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(to_mpz(den_)); }
  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(to_mpz(num_), to_mpz(den_));
  }

  std::string str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational inverse() const {
    if (is_zero()) throw DomainError("Rational: division by zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    return Rational(den_, num_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    Rational r;
    if (a.den_ == b.den_) {
      r.set_from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
      return r;
    }
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
    const __int128 den = static_cast<__int128>(a.den_ / g) * b.den_;
    r.set_from_wide(num, den);
    return r;
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    Rational r;
    r.set_reduced_wide(static_cast<__int128>(a.num_ / g1) * (b.num_ / g2),
                       static_cast<__int128>(a.den_ / g2) * (b.den_ / g1));
    return r;
  }

  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
      const int c = cmp(a.to_mpq(), b.to_mpq());
      return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  std::size_t hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  static constexpr __int128 kSmallMax = INT64_MAX;

  static mpz_class to_mpz(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }

  static unsigned __int128 gcd_wide(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void set_from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const unsigned __int128 un = num < 0 ? -static_cast<unsigned __int128>(num) : static_cast<unsigned __int128>(num);
    const unsigned __int128 g = gcd_wide(un, static_cast<unsigned __int128>(den));
    if (g > 1) {
      num /= static_cast<__int128>(g);
      den /= static_cast<__int128>(g);
    }
    set_reduced_wide(num, den);
  }

  // Assumes gcd(num, den) = 1 and den > 0.
  void set_reduced_wide(__int128 num, __int128 den) {
    if (num == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    if (num <= kSmallMax && num >= -kSmallMax && den <= kSmallMax) {
      num_ = static_cast<std::int64_t>(num);
      den_ = static_cast<std::int64_t>(den);
      big_.reset();
      return;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    big_ = std::make_shared<const mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }

  // q must be canonical.
  void set_from_mpq(mpq_class q) {
    const auto& n = q.get_num();
    const auto& d = q.get_den();
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 63) {
      num_ = static_cast<std::int64_t>(mpz_get_si(n.get_mpz_t()));
      den_ = static_cast<std::int64_t>(mpz_get_si(d.get_mpz_t()));
      big_.reset();
      return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace spechtlab

template <>
struct std::hash<spechtlab::Rational> {
  std::size_t operator()(const spechtlab::Rational& q) const { return q.hash(); }
};
