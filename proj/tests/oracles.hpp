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

// Independent reference implementations used to check the library: a dense
// group algebra with naive composition, an explicit Q(sqrt2, sqrt3) vector
// model, and random generators.

#include <array>
#include <map>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spechtlab.hpp"

namespace oracle {

using spechtlab::AlgebraElement;
using spechtlab::Permutation;
using spechtlab::Polynomial;
using spechtlab::Rational;
using spechtlab::RadicalRational;
using BigQ = boost::multiprecision::cpp_rational;

inline BigQ to_big(const Rational& q) {
  return BigQ(boost::multiprecision::cpp_int(q.numerator().get_str()),
              boost::multiprecision::cpp_int(q.denominator().get_str()));
}

inline Rational from_big(const BigQ& q) {
  return Rational(mpz_class(boost::multiprecision::numerator(q).str()),
                  mpz_class(boost::multiprecision::denominator(q).str()));
}

// a + b sqrt2 + c sqrt3 + d sqrt6 with exact rationals.
struct Q23 {
  std::array<BigQ, 4> v{};
  friend Q23 operator+(const Q23& x, const Q23& y) {
    Q23 r;
    for (int i = 0; i < 4; ++i) r.v[i] = x.v[i] + y.v[i];
    return r;
  }
  friend Q23 operator*(const Q23& x, const Q23& y) {
    const auto& [a, b, c, d] = x.v;
    const auto& [e, f, g, h] = y.v;
    Q23 r;
    r.v[0] = a * e + 2 * b * f + 3 * c * g + 6 * d * h;
    r.v[1] = a * f + b * e + 3 * c * h + 3 * d * g;
    r.v[2] = a * g + c * e + 2 * b * h + 2 * d * f;
    r.v[3] = a * h + d * e + b * g + c * f;
    return r;
  }
  friend bool operator==(const Q23&, const Q23&) = default;
};

inline Q23 to_q23(const RadicalRational& r) {
  Q23 out;
  for (const auto& t : r.terms()) {
    const int slot = t.radicand == 1 ? 0 : t.radicand == 2 ? 1 : t.radicand == 3 ? 2 : t.radicand == 6 ? 3 : -1;
    if (slot < 0) throw std::logic_error("radicand outside Q(sqrt2, sqrt3)");
    out.v[static_cast<std::size_t>(slot)] = to_big(t.coeff);
  }
  return out;
}

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return c;
}

// Dense-map group algebra multiplied by the defining double sum.
struct Dense {
  int n = 0;
  std::map<std::vector<int>, Polynomial> terms;

  static Dense from(const AlgebraElement& a) {
    Dense d{a.degree(), {}};
    for (const auto& t : a.terms()) d.terms.emplace(t.perm.one_line(), t.coeff);
    return d;
  }

  friend Dense operator*(const Dense& a, const Dense& b) {
    Dense r{a.n, {}};
    for (const auto& [p, x] : a.terms)
      for (const auto& [q, y] : b.terms) {
        auto key = compose(p, q);
        auto it = r.terms.find(key);
        if (it == r.terms.end()) r.terms.emplace(key, x * y);
        else it->second = it->second + x * y;
      }
    for (auto it = r.terms.begin(); it != r.terms.end();) it = it->second.is_zero() ? r.terms.erase(it) : std::next(it);
    return r;
  }

  bool equals(const AlgebraElement& a) const { return Dense::from(a).terms == terms; }
};

inline Dense dense_mul(const AlgebraElement& a, const AlgebraElement& b) { return Dense::from(a) * Dense::from(b); }

// Substitutes x_i -> x_{sigma(i)} monomial by monomial from exponent vectors.
inline Polynomial naive_permute(const Polynomial& p, const std::vector<int>& sigma) {
  std::vector<Polynomial::Term> out;
  for (const auto& t : p.terms()) {
    const auto e = t.mono.exponents();
    std::vector<int> f(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(sigma[i] - 1)] += e[i];
    out.push_back({spechtlab::Monomial(f), t.coeff});
  }
  return Polynomial::from_terms(std::move(out), p.family(), p.arity());
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Rational rational(int bound = 20) {
    int den = uniform(1, bound);
    return Rational(uniform(-bound, bound), den);
  }

  // Elements of Q(sqrt2, sqrt3).
  RadicalRational radical() {
    static constexpr std::uint64_t kRadicands[] = {2, 3, 6};
    RadicalRational r(rational());
    for (auto m : kRadicands)
      if (uniform(0, 1)) r += RadicalRational::radical(rational(), m);
    return r;
  }

  Polynomial polynomial(int n, int terms, int max_exp, spechtlab::VarFamily family = spechtlab::VarFamily::x) {
    std::vector<Polynomial::Term> out;
    for (int k = 0; k < terms; ++k) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (auto& x : e) x = uniform(0, max_exp);
      out.push_back({spechtlab::Monomial(e), RadicalRational(rational())});
    }
    return Polynomial::from_terms(std::move(out), family, n);
  }

  Permutation permutation(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), gen_);
    return Permutation(v);
  }

  AlgebraElement element(int n, int terms, int poly_terms) {
    std::vector<AlgebraElement::Term> out;
    for (int k = 0; k < terms; ++k) out.push_back({permutation(n), polynomial(n, poly_terms, 2)});
    return AlgebraElement::from_terms(std::move(out), n);
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oracle
