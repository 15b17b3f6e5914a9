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
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spechtlab/algebra.hpp"

namespace spechtlab {

// sum c_{sigma,tau} sigma (x) tau  in Q(sqrt)[S_n x S_n], two commuting copies
// of S_n multiplied componentwise.
class PairAlgebraElement {
 public:
  struct Term {
    Permutation first;
    Permutation second;
    RadicalRational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  PairAlgebraElement() = default;
  explicit PairAlgebraElement(int n) : n_(n) {
    if (n < 1 || n > kMaxDegree) throw UsageError("pair algebra degree out of range");
  }

  static PairAlgebraElement basis(const Permutation& a, const Permutation& b, const RadicalRational& c = 1) {
    if (a.size() != b.size()) throw UsageError("pair basis: size mismatch");
    PairAlgebraElement r(a.size());
    if (!c.is_zero()) r.terms_.push_back({a, b, c});
    return r;
  }
  static PairAlgebraElement identity(int n) {
    return basis(Permutation::identity(n), Permutation::identity(n));
  }

  static PairAlgebraElement from_terms(std::vector<Term> terms, int n) {
    PairAlgebraElement r(n);
    for (const auto& t : terms)
      if (t.first.size() != n || t.second.size() != n) throw UsageError("pair term has wrong size");
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
      return std::tie(x.first, x.second) < std::tie(y.first, y.second);
    });
    for (auto& t : terms) {
      if (!r.terms_.empty() && r.terms_.back().first == t.first && r.terms_.back().second == t.second) {
        r.terms_.back().coeff += t.coeff;
      } else {
        if (!r.terms_.empty() && r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
        r.terms_.push_back(std::move(t));
      }
    }
    if (!r.terms_.empty() && r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
    return r;
  }

  // a (x) b for scalar elements a, b.
  static PairAlgebraElement tensor(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.degree() != b.degree()) throw UsageError("tensor: size mismatch");
    if (!a.is_scalar() || !b.is_scalar()) throw UsageError("tensor: factors must be scalar elements");
    PairAlgebraElement r(a.degree());
    r.terms_.reserve(a.size() * b.size());
    for (const auto& x : a.terms())
      for (const auto& y : b.terms())
        r.terms_.push_back({x.perm, y.perm, x.coeff.constant_value() * y.coeff.constant_value()});
    return r;  // already sorted: a's order, then b's
  }

  int degree() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  RadicalRational coefficient(const Permutation& a, const Permutation& b) const {
    for (const auto& t : terms_)
      if (t.first == a && t.second == b) return t.coeff;
    return {};
  }

  friend PairAlgebraElement operator+(const PairAlgebraElement& a, const PairAlgebraElement& b) {
    if (a.n_ != b.n_) throw UsageError("pair algebra size mismatch");
    std::vector<Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return from_terms(std::move(all), a.n_);
  }
  friend PairAlgebraElement operator-(const PairAlgebraElement& a, const PairAlgebraElement& b) {
    return a + (RadicalRational(-1) * b);
  }
  PairAlgebraElement& operator+=(const PairAlgebraElement& o) { return *this = *this + o; }

  friend PairAlgebraElement operator*(const RadicalRational& c, const PairAlgebraElement& a) {
    PairAlgebraElement r(a.n_);
    if (c.is_zero()) return r;
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  // (s (x) t)(s' (x) t') = (s s') (x) (t t').
  friend PairAlgebraElement operator*(const PairAlgebraElement& a, const PairAlgebraElement& b) {
    if (a.n_ != b.n_) throw UsageError("pair_mul: size mismatch");
    const std::uint64_t width = factorial(a.n_);
    std::unordered_map<std::uint64_t, RadicalRational> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), width * width));
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        const std::uint64_t key = (x.first * y.first).rank() * width + (x.second * y.second).rank();
        acc[key] += x.coeff * y.coeff;
      }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc) {
      if (c.is_zero()) continue;
      out.push_back({Permutation::unrank(key / width, a.n_), Permutation::unrank(key % width, a.n_), std::move(c)});
    }
    return from_terms(std::move(out), a.n_);
  }

  friend bool operator==(const PairAlgebraElement& a, const PairAlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // "(c) * [s]x[t] + ..."
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + t.coeff.str() + ") * " + t.first.str() + "x" + t.second.str();
    }
    return s;
  }

 private:
  int n_ = 1;
  std::vector<Term> terms_;
};

inline PairAlgebraElement pair_mul(const PairAlgebraElement& a, const PairAlgebraElement& b) { return a * b; }

// The first copy left-multiplies the group part of b, the second copy acts
// on b's polynomial coefficients through sigma^x.
inline AlgebraElement pair_left_apply(const PairAlgebraElement& p, const AlgebraElement& b) {
  if (p.degree() != b.degree()) throw UsageError("pair_left_apply: size mismatch");
  std::vector<detail::TwistTerm> ops;
  ops.reserve(p.size());
  for (const auto& t : p.terms()) ops.push_back({t.first, t.second, t.coeff});
  return detail::twisted_apply(ops, b);
}

}  // namespace spechtlab
