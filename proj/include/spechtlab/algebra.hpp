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
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spechtlab/errors.hpp"
#include "spechtlab/parallel.hpp"
#include "spechtlab/permutation.hpp"
#include "spechtlab/polynomial.hpp"

namespace spechtlab {

// Finite sum  sum_sigma p_sigma sigma  in Pol(x_1..x_n)[S_n].
//
// Coefficients are central: (p sigma)(q tau) = (p q)(sigma tau). The twisted
// action of permutations on coefficients is only available through act() and
// diagonal_left_apply(). Terms are kept sorted by one-line word, with no zero
// coefficients; every coefficient is an x-polynomial in n variables.
class AlgebraElement {
 public:
  struct Term {
    Permutation perm;
    Polynomial coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  AlgebraElement() = default;
  explicit AlgebraElement(int n) : n_(n) {
    if (n < 1 || n > kMaxDegree) throw UsageError("algebra degree out of range");
  }

  static AlgebraElement identity(int n) { return basis(Permutation::identity(n)); }
  static AlgebraElement basis(const Permutation& sigma, const RadicalRational& c = RadicalRational(1)) {
    AlgebraElement a(sigma.size());
    if (!c.is_zero()) a.terms_.push_back({sigma, Polynomial::constant(c, VarFamily::x, sigma.size())});
    return a;
  }
  static AlgebraElement basis(const Permutation& sigma, const Polynomial& p) {
    AlgebraElement a(sigma.size());
    a.check_coeff(p);
    if (!p.is_zero()) a.terms_.push_back({sigma, p});
    return a;
  }
  static AlgebraElement scalar(const RadicalRational& c, int n) { return basis(Permutation::identity(n), c); }
  // Any order; repeated permutations are summed.
  static AlgebraElement from_terms(std::vector<Term> terms, int n) {
    AlgebraElement a(n);
    for (const auto& t : terms) {
      if (t.perm.size() != n) throw UsageError("term permutation has wrong size");
      a.check_coeff(t.coeff);
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.perm < y.perm; });
    for (auto& t : terms) {
      if (!a.terms_.empty() && a.terms_.back().perm == t.perm) {
        a.terms_.back().coeff += t.coeff;
      } else {
        if (!a.terms_.empty() && a.terms_.back().coeff.is_zero()) a.terms_.pop_back();
        a.terms_.push_back(std::move(t));
      }
    }
    if (!a.terms_.empty() && a.terms_.back().coeff.is_zero()) a.terms_.pop_back();
    return a;
  }

  static AlgebraElement parse(std::string_view text, int n);

  int degree() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // All coefficients are constants.
  bool is_scalar() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_constant(); });
  }

  Polynomial coefficient(const Permutation& sigma) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), sigma,
                               [](const Term& t, const Permutation& p) { return t.perm < p; });
    if (it != terms_.end() && it->perm == sigma) return it->coeff;
    return Polynomial(VarFamily::x, n_);
  }
  RadicalRational scalar_coefficient(const Permutation& sigma) const { return coefficient(sigma).constant_value(); }

  // Same element viewed in S_m, m >= n (coefficients gain unused variables).
  AlgebraElement extended(int m) const {
    if (m == n_) return *this;
    if (!is_scalar()) throw UsageError("only scalar elements can be extended");
    AlgebraElement r(m);
    for (const auto& t : terms_) r.terms_.push_back({t.perm.extended(m), Polynomial::constant(t.coeff.constant_value(), VarFamily::x, m)});
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) { return x.perm < y.perm; });
    return r;
  }

  template <class F>
  AlgebraElement map_coefficients(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.perm, f(t.perm, t.coeff)});
    return from_terms(std::move(out), n_);
  }

  AlgebraElement operator-() const {
    AlgebraElement r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same(b);
    std::vector<Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return from_terms(std::move(all), a.n_);
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }
  AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }

  friend AlgebraElement operator*(const RadicalRational& c, const AlgebraElement& a) {
    if (c.is_zero()) return AlgebraElement(a.n_);
    AlgebraElement r = a;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }
  friend AlgebraElement operator*(const AlgebraElement& a, const RadicalRational& c) { return c * a; }
  // Polynomial coefficients commute with the group, so p*a == a*p.
  friend AlgebraElement operator*(const Polynomial& p, const AlgebraElement& a) {
    a.check_coeff(p);
    std::vector<Term> out;
    out.reserve(a.terms_.size());
    for (const auto& t : a.terms_) out.push_back({t.perm, p * t.coeff});
    return from_terms(std::move(out), a.n_);
  }
  friend AlgebraElement operator*(const AlgebraElement& a, const Polynomial& p) { return p * a; }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // "(x1 - x2) * [1,2] + (-x1 + x2) * [2,1]"; zero renders as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + t.coeff.str() + ") * " + t.perm.str();
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) { return os << a.str(); }

 private:
  void check_same(const AlgebraElement& o) const {
    if (n_ != o.n_) throw UsageError("algebra element size mismatch");
  }
  void check_coeff(const Polynomial& p) const {
    if (p.family() != VarFamily::x || p.arity() != n_)
      throw UsageError("coefficients must be x-polynomials in " + std::to_string(n_) + " variables");
  }

  int n_ = 1;
  std::vector<Term> terms_;
};

namespace detail {

// Polynomials interned up to an invertible scalar: p = scale * basis[id].
// Ω-type elements reuse a handful of coefficient shapes (up to sign), so
// products and sums can be formed on ids and materialised once.
class CoefficientPool {
 public:
  struct Ref {
    std::uint32_t id;
    RadicalRational scale;
  };

  Ref intern(const Polynomial& p) {
    RadicalRational scale(1);
    const RadicalRational& lead = p.leading_term().coeff;
    auto base = p;
    if (!lead.is_one() && lead.is_single_term()) {
      scale = lead;
      base = p * lead.inverse();
    }
    auto [it, inserted] = index_.try_emplace(std::move(base), static_cast<std::uint32_t>(basis_.size()));
    if (inserted) basis_.push_back(&it->first);
    return {it->second, std::move(scale)};
  }

  const Polynomial& operator[](std::uint32_t id) const { return *basis_[id]; }
  std::size_t size() const { return basis_.size(); }

 private:
  std::unordered_map<Polynomial, std::uint32_t> index_;
  std::vector<const Polynomial*> basis_;
};

// For each result permutation (by rank), a sparse list key -> scalar. The
// final coefficient is sum_k scalar_k * poly(k).
class SlotAccumulator {
 public:
  explicit SlotAccumulator(int n) : n_(n), slots_(factorial(n)) {}

  void add(std::uint64_t rank, std::uint64_t key, const RadicalRational& c) {
    auto& slot = slots_[rank];
    for (auto it = slot.rbegin(); it != slot.rend(); ++it) {
      if (it->first == key) {
        it->second += c;
        return;
      }
    }
    slot.emplace_back(key, c);
  }

  void merge(SlotAccumulator&& o) {
    for (std::size_t r = 0; r < slots_.size(); ++r)
      for (auto& [k, v] : o.slots_[r]) add(r, k, v);
  }

  std::vector<std::uint64_t> used_keys() const {
    std::vector<std::uint64_t> keys;
    for (const auto& slot : slots_)
      for (const auto& [k, v] : slot)
        if (!v.is_zero()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
  }

  std::vector<std::pair<std::uint64_t, RadicalRational>> live_entries(std::uint64_t rank) const {
    std::vector<std::pair<std::uint64_t, RadicalRational>> out;
    for (const auto& e : slots_[rank])
      if (!e.second.is_zero()) out.push_back(e);
    return out;
  }

  template <class Lookup>
  Polynomial materialize_slot(std::uint64_t rank, Lookup&& lookup) const {
    std::vector<Polynomial::Term> gathered;
    for (const auto& [k, v] : slots_[rank]) {
      if (v.is_zero()) continue;
      const Polynomial& p = lookup(k);
      for (const auto& t : p.terms()) gathered.push_back({t.mono, v.is_one() ? t.coeff : t.coeff * v});
    }
    return Polynomial::from_terms(std::move(gathered), VarFamily::x, n_);
  }

  // lookup(key) -> const Polynomial&.
  template <class Lookup>
  AlgebraElement materialize(Lookup&& lookup) const {
    std::vector<AlgebraElement::Term> out(slots_.size());
    std::vector<char> filled(slots_.size(), 0);
    parallel_chunks(slots_.size(), [&](std::size_t b, std::size_t e, std::size_t) {
      for (std::size_t r = b; r < e; ++r) {
        if (slots_[r].empty()) continue;
        auto poly = materialize_slot(r, lookup);
        if (poly.is_zero()) continue;
        out[r] = {Permutation::unrank(r, n_), std::move(poly)};
        filled[r] = 1;
      }
    }, 16);
    std::vector<AlgebraElement::Term> terms;
    for (std::size_t r = 0; r < out.size(); ++r)
      if (filled[r]) terms.push_back(std::move(out[r]));
    return AlgebraElement::from_terms(std::move(terms), n_);
  }

 private:
  int n_;
  std::vector<std::vector<std::pair<std::uint64_t, RadicalRational>>> slots_;
};

struct TwistTerm {
  Permutation left;     // multiplies the group part on the left
  Permutation acting;   // acts on the coefficients as sigma^x
  RadicalRational coeff;
};

// sum over (left, acting, c) and terms q_tau tau of b:  c * (left tau) * acting^x(q_tau).
inline AlgebraElement twisted_apply(const std::vector<TwistTerm>& ops, const AlgebraElement& b) {
  const int n = b.degree();
  CoefficientPool pool;
  std::vector<TwistTerm> sorted = ops;
  std::sort(sorted.begin(), sorted.end(), [](const TwistTerm& x, const TwistTerm& y) { return x.acting < y.acting; });
  SlotAccumulator acc(n);
  std::vector<CoefficientPool::Ref> acted;
  for (std::size_t i = 0; i < sorted.size();) {
    const Permutation pi = sorted[i].acting;
    if (pi.size() != n || sorted[i].left.size() != n) throw UsageError("twisted apply: size mismatch");
    acted.clear();
    for (const auto& t : b.terms()) acted.push_back(pool.intern(t.coeff.permuted(pi)));
    for (; i < sorted.size() && sorted[i].acting == pi; ++i) {
      const auto& op = sorted[i];
      for (std::size_t j = 0; j < b.terms().size(); ++j)
        acc.add((op.left * b.terms()[j].perm).rank(), acted[j].id, op.coeff * acted[j].scale);
    }
  }
  return acc.materialize([&](std::uint64_t k) -> const Polynomial& { return pool[static_cast<std::uint32_t>(k)]; });
}

}  // namespace detail

namespace detail {

// a * b held as per-rank scalar combinations of coefficient-pair products.
// Each distinct polynomial product is formed once; coefficients can be read
// one permutation at a time without materialising the whole element.
class PooledProduct {
 public:
  PooledProduct(const AlgebraElement& a, const AlgebraElement& b) : n_(a.degree()), acc_(a.degree()) {
    struct Entry {
      Permutation perm;
      std::uint32_t id;
      RadicalRational scale;
    };
    std::vector<Entry> ea;
    std::vector<Entry> eb;
    for (const auto& t : a.terms()) {
      auto r = pa_.intern(t.coeff);
      ea.push_back({t.perm, r.id, std::move(r.scale)});
    }
    for (const auto& t : b.terms()) {
      auto r = pb_.intern(t.coeff);
      eb.push_back({t.perm, r.id, std::move(r.scale)});
    }
    if (ea.empty() || eb.empty()) return;
    nb_ = pb_.size();
    const std::size_t min_chunk = std::max<std::size_t>(1, 4096 / eb.size());
    const std::size_t workers = chunk_workers(ea.size(), min_chunk);
    std::vector<SlotAccumulator> acc(workers, SlotAccumulator(n_));
    parallel_chunks(ea.size(), [&](std::size_t lo, std::size_t hi, std::size_t w) {
      for (std::size_t i = lo; i < hi; ++i) {
        const Entry& x = ea[i];
        for (const Entry& y : eb)
          acc[w].add((x.perm * y.perm).rank(), x.id * nb_ + y.id, x.scale.is_one() ? y.scale : x.scale * y.scale);
      }
    }, min_chunk);
    for (std::size_t w = 1; w < acc.size(); ++w) acc[0].merge(std::move(acc[w]));
    acc_ = std::move(acc[0]);
    keys_ = acc_.used_keys();
    products_.resize(keys_.size());
    parallel_chunks(keys_.size(), [&](std::size_t lo, std::size_t hi, std::size_t) {
      for (std::size_t i = lo; i < hi; ++i)
        products_[i] = pa_[static_cast<std::uint32_t>(keys_[i] / nb_)] * pb_[static_cast<std::uint32_t>(keys_[i] % nb_)];
    }, 8);
  }

  int degree() const { return n_; }
  const SlotAccumulator& slots() const { return acc_; }

  const Polynomial& product(std::uint64_t key) const {
    return products_[static_cast<std::size_t>(std::lower_bound(keys_.begin(), keys_.end(), key) - keys_.begin())];
  }

  Polynomial coefficient(std::uint64_t rank) const {
    return acc_.materialize_slot(rank, [&](std::uint64_t k) -> const Polynomial& { return product(k); });
  }

  AlgebraElement materialize() const {
    return acc_.materialize([&](std::uint64_t k) -> const Polynomial& { return product(k); });
  }

 private:
  int n_;
  CoefficientPool pa_;
  CoefficientPool pb_;
  std::uint64_t nb_ = 1;
  SlotAccumulator acc_;
  std::vector<std::uint64_t> keys_;
  std::vector<Polynomial> products_;
};

}  // namespace detail

// Plain group-ring product with central coefficients. Coefficients are
// interned up to scalars, term pairs are accumulated as scalar multiples of
// coefficient-pair products, and each distinct polynomial product is formed
// once.
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return AlgebraElement(a.degree());
  return detail::PooledProduct(a, b).materialize();
}

// Tests a * b == s * c one coefficient at a time, so the product is never
// held in full. A slot with a single product key is compared by scalars once
// the ratio of s * (coefficient shape of c) to that product is known.
inline bool product_equals_scaled(const detail::PooledProduct& prod, const Polynomial& s, const AlgebraElement& c) {
  const int n = prod.degree();
  if (c.degree() != n) throw UsageError("product_equals_scaled: size mismatch");
  detail::CoefficientPool pc;
  std::vector<std::optional<detail::CoefficientPool::Ref>> right(factorial(n));
  if (!s.is_zero())
    for (const auto& t : c.terms()) right[t.perm.rank()] = pc.intern(t.coeff);

  std::vector<Polynomial> scaled(pc.size());
  for (std::size_t id = 0; id < pc.size(); ++id) scaled[id] = s * pc[static_cast<std::uint32_t>(id)];

  // Ratio of scaled[id] to product(key) for single-key slots, if proportional.
  std::map<std::pair<std::uint64_t, std::uint32_t>, std::optional<RadicalRational>> ratios;
  for (std::uint64_t r = 0; r < right.size(); ++r) {
    const auto live = prod.slots().live_entries(r);
    if (live.size() == 1 && right[r]) ratios.emplace(std::make_pair(live.front().first, right[r]->id), std::nullopt);
  }
  for (auto& [key, ratio] : ratios) {
    const Polynomial& p = prod.product(key.first);
    const Polynomial& q = scaled[key.second];
    const RadicalRational& lead = p.leading_term().coeff;
    if (p.leading_term().mono != q.leading_term().mono || !lead.is_single_term()) continue;
    const RadicalRational rho = q.leading_term().coeff / lead;
    if (q == rho * p) ratio = rho;
  }

  std::atomic<bool> equal{true};
  parallel_chunks(right.size(), [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t r = lo; r < hi && equal.load(std::memory_order_relaxed); ++r) {
      const auto live = prod.slots().live_entries(r);
      if (!right[r]) {
        if (!live.empty() && !prod.coefficient(r).is_zero()) equal = false;
        continue;
      }
      if (live.size() == 1) {
        const auto& ratio = ratios.at({live.front().first, right[r]->id});
        if (ratio) {
          if (!(live.front().second == right[r]->scale * *ratio)) equal = false;
          continue;
        }
      }
      if (!(prod.coefficient(r) == right[r]->scale * scaled[right[r]->id])) equal = false;
    }
  }, 8);
  return equal.load();
}

inline bool product_equals_scaled(const AlgebraElement& a, const AlgebraElement& b, const Polynomial& s,
                                  const AlgebraElement& c) {
  if (a.degree() != b.degree()) throw UsageError("product_equals_scaled: size mismatch");
  if (a.is_zero() || b.is_zero()) return s.is_zero() || c.is_zero();
  return product_equals_scaled(detail::PooledProduct(a, b), s, c);
}

inline AlgebraElement elem_mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

// sum_sigma p_sigma * sigma^x(p), where sigma^x sends x_i to x_{sigma(i)}.
// A left action: act(a*b, p) == act(a, act(b, p)) for scalar a, b.
inline Polynomial act(const AlgebraElement& a, const Polynomial& p) {
  if (p.family() != VarFamily::x || p.arity() != a.degree()) throw UsageError("act: size mismatch");
  std::vector<Polynomial::Term> gathered;
  for (const auto& t : a.terms()) {
    const Polynomial moved = p.permuted(t.perm);
    const Polynomial scaled = t.coeff.is_constant() ? moved * t.coeff.constant_value() : moved * t.coeff;
    gathered.insert(gathered.end(), scaled.terms().begin(), scaled.terms().end());
  }
  return Polynomial::from_terms(std::move(gathered), VarFamily::x, a.degree());
}

inline Polynomial elem_act_on_poly(const AlgebraElement& a, const Polynomial& p) { return act(a, p); }

// Left multiplication by the diagonal copy: sum_sigma c_sigma (sigma * sigma^x) b,
// i.e. sigma left-multiplies every group element of b and acts on every
// coefficient of b.
inline AlgebraElement diagonal_left_apply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.degree() != b.degree()) throw UsageError("diagonal_left_apply: size mismatch");
  if (!a.is_scalar()) throw UsageError("diagonal_left_apply: left factor must have scalar coefficients");
  std::vector<detail::TwistTerm> ops;
  for (const auto& t : a.terms()) ops.push_back({t.perm, t.perm, t.coeff.constant_value()});
  return detail::twisted_apply(ops, b);
}

// "(coeff) * [perm] + ..." as produced by str().
inline AlgebraElement AlgebraElement::parse(std::string_view text, int n) {
  const std::string s = detail::trim(text);
  AlgebraElement out(n);
  if (s == "0") return out;
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw UsageError("bad algebra element near: " + s.substr(pos));
    int depth = 0;
    std::size_t close = pos;
    for (; close < s.size(); ++close) {
      if (s[close] == '(') ++depth;
      if (s[close] == ')' && --depth == 0) break;
    }
    if (close >= s.size()) throw UsageError("unbalanced parentheses in algebra element");
    const Polynomial coeff = Polynomial::parse(s.substr(pos + 1, close - pos - 1), VarFamily::x, n);
    const auto lb = s.find('[', close);
    const auto rb = s.find(']', lb);
    if (lb == std::string::npos || rb == std::string::npos) throw UsageError("missing permutation in algebra element");
    terms.push_back({Permutation::parse(s.substr(lb, rb - lb + 1)), coeff});
    pos = rb + 1;
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '+')) ++pos;
  }
  return from_terms(std::move(terms), n);
}

}  // namespace spechtlab
