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

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "spechtlab/algebra.hpp"
#include "spechtlab/pair_algebra.hpp"
#include "spechtlab/partition.hpp"
#include "spechtlab/tableau.hpp"

namespace spechtlab {

// X_k = sum_{j<k} (j,k); X_1 = 0.
inline AlgebraElement jucys_murphy(int n, int k) {
  if (k < 1 || k > n) throw UsageError("jucys_murphy: k out of range");
  AlgebraElement x(n);
  for (int j = 1; j < k; ++j) x += AlgebraElement::basis(Permutation::transposition(j, k, n));
  return x;
}

namespace detail {

// Write-once memo keyed by canonical text. Racing writers compute the same
// exact value; the first insert wins.
class UnitCache {
 public:
  template <class Make>
  AlgebraElement get(const std::string& key, Make&& make) {
    {
      std::lock_guard lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    AlgebraElement value = make();
    std::lock_guard lock(mu_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::string, AlgebraElement> map_;
};

inline UnitCache& diagonal_cache() {
  static UnitCache cache;
  return cache;
}
inline UnitCache& unit_cache() {
  static UnitCache cache;
  return cache;
}

// Contents of the cells that can be added to the diagram with these column
// lengths (content = column - row).
inline std::vector<int> addable_contents(const std::vector<int>& column_lengths) {
  std::vector<int> out;
  for (std::size_t j = 0; j < column_lengths.size(); ++j)
    if (j == 0 || column_lengths[j - 1] > column_lengths[j])
      out.push_back(static_cast<int>(j) + 1 - (column_lengths[j] + 1));
  out.push_back(static_cast<int>(column_lengths.size()) + 1 - 1);
  return out;
}

}  // namespace detail

// e_{t,t}: the idempotent with X_k e = c_t(k) e = e X_k for every k.
//
// Murphy's recursion: take the unit of t with n removed (it lives in S_{n-1}
// and commutes with X_n) and multiply by prod_b (X_n - b)/(c_t(n) - b) over the
// contents b != c_t(n) of the cells addable to the smaller shape.
inline AlgebraElement diagonal_unit(const StandardTableau& t) {
  return detail::diagonal_cache().get(t.str(), [&] {
    const int n = t.size();
    if (n == 1) return AlgebraElement::identity(1);
    const StandardTableau smaller = t.restricted();
    AlgebraElement e = diagonal_unit(smaller).extended(n);
    std::vector<int> lengths;
    for (const auto& c : smaller.columns()) lengths.push_back(static_cast<int>(c.size()));
    const int c = t.content(n);
    const AlgebraElement xn = jucys_murphy(n, n);
    for (int b : detail::addable_contents(lengths)) {
      if (b == c) continue;
      const AlgebraElement factor =
          Rational(1, c - b) * (xn - AlgebraElement::scalar(Rational(b), n));
      e = e * factor;
    }
    return e;
  });
}

enum class Side { left, right };

struct ZetaStep {
  AlgebraElement factor;    // (s_i + 1/d) / sqrt(1 - 1/d^2)
  StandardTableau image;    // s_i t
  Side side;
  int axial_distance;       // d = c(i) - c(i+1), read in t
  RadicalRational normalization;  // 1 / sqrt(1 - 1/d^2)
};

// One conjugation step from t to s_i t. The same factor multiplies on the left
// of e_{t,u} (giving e_{s_i t,u}) or on the right of e_{u,t} (giving e_{u,s_i t}).
inline ZetaStep zeta_step(const StandardTableau& t, int i, Side side) {
  auto image = t.apply_transposition(i);
  if (!image) throw UsageError("zeta_step: s_" + std::to_string(i) + " t is not standard for t = " + t.str());
  const int n = t.size();
  const int d = t.content(i) - t.content(i + 1);
  const Rational shift(1, d);
  const RadicalRational norm = sqrt_of_positive_rational(Rational(1) - shift * shift).inverse();
  AlgebraElement factor = norm * (AlgebraElement::basis(Permutation::simple(i, n)) + AlgebraElement::scalar(shift, n));
  return {std::move(factor), std::move(*image), side, d, norm};
}

// zeta(t, u): the product of conjugation factors along word_between(t, u), so
// that e_{t,w} = zeta(t,u) e_{u,w}. The contents of each factor are read in the
// tableau reached so far.
inline AlgebraElement zeta_chain(const StandardTableau& t, const StandardTableau& u) {
  const auto word = word_between(t, u);
  AlgebraElement z = AlgebraElement::identity(t.size());
  StandardTableau cur = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    ZetaStep step = zeta_step(cur, *it, Side::left);
    z = step.factor * z;
    cur = std::move(step.image);
  }
  return z;
}

// e_{t,u} = zeta(t <- v) e_{v,v} zeta(v -> u), conjugating through the pivot v.
inline AlgebraElement matrix_unit_via(const StandardTableau& t, const StandardTableau& u, const StandardTableau& v) {
  if (t.shape() != u.shape() || t.shape() != v.shape()) throw UsageError("matrix_unit: shapes differ");
  AlgebraElement e = diagonal_unit(v);
  StandardTableau cur = v;
  const auto left = word_between(t, v);
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    ZetaStep step = zeta_step(cur, *it, Side::left);
    e = step.factor * e;
    cur = std::move(step.image);
  }
  cur = v;
  const auto right = word_between(u, v);
  for (auto it = right.rbegin(); it != right.rend(); ++it) {
    ZetaStep step = zeta_step(cur, *it, Side::right);
    e = e * step.factor;
    cur = std::move(step.image);
  }
  return e;
}

// Orthogonal matrix unit e_{t,u}, e_{t,u} e_{v,w} = delta_{u,v} e_{t,w}.
// Built through the first tableau and memoised.
inline AlgebraElement matrix_unit(const StandardTableau& t, const StandardTableau& u) {
  if (t.shape() != u.shape()) throw UsageError("matrix_unit: shapes differ");
  if (t == u) return diagonal_unit(t);
  return detail::unit_cache().get(t.str() + "/" + u.str(),
                                  [&] { return matrix_unit_via(t, u, first_tableau(t.shape())); });
}

// e_lambda = sum_t e_{t,t} over standard tableaux with column lengths lambda.
inline AlgebraElement central_idempotent(const Partition& shape) {
  AlgebraElement e(shape.weight());
  for (const auto& t : enumerate_tableaux(shape)) e += diagonal_unit(t);
  return e;
}

// (n!)^-1 sum_sigma sigma.
inline AlgebraElement trivial_idempotent(int n) {
  std::vector<AlgebraElement::Term> terms;
  const Rational c(1, static_cast<std::int64_t>(factorial(n)));
  for (const auto& p : all_permutations(n)) terms.push_back({p, Polynomial::constant(c, VarFamily::x, n)});
  return AlgebraElement::from_terms(std::move(terms), n);
}

// sum over the Young subgroup S_lambda (blocks of sizes lambda_1, lambda_2, ...)
// of (-1)^{inversions} sigma.
inline AlgebraElement young_subgroup_alternant(const Partition& blocks) {
  const int n = blocks.weight();
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1);
  int pos = 1;
  for (int b = 0; b < blocks.length(); ++b)
    for (int k = 0; k < blocks[b]; ++k) block_of[static_cast<std::size_t>(pos++)] = b;
  std::vector<AlgebraElement::Term> terms;
  for (const auto& p : all_permutations(n)) {
    bool inside = true;
    for (int i = 1; i <= n && inside; ++i) inside = block_of[static_cast<std::size_t>(i)] == block_of[static_cast<std::size_t>(p(i))];
    if (inside) terms.push_back({p, Polynomial::constant(RadicalRational(p.sign()), VarFamily::x, n)});
  }
  return AlgebraElement::from_terms(std::move(terms), n);
}

// e_n^{12} = (n!)^-1 sum_sigma sigma (x) sigma.
inline PairAlgebraElement diagonal_symmetrizer(int n) {
  std::vector<PairAlgebraElement::Term> terms;
  const Rational c(1, static_cast<std::int64_t>(factorial(n)));
  for (const auto& p : all_permutations(n)) terms.push_back({p, p, c});
  return PairAlgebraElement::from_terms(std::move(terms), n);
}

// sum_{t,u in Tab(shape)} e_{t,u} (x) e_{t,u}.
inline PairAlgebraElement unit_square_sum(const Partition& shape) {
  std::vector<PairAlgebraElement::Term> terms;
  const auto tabs = enumerate_tableaux(shape);
  for (const auto& t : tabs) {
    for (const auto& u : tabs) {
      const AlgebraElement e = matrix_unit(t, u);
      const auto sq = PairAlgebraElement::tensor(e, e);
      terms.insert(terms.end(), sq.terms().begin(), sq.terms().end());
    }
  }
  return PairAlgebraElement::from_terms(std::move(terms), shape.weight());
}

struct SandwichConstant {
  Partition shape;
  RadicalRational measured;  // c in (e_tt (x) 1) e^{12} (e_uu (x) 1) = c e_tu (x) e_tu
  RadicalRational expected;  // 1 / f_shape
  bool uniform = true;       // same c for every pair of the shape
};

struct PairDecompositionReport {
  int n = 0;
  bool identity_ok = false;
  bool sandwich_ok = false;
  std::vector<SandwichConstant> constants;
  std::vector<std::string> failures;
  bool ok() const { return identity_ok && sandwich_ok && failures.empty(); }
};

// Checks e_n^{12} = sum_lambda (1/f_lambda) sum_{t,u} e_{t,u} (x) e_{t,u}, and
// measures the sandwich constant for every same-shape pair.
inline PairDecompositionReport verify_pair_decomposition(int n) {
  if (n < 1 || n > 5) throw UsageError("verify_pair_decomposition: n must be in 1..5");
  PairDecompositionReport report;
  report.n = n;
  const PairAlgebraElement sym = diagonal_symmetrizer(n);
  PairAlgebraElement rhs(n);
  const AlgebraElement one = AlgebraElement::identity(n);
  report.sandwich_ok = true;
  for (const auto& shape : partitions_of(n)) {
    const auto tabs = enumerate_tableaux(shape);
    const RadicalRational inv_f(Rational(1, static_cast<std::int64_t>(tabs.size())));
    rhs += inv_f * unit_square_sum(shape);
    SandwichConstant sc{shape, {}, inv_f, true};
    bool first = true;
    for (const auto& t : tabs) {
      const PairAlgebraElement left = PairAlgebraElement::tensor(diagonal_unit(t), one) * sym;
      for (const auto& u : tabs) {
        const PairAlgebraElement lhs = left * PairAlgebraElement::tensor(diagonal_unit(u), one);
        const AlgebraElement e = matrix_unit(t, u);
        const PairAlgebraElement unit_sq = PairAlgebraElement::tensor(e, e);
        const auto& ref = unit_sq.terms().front();
        const RadicalRational c = lhs.coefficient(ref.first, ref.second) / ref.coeff;
        if (!(lhs == c * unit_sq)) {
          report.sandwich_ok = false;
          report.failures.push_back("sandwich not proportional for t=" + t.str() + " u=" + u.str());
          continue;
        }
        if (first) {
          sc.measured = c;
          first = false;
        } else if (!(c == sc.measured)) {
          sc.uniform = false;
          report.failures.push_back("sandwich constant varies within shape " + shape.str() + " at t=" + t.str() +
                                    " u=" + u.str());
        }
      }
    }
    report.constants.push_back(sc);
  }
  report.identity_ok = sym == rhs;
  if (!report.identity_ok) report.failures.push_back("e_n^{12} differs from the sum of unit squares");
  return report;
}

}  // namespace spechtlab
