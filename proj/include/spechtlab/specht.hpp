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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spechtlab/algebra.hpp"
#include "spechtlab/partition.hpp"
#include "spechtlab/polynomial.hpp"
#include "spechtlab/tableau.hpp"
#include "spechtlab/young_units.hpp"

namespace spechtlab {

// prod_{i<j} (x_{a_i} - x_{a_j}) in n variables; empty or single index gives 1.
inline Polynomial vandermonde(std::span<const int> indices, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int a : indices) {
    if (a < 1 || a > n) throw UsageError("vandermonde: index out of range");
    if (seen[static_cast<std::size_t>(a)]) throw UsageError("vandermonde: repeated index " + std::to_string(a));
    seen[static_cast<std::size_t>(a)] = true;
  }
  Polynomial p = Polynomial::constant(RadicalRational(1), VarFamily::x, n);
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      p *= Polynomial::variable(indices[i], VarFamily::x, n) - Polynomial::variable(indices[j], VarFamily::x, n);
  return p;
}
inline Polynomial vandermonde(std::initializer_list<int> indices, int n) {
  return vandermonde(std::span<const int>(indices.begin(), indices.size()), n);
}

// Delta_lambda(sigma): cut the one-line word of sigma into consecutive blocks
// of sizes lambda_1, lambda_2, ... and multiply their Vandermondes.
inline Polynomial delta_lambda(const Partition& blocks, const Permutation& sigma) {
  const int n = sigma.size();
  if (blocks.weight() != n) throw UsageError("delta_lambda: weight of lambda differs from permutation size");
  const auto word = sigma.one_line();
  Polynomial p = Polynomial::constant(RadicalRational(1), VarFamily::x, n);
  std::size_t pos = 0;
  for (int len : blocks.parts()) {
    p *= vandermonde(std::span<const int>(word.data() + pos, static_cast<std::size_t>(len)), n);
    pos += static_cast<std::size_t>(len);
  }
  return p;
}

// Y_tc = Delta_lambda(1..n): the product of the column Vandermondes of tc.
inline Polynomial specht_generator(const Partition& shape) {
  return delta_lambda(shape, Permutation::identity(shape.weight()));
}

// Product of the Vandermondes of the columns of t. Equals sigma_{t,tc}^x Y_tc.
inline Polynomial specht_polynomial(const StandardTableau& t) {
  Polynomial p = Polynomial::constant(RadicalRational(1), VarFamily::x, t.size());
  for (const auto& col : t.columns()) p *= vandermonde(col, t.size());
  return p;
}

// Y_t = zeta^x(t, tc) Y_tc.
inline Polynomial young_polynomial(const StandardTableau& t) {
  const StandardTableau tc = first_tableau(t.shape());
  const Polynomial y = specht_generator(t.shape());
  if (t == tc) return y;
  return act(zeta_chain(t, tc), y);
}

struct SpechtVector {
  StandardTableau tableau;
  Polynomial polynomial;
};

inline std::vector<SpechtVector> specht_basis(const Partition& shape) {
  std::vector<SpechtVector> out;
  for (const auto& t : enumerate_tableaux(shape)) out.push_back({t, specht_polynomial(t)});
  return out;
}

inline std::vector<SpechtVector> young_basis(const Partition& shape) {
  std::vector<SpechtVector> out;
  for (const auto& t : enumerate_tableaux(shape)) out.push_back({t, young_polynomial(t)});
  return out;
}

// Rank over the radical field of polynomials whose coefficients are each
// rational multiples of one common radical (true of Specht and Young vectors:
// a zeta chain contributes a single radical factor). Fraction-free Bareiss
// elimination on monomial coordinates.
inline std::size_t polynomial_rank(const std::vector<Polynomial>& polys) {
  std::map<std::uint64_t, std::size_t> column_of;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) column_of.emplace(t.mono.packed(), 0);
  std::size_t next = 0;
  for (auto& [k, v] : column_of) v = next++;
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    std::vector<Rational> row(column_of.size());
    const auto radicand = p.terms().front().coeff.terms().front().radicand;
    for (const auto& t : p.terms()) {
      if (!t.coeff.is_single_term() || t.coeff.terms().front().radicand != radicand)
        throw UsageError("polynomial_rank: coefficients do not share a single radical");
      row[column_of[t.mono.packed()]] = t.coeff.terms().front().coeff;
    }
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  Rational prev_pivot = 1;
  for (std::size_t col = 0; col < column_of.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational p = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Rational a = rows[r][col];
      for (std::size_t k = col; k < column_of.size(); ++k)
        rows[r][k] = (p * rows[r][k] - a * rows[rank][k]) / prev_pivot;
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

// Dimension of the span of { sigma^x Y_tc : sigma in S_n }.
inline std::size_t specht_span_rank(const Partition& shape) {
  const Polynomial y = specht_generator(shape);
  std::vector<Polynomial> vecs;
  for (const auto& p : all_permutations(shape.weight())) vecs.push_back(y.permuted(p));
  return polynomial_rank(vecs);
}

// The central idempotent fixing Y_tc, reported in both shape conventions.
struct Isotype {
  Partition columns;  // argument of central_idempotent: tableaux with these column lengths
  Partition rows;     // the same diagram by row lengths
};

// Applies every central idempotent e_nu^x to Y_tc. Exactly one must fix it
// and all others must annihilate it.
inline Isotype isotype_of(const Partition& shape) {
  const int n = shape.weight();
  if (n > 5) throw UsageError("isotype_of: n must be at most 5");
  const Polynomial y = specht_generator(shape);
  std::optional<Partition> survivor;
  for (const auto& nu : partitions_of(n)) {
    const Polynomial projected = act(central_idempotent(nu), y);
    if (projected.is_zero()) continue;
    if (projected != y)
      throw VerificationFailure("isotype_of: e_" + nu.str() + " neither fixes nor kills Y_tc for " + shape.str());
    if (survivor) throw VerificationFailure("isotype_of: several central idempotents fix Y_tc for " + shape.str());
    survivor = nu;
  }
  if (!survivor) throw VerificationFailure("isotype_of: no central idempotent fixes Y_tc for " + shape.str());
  return {*survivor, survivor->conjugate()};
}

// x = (0^{mu_1}, 1^{mu_2}, 2^{mu_3}, ...).
inline std::vector<Rational> specialization_point(const Partition& mu) {
  std::vector<Rational> x;
  for (int k = 0; k < mu.length(); ++k)
    for (int r = 0; r < mu[k]; ++r) x.emplace_back(k);
  return x;
}

// Substitutes the specialization point of mu into every coefficient.
inline AlgebraElement specialize_element(const AlgebraElement& a, const Partition& mu) {
  if (mu.weight() != a.degree()) throw UsageError("specialize_element: weight of mu differs from n");
  const auto x = specialization_point(mu);
  return a.map_coefficients([&](const Permutation&, const Polynomial& p) { return p.substitute(x); });
}

}  // namespace spechtlab
