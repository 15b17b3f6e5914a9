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

#include <optional>
#include <string>
#include <vector>

#include "spechtlab/algebra.hpp"
#include "spechtlab/pair_algebra.hpp"
#include "spechtlab/specht.hpp"
#include "spechtlab/tableau.hpp"
#include "spechtlab/young_units.hpp"

namespace spechtlab {

// Omega_lambda = sum_sigma Delta_lambda(sigma) sigma.
inline AlgebraElement build_omega(const Partition& shape) {
  const int n = shape.weight();
  if (n < 1 || n > kMaxDegree) throw UsageError("build_omega: n must be in 1.." + std::to_string(kMaxDegree));
  std::vector<AlgebraElement::Term> terms;
  terms.reserve(factorial(n));
  for (const auto& p : all_permutations(n)) terms.push_back({p, delta_lambda(shape, p)});
  return AlgebraElement::from_terms(std::move(terms), n);
}

// The same element as sum_sigma sigma^x(Y_tc) sigma.
inline AlgebraElement build_omega_via_action(const Partition& shape) {
  const int n = shape.weight();
  if (n < 1 || n > kMaxDegree) throw UsageError("build_omega_via_action: n must be in 1.." + std::to_string(kMaxDegree));
  const Polynomial y = specht_generator(shape);
  std::vector<AlgebraElement::Term> terms;
  terms.reserve(factorial(n));
  for (const auto& p : all_permutations(n)) terms.push_back({p, y.permuted(p)});
  return AlgebraElement::from_terms(std::move(terms), n);
}

inline RadicalRational omega_scalar(const Partition& shape) {
  return RadicalRational(Rational(static_cast<std::int64_t>(factorial(shape.weight())),
                                  static_cast<std::int64_t>(count_tableaux(shape))));
}

struct QuasiIdempotentCheck {
  Partition shape;
  bool ok = false;
  bool proportional = false;      // Omega^2 = s Omega for a polynomial s
  Permutation reference;          // where s was read off
  std::optional<Polynomial> measured_scale;
  Polynomial expected_scale;      // (n!/f) Y_tc
  std::string message;
};

// Omega^2 against (n!/f) Y_tc Omega. The scale is extracted by exact division
// at the least permutation where both sides are nonzero, then checked globally
// without storing Omega^2.
inline QuasiIdempotentCheck verify_quasi_idempotent(const Partition& shape) {
  const int n = shape.weight();
  if (n > 6) throw UsageError("verify_quasi_idempotent: n must be at most 6");
  const AlgebraElement omega = build_omega(shape);
  const detail::PooledProduct sq(omega, omega);
  QuasiIdempotentCheck r{shape, false, false, Permutation::identity(n), std::nullopt,
                         omega_scalar(shape) * specht_generator(shape), {}};
  // Omega has full support, so the least such permutation is the least
  // permutation where Omega^2 does not vanish.
  std::optional<Polynomial> ref_coeff;
  for (const auto& t : omega.terms()) {
    auto c = sq.coefficient(t.perm.rank());
    if (c.is_zero()) continue;
    r.reference = t.perm;
    ref_coeff = std::move(c);
    break;
  }
  if (!ref_coeff) {
    r.message = "Omega^2 and Omega have disjoint support";
    return r;
  }
  r.measured_scale = ref_coeff->divide_exact(omega.coefficient(r.reference));
  if (!r.measured_scale) {
    r.message = "coefficient of Omega^2 at " + r.reference.str() + " is not a polynomial multiple of Omega's";
    return r;
  }
  r.proportional = product_equals_scaled(sq, *r.measured_scale, omega);
  if (!r.proportional) {
    r.message = "Omega^2 is not a polynomial multiple of Omega";
    return r;
  }
  r.ok = *r.measured_scale == r.expected_scale;
  if (!r.ok) r.message = "scale " + r.measured_scale->str() + " differs from " + r.expected_scale.str();
  return r;
}

struct DecompositionCheck {
  Partition shape;
  bool young_form_ok = false;  // (f/n!) Omega = sum_t Y_t e_{t,tc}
  bool pair_form_ok = false;   // (f/n!) Omega = (sum_t zeta_t (x) zeta_t) Y_tc e_{tc,tc}
  bool ok() const { return young_form_ok && pair_form_ok; }
};

inline DecompositionCheck verify_decomposition(const Partition& shape) {
  const int n = shape.weight();
  if (n > 5) throw UsageError("verify_decomposition: n must be at most 5");
  const auto tc = first_tableau(shape);
  const AlgebraElement lhs = RadicalRational(Rational(static_cast<std::int64_t>(count_tableaux(shape)),
                                                      static_cast<std::int64_t>(factorial(n)))) *
                             build_omega(shape);
  AlgebraElement young(n);
  PairAlgebraElement zeta_pairs(n);
  for (const auto& t : enumerate_tableaux(shape)) {
    young += young_polynomial(t) * matrix_unit(t, tc);
    const AlgebraElement z = zeta_chain(t, tc);
    zeta_pairs += PairAlgebraElement::tensor(z, z);
  }
  const AlgebraElement seed = specht_generator(shape) * diagonal_unit(tc);
  return {shape, lhs == young, lhs == pair_left_apply(zeta_pairs, seed)};
}

struct SymmetryCheck {
  Partition shape;
  bool invariance_ok = false;   // (s_i (x) s_i) Omega = Omega for every i
  bool alternation_ok = false;  // Omega s_j = -Omega at every Young generator
  bool trivial_absorption_ok = false;  // (e_n^{12}) Omega = Omega
  std::optional<Isotype> isotype{};      // filled for n <= 5
  std::optional<bool> block_absorption_ok{};      // isotype block fixes Omega
  std::optional<bool> other_blocks_vanish{};      // every other block kills Omega (n <= 4)
  std::vector<std::string> failures{};
  bool ok() const {
    return invariance_ok && alternation_ok && trivial_absorption_ok && block_absorption_ok.value_or(true) &&
           other_blocks_vanish.value_or(true);
  }
};

// Block projector (1/f) sum_{t,u} e_{t,u} (x) e_{t,u} of one shape.
inline PairAlgebraElement isotype_block(const Partition& shape) {
  return RadicalRational(Rational(1, static_cast<std::int64_t>(count_tableaux(shape)))) * unit_square_sum(shape);
}

inline SymmetryCheck verify_symmetries(const Partition& shape) {
  const int n = shape.weight();
  if (n > 6) throw UsageError("verify_symmetries: n must be at most 6");
  const AlgebraElement omega = build_omega(shape);
  SymmetryCheck r{shape};

  r.invariance_ok = true;
  for (int i = 1; i < n; ++i) {
    const Permutation s = Permutation::simple(i, n);
    if (!(diagonal_left_apply(AlgebraElement::basis(s), omega) == omega)) {
      r.invariance_ok = false;
      r.failures.push_back("not invariant under s_" + std::to_string(i) + " (x) s_" + std::to_string(i));
    }
  }
  r.alternation_ok = true;
  for (int j : shape.young_generators()) {
    const Permutation s = Permutation::simple(j, n);
    if (!(omega * AlgebraElement::basis(s) == -omega)) {
      r.alternation_ok = false;
      r.failures.push_back("Omega s_" + std::to_string(j) + " differs from -Omega");
    }
  }
  r.trivial_absorption_ok = pair_left_apply(diagonal_symmetrizer(n), omega) == omega;
  if (!r.trivial_absorption_ok) r.failures.push_back("e_n^{12} does not fix Omega");

  if (n <= 5) {
    r.isotype = isotype_of(shape);
    // On the coefficient side the block acts as the central idempotent of the isotype.
    const AlgebraElement central = central_idempotent(r.isotype->columns);
    const AlgebraElement projected =
        omega.map_coefficients([&](const Permutation&, const Polynomial& p) { return act(central, p); });
    bool fixed = projected == omega;
    if (n <= 4) fixed = fixed && pair_left_apply(isotype_block(r.isotype->columns), omega) == omega;
    r.block_absorption_ok = fixed;
    if (!fixed) r.failures.push_back("isotype block " + r.isotype->columns.str() + " does not fix Omega");
    if (n <= 4) {
      bool vanish = true;
      for (const auto& nu : partitions_of(n)) {
        if (nu == r.isotype->columns) continue;
        if (!pair_left_apply(isotype_block(nu), omega).is_zero()) {
          vanish = false;
          r.failures.push_back("block " + nu.str() + " does not annihilate Omega");
        }
      }
      r.other_blocks_vanish = vanish;
    }
  }
  return r;
}

struct OmegaReport {
  Partition shape;
  QuasiIdempotentCheck quasi;
  std::optional<DecompositionCheck> decomposition;
  SymmetryCheck symmetry;
  bool ok() const { return quasi.ok && (!decomposition || decomposition->ok()) && symmetry.ok(); }
};

inline OmegaReport omega_report(const Partition& shape) {
  std::optional<DecompositionCheck> d;
  if (shape.weight() <= 5) d = verify_decomposition(shape);
  return {shape, verify_quasi_idempotent(shape), d, verify_symmetries(shape)};
}

struct SpecializedG {
  Partition shape;
  Partition mu;                    // rows of the diagram
  std::vector<Rational> point;
  AlgebraElement g;
  StandardTableau tc;
  StandardTableau tr;
  AlgebraElement unit;             // e_{tr,tc}
  RadicalRational kappa{};           // g = kappa e_{tr,tc}
  bool proportional = false;
  bool single_tableau = false;
  std::optional<bool> nilpotent{};   // g^2 = 0 when tr != tc
  std::vector<int> w_word{};         // word_between(tc, tr)
  Permutation w{};
  RadicalRational quasi_constant{};  // (w g)^2 = c (w g)
  bool quasi_idempotent = false;
  AlgebraElement idempotent{};       // (w g) / c
  bool idempotent_ok = false;
  std::vector<std::string> failures{};
  bool ok() const { return proportional && nilpotent.value_or(true) && quasi_idempotent && idempotent_ok; }
};

// g_lambda: Omega_lambda at the point x = (0^{mu_1}, 1^{mu_2}, ...) with mu the
// row shape of lambda.
inline SpecializedG specialized_g(const Partition& shape) {
  const int n = shape.weight();
  if (n > 7) throw UsageError("specialized_g: n must be at most 7");
  const Partition mu = shape.conjugate();
  const auto [tc, tr] = extremal_tableaux(shape);
  SpecializedG r{shape, mu, specialization_point(mu), specialize_element(build_omega(shape), mu), tc, tr,
                 matrix_unit(tr, tc)};
  r.w = Permutation::identity(n);
  r.idempotent = AlgebraElement(n);
  r.single_tableau = tc == tr;
  if (r.g.is_zero()) {
    r.failures.push_back("g vanishes");
    return r;
  }
  const auto& ref = r.unit.terms().front();
  r.kappa = r.g.scalar_coefficient(ref.perm) / ref.coeff.constant_value();
  r.proportional = r.g == r.kappa * r.unit;
  if (!r.proportional) {
    r.failures.push_back("g is not proportional to e_{tr,tc}");
    return r;
  }
  if (!r.single_tableau) {
    r.nilpotent = (r.g * r.g).is_zero();
    if (!*r.nilpotent) r.failures.push_back("g^2 is not zero");
    r.w_word = word_between(tc, tr);
    r.w = Permutation::from_word(r.w_word, n);
  }
  const AlgebraElement wg = AlgebraElement::basis(r.w) * r.g;
  const AlgebraElement sq = wg * wg;
  auto it = sq.terms().begin();
  for (; it != sq.terms().end(); ++it)
    if (!wg.coefficient(it->perm).is_zero()) break;
  if (it == sq.terms().end()) {
    r.failures.push_back("(w g)^2 has no overlap with w g");
    return r;
  }
  r.quasi_constant = it->coeff.constant_value() / wg.scalar_coefficient(it->perm);
  r.quasi_idempotent = sq == r.quasi_constant * wg;
  if (!r.quasi_idempotent) {
    r.failures.push_back("w g is not quasi-idempotent");
    return r;
  }
  r.idempotent = r.quasi_constant.inverse() * wg;
  r.idempotent_ok = r.idempotent * r.idempotent == r.idempotent;
  if (!r.idempotent_ok) r.failures.push_back("normalized w g is not idempotent");
  return r;
}

struct WordFormulaCheck {
  AlgebraElement g;
  AlgebraElement word_expansion;  // s2s4s3 (1 + s1s2s3 + s2s4s3 + s2s3s4s1s2s3) A_{S_{3,2}}
  RadicalRational ratio{};          // g = ratio * word_expansion
  bool proportional = false;
  std::size_t support = 0;
  bool unit_coefficients = false;  // all coefficients of the expansion are +1 or -1
  bool right_annihilated = false;  // g (1 + s1) = 0
  bool ok() const { return proportional && support == 48 && unit_coefficients && right_annihilated; }
};

inline WordFormulaCheck verify_g32_word_formula() {
  const int n = 5;
  const Partition shape({3, 2});
  const AlgebraElement g = specialize_element(build_omega(shape), shape.conjugate());
  auto word = [&](std::initializer_list<int> w) { return AlgebraElement::basis(Permutation::from_word(w, n)); };
  const AlgebraElement middle = word({}) + word({1, 2, 3}) + word({2, 4, 3}) + word({2, 3, 4, 1, 2, 3});
  const AlgebraElement expansion = word({2, 4, 3}) * middle * young_subgroup_alternant(shape);
  WordFormulaCheck r{g, expansion};
  r.support = expansion.size();
  r.unit_coefficients = !expansion.is_zero();
  for (const auto& t : expansion.terms()) {
    const RadicalRational c = t.coeff.constant_value();
    r.unit_coefficients = r.unit_coefficients && (c == RadicalRational(1) || c == RadicalRational(-1));
  }
  if (!expansion.is_zero()) {
    const auto& ref = expansion.terms().front();
    r.ratio = g.scalar_coefficient(ref.perm) / ref.coeff.constant_value();
    r.proportional = !r.ratio.is_zero() && g == r.ratio * expansion;
  }
  r.right_annihilated = (g * (AlgebraElement::identity(n) + word({1}))).is_zero();
  return r;
}

// sum_sigma c_sigma y^{code(sigma)} for an element with constant coefficients.
inline Polynomial code_polynomial(const AlgebraElement& a) {
  const int n = a.degree();
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    if (!t.coeff.is_constant()) throw UsageError("code_polynomial: element has non-constant coefficients");
    terms.push_back({Monomial(perm_code(t.perm)), t.coeff.constant_value()});
  }
  return Polynomial::from_terms(std::move(terms), VarFamily::y, n);
}

// p with its monomial content removed and its leading coefficient scaled to 1.
struct NormalizedPolynomial {
  Polynomial normalized;
  Monomial content;
  RadicalRational lead;
};

inline NormalizedPolynomial normalize_polynomial(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("normalize_polynomial: zero polynomial");
  const Monomial m = p.monomial_content();
  const Polynomial q = p.divided_by_monomial(m);
  const RadicalRational lead = q.leading_term().coeff;
  return {lead.inverse() * q, m, lead};
}

struct FactorizationCase {
  Partition shape;
  std::vector<std::string> factors;  // expected product, one factor per entry
  Polynomial computed;               // code polynomial of omega g omega
  Polynomial expected;
  std::size_t term_count = 0;
  std::size_t expected_term_count = 0;
  bool unit_coefficients = false;    // after normalization
  bool matches = false;              // equal after normalization
  RadicalRational scalar{};            // computed = scalar * extra * expected
  std::optional<Monomial> extra{};
  bool ok() const { return matches && unit_coefficients && term_count == expected_term_count; }
};

inline FactorizationCase check_factorization(const Partition& shape, std::vector<std::string> factors,
                                             std::size_t expected_terms) {
  const int n = shape.weight();
  const AlgebraElement g = specialize_element(build_omega(shape), shape.conjugate());
  const AlgebraElement w0 = AlgebraElement::basis(Permutation::longest(n));
  const Polynomial computed = code_polynomial(w0 * g * w0);
  Polynomial expected = Polynomial::constant(RadicalRational(1), VarFamily::y, n);
  for (const auto& f : factors) expected *= Polynomial::parse(f, VarFamily::y, n);
  FactorizationCase c{shape, std::move(factors), computed, expected, computed.size(), expected_terms};
  if (computed.is_zero()) return c;
  const auto nc = normalize_polynomial(computed);
  const auto ne = normalize_polynomial(expected);
  c.unit_coefficients = true;
  for (const auto& t : nc.normalized.terms())
    c.unit_coefficients = c.unit_coefficients && (t.coeff == RadicalRational(1) || t.coeff == RadicalRational(-1));
  c.matches = nc.normalized == ne.normalized;
  c.scalar = nc.lead / ne.lead;
  if (ne.content.divides(nc.content)) c.extra = ne.content.quotient_of(nc.content);
  return c;
}

struct FactorizationReport {
  std::vector<FactorizationCase> cases;
  bool ok() const {
    for (const auto& c : cases)
      if (!c.ok()) return false;
    return !cases.empty();
  }
};

inline FactorizationReport verify_factorized_examples(bool include_n7) {
  FactorizationReport r;
  r.cases.push_back(check_factorization(
      Partition({3, 2}), {"y1*y2", "1 + y1", "1 + y2", "y1^2 - y2", "1 - y3 + y3^2", "y4 - 1"}, 48));
  if (include_n7)
    r.cases.push_back(check_factorization(Partition({4, 2, 1}),
                                          {"y1^4*y2^2*y3^2", "1 + y1 + y1^2", "1 + y2", "1 + y3", "y2^2 - y3",
                                           "1 - y4 + y4^2 - y4^3", "1 - y5 + y5^2", "1 - y6"},
                                          576));
  return r;
}

}  // namespace spechtlab
