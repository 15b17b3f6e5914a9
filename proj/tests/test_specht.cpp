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

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace spechtlab;

namespace {

Polynomial px(std::string_view text, int n) { return Polynomial::parse(text, VarFamily::x, n); }

// prod_{i<j} (x_{a_i} - x_{a_j}) by direct expansion of the double product.
Polynomial vandermonde_oracle(const std::vector<int>& a, int n) {
  Polynomial p = px("1", n);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      p = p * px("x" + std::to_string(a[i]) + " - x" + std::to_string(a[j]), n);
  return p;
}

}  // namespace

TEST_CASE("Vandermonde products", "[specht]") {
  CHECK(vandermonde({}, 3) == px("1", 3));
  CHECK(vandermonde({2}, 3) == px("1", 3));
  CHECK(vandermonde({1, 2}, 2) == px("x1 - x2", 2));
  CHECK(vandermonde({1, 2, 3}, 3) == px("x1 - x2", 3) * px("x1 - x3", 3) * px("x2 - x3", 3));
  CHECK(vandermonde({3, 1}, 3) == px("x3 - x1", 3));
  CHECK(vandermonde({4, 2, 5}, 5) == vandermonde_oracle({4, 2, 5}, 5));
  CHECK_THROWS_AS(vandermonde({1, 1}, 3), UsageError);
  CHECK_THROWS_AS(vandermonde({0, 1}, 3), UsageError);
  CHECK_THROWS_AS(vandermonde({1, 4}, 3), UsageError);
}

TEST_CASE("Delta_lambda cuts the one-line word into blocks", "[specht]") {
  CHECK(delta_lambda(Partition({2}), Permutation({2, 1})) == px("x2 - x1", 2));
  CHECK(delta_lambda(Partition({1, 1}), Permutation({2, 1})) == px("1", 2));
  CHECK(delta_lambda(Partition({2, 1}), Permutation({3, 1, 2})) == px("x3 - x1", 3));
  CHECK(delta_lambda(Partition({3, 2}), Permutation::identity(5)) ==
        vandermonde_oracle({1, 2, 3}, 5) * vandermonde_oracle({4, 5}, 5));
  CHECK_THROWS_AS(delta_lambda(Partition({2, 1}), Permutation({2, 1})), UsageError);

  for (int n = 2; n <= 5; ++n)
    for (const auto& shape : partitions_of(n)) {
      const auto y = specht_generator(shape);
      // Generators s_j that stay inside one block.
      std::vector<int> inner;
      int start = 1;
      for (int len : shape.parts()) {
        for (int j = start; j < start + len - 1; ++j) inner.push_back(j);
        start += len;
      }
      for (const auto& sigma : all_permutations(n)) {
        const auto d = delta_lambda(shape, sigma);
        CHECK(d == y.permuted(sigma));
        CHECK(d == oracle::naive_permute(y, sigma.one_line()));
        for (int j : inner) CHECK(delta_lambda(shape, sigma * Permutation::simple(j, n)) == -d);
      }
    }
}

TEST_CASE("Specht polynomials are column Vandermondes", "[specht]") {
  const auto tr = last_tableau(Partition({3, 2}));
  CHECK(specht_polynomial(tr) == vandermonde_oracle({1, 3, 5}, 5) * vandermonde_oracle({2, 4}, 5));
  CHECK(specht_polynomial(first_tableau(Partition({3, 2}))) == specht_generator(Partition({3, 2})));
  // Y_t = sigma^x Y_tc where sigma sends the entries of tc to those of t.
  for (int n = 2; n <= 6; ++n)
    for (const auto& shape : partitions_of(n)) {
      const auto tc = first_tableau(shape);
      for (const auto& t : enumerate_tableaux(shape)) {
        std::vector<int> img(static_cast<std::size_t>(n));
        const auto from = tc.reading_word();
        const auto to = t.reading_word();
        for (std::size_t k = 0; k < from.size(); ++k) img[static_cast<std::size_t>(from[k] - 1)] = to[k];
        CHECK(specht_polynomial(t) == specht_generator(shape).permuted(Permutation(img)));
      }
    }
}

TEST_CASE("Young polynomial for [2,2]", "[specht]") {
  const Partition shape({2, 2});
  const auto y = specht_generator(shape);
  CHECK(y == px("x1 - x2", 4) * px("x3 - x4", 4));
  const auto other = StandardTableau::parse("1,3|2,4");
  const auto zeta = sqrt_of_positive_rational(Rational(3, 4)).inverse() *
                    (AlgebraElement::basis(Permutation::simple(2, 4)) - AlgebraElement::scalar(Rational(1, 2), 4));
  CHECK(young_polynomial(other) == act(zeta, y));
  CHECK(young_polynomial(first_tableau(shape)) == y);
}

TEST_CASE("Specht and Young bases span a space of dimension f", "[specht]") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& shape : partitions_of(n)) {
      const auto f = count_tableaux(shape);
      std::vector<Polynomial> specht;
      std::vector<Polynomial> young;
      for (const auto& v : specht_basis(shape)) specht.push_back(v.polynomial);
      for (const auto& v : young_basis(shape)) young.push_back(v.polynomial);
      CHECK(polynomial_rank(specht) == f);
      CHECK(polynomial_rank(young) == f);
      CHECK(specht_span_rank(shape) == f);
      // Each Young vector lies in the Specht span. Young vectors can carry a
      // radical, so membership is tested one vector at a time after scaling
      // to a rational multiple.
      for (const auto& yv : young) {
        const auto lead = yv.terms().front().coeff;
        auto scaled = specht;
        scaled.push_back(yv * lead.inverse());
        CHECK(polynomial_rank(scaled) == f);
      }
    }
  CHECK_THROWS_AS(polynomial_rank({px("1", 2), Polynomial::constant(sqrt_of_positive_rational(Rational(2)), VarFamily::x, 2) + px("x1", 2)}),
                  UsageError);
}

TEST_CASE("isotype of the Specht generator", "[specht]") {
  const auto two = isotype_of(Partition({2}));
  CHECK(two.columns == Partition({2}));
  CHECK(two.rows == Partition({1, 1}));
  const auto pair = isotype_of(Partition({1, 1}));
  CHECK(pair.columns == Partition({1, 1}));
  CHECK(pair.rows == Partition({2}));
  const auto hook = isotype_of(Partition({2, 1}));
  CHECK(hook.columns == Partition({2, 1}));
  CHECK(hook.rows == Partition({2, 1}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& shape : partitions_of(n)) {
      const auto iso = isotype_of(shape);
      CHECK(iso.columns == shape);
      CHECK(iso.rows == shape.conjugate());
    }
  CHECK_THROWS_AS(isotype_of(Partition({3, 3})), UsageError);
}

TEST_CASE("specialization", "[specht]") {
  const auto pt = specialization_point(Partition({2, 2, 1}));
  CHECK(pt == std::vector<Rational>{0, 0, 1, 1, 2});
  CHECK(specialization_point(Partition({1, 1, 1})) == std::vector<Rational>{0, 1, 2});

  const auto g2 = specialize_element(build_omega(Partition({2})), Partition({1, 1}));
  CHECK(g2 == AlgebraElement::basis(Permutation::simple(1, 2)) - AlgebraElement::identity(2));
  CHECK_THROWS_AS(specialize_element(build_omega(Partition({2})), Partition({1, 1, 1})), UsageError);

  // Column (3,2): of the five Specht polynomials only tr survives at (0,0,1,1,2).
  const Partition shape({3, 2});
  const auto tr = last_tableau(shape);
  for (const auto& v : specht_basis(shape)) {
    const auto value = v.polynomial.evaluate(pt);
    if (v.tableau == tr) CHECK(value == RadicalRational(2));
    else CHECK(value.is_zero());
  }
}
