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

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "spechtlab/omega.hpp"
#include "spechtlab/specht.hpp"
#include "spechtlab/young_units.hpp"

namespace spechtlab {

struct CheckResult {
  std::string name;
  int n = 0;
  std::string lambda;  // empty for checks over all of S_n
  bool ok = false;
  double seconds = 0;
  std::string detail;
};

struct SelfTestReport {
  int max_n = 0;
  bool slow = false;
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

namespace detail {

// Runs body and records its verdict; exceptions count as failures.
inline void run_check(SelfTestReport& report, std::string name, int n, std::string lambda,
                      const std::function<bool(std::string&)>& body) {
  CheckResult c{std::move(name), n, std::move(lambda)};
  const auto start = std::chrono::steady_clock::now();
  try {
    c.ok = body(c.detail);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.checks.push_back(std::move(c));
}

inline bool check_units_relations(int n, std::string& detail) {
  for (const auto& shape : partitions_of(n)) {
    const auto tabs = enumerate_tableaux(shape);
    for (const auto& t : tabs)
      for (const auto& u : tabs)
        for (const auto& v : tabs)
          for (const auto& w : tabs) {
            const AlgebraElement p = matrix_unit(t, u) * matrix_unit(v, w);
            if (u == v ? !(p == matrix_unit(t, w)) : !p.is_zero()) {
              detail = "e_{" + t.str() + "," + u.str() + "} e_{" + v.str() + "," + w.str() + "}";
              return false;
            }
          }
  }
  return true;
}

inline bool check_jm_eigenvalues(int n, std::string& detail) {
  for (const auto& shape : partitions_of(n)) {
    const auto tabs = enumerate_tableaux(shape);
    for (const auto& t : tabs)
      for (const auto& u : tabs) {
        const AlgebraElement e = matrix_unit(t, u);
        for (int k = 1; k <= n; ++k) {
          const AlgebraElement x = jucys_murphy(n, k);
          if (!(x * e == RadicalRational(t.content(k)) * e) || !(e * x == RadicalRational(u.content(k)) * e)) {
            detail = "X_" + std::to_string(k) + " on e_{" + t.str() + "," + u.str() + "}";
            return false;
          }
        }
      }
  }
  return true;
}

inline bool check_identity_decomposition(int n, std::string& detail) {
  AlgebraElement sum(n);
  std::vector<AlgebraElement> diag;
  for (const auto& shape : partitions_of(n))
    for (const auto& t : enumerate_tableaux(shape)) diag.push_back(diagonal_unit(t));
  for (std::size_t i = 0; i < diag.size(); ++i) {
    sum += diag[i];
    if (!(diag[i] * diag[i] == diag[i])) {
      detail = "diagonal unit " + std::to_string(i) + " not idempotent";
      return false;
    }
    for (std::size_t j = 0; j < diag.size(); ++j)
      if (i != j && !(diag[i] * diag[j]).is_zero()) {
        detail = "diagonal units not orthogonal";
        return false;
      }
  }
  if (!(sum == AlgebraElement::identity(n))) {
    detail = "sum of diagonal units differs from 1";
    return false;
  }
  return true;
}

}  // namespace detail

// The invariant battery for every partition of each n <= max_n. Costs grow
// with n, so several families stop at 5; slow extends to the n = 6 theorem
// and the n = 7 code polynomial.
inline SelfTestReport run_selftest(int max_n, bool slow) {
  if (max_n < 2 || max_n > 7) throw UsageError("selftest: max-n must be in 2..7");
  SelfTestReport report{max_n, slow, {}};
  using detail::run_check;
  for (int n = 1; n <= max_n; ++n) {
    run_check(report, "tableau_count_hook_length", n, "", [&](std::string& d) {
      std::uint64_t total = 0;
      for (const auto& shape : partitions_of(n)) {
        const auto f = count_tableaux(shape);
        if (f != hook_length_count(shape.conjugate())) {
          d = "count differs for " + shape.str();
          return false;
        }
        total += f * f;
      }
      d = "sum f^2 = " + std::to_string(total);
      return total == factorial(n);
    });
    if (n <= 5) {
      run_check(report, "identity_decomposition", n, "", [&](std::string& d) {
        return detail::check_identity_decomposition(n, d);
      });
      run_check(report, "jm_eigenvalues", n, "", [&](std::string& d) { return detail::check_jm_eigenvalues(n, d); });
    }
    if (n <= 4) {
      run_check(report, "matrix_unit_relations", n, "", [&](std::string& d) {
        return detail::check_units_relations(n, d);
      });
      run_check(report, "pair_decomposition", n, "", [&](std::string& d) {
        const auto r = verify_pair_decomposition(n);
        if (!r.failures.empty()) d = r.failures.front();
        return r.ok();
      });
    }
    for (const auto& shape : partitions_of(n)) {
      const std::string lam = shape.csv();
      const bool theorem_range = n <= 5 || (n == 6 && slow);
      if (n <= 6) {
        run_check(report, "omega_two_routes", n, lam, [&](std::string&) {
          return build_omega(shape) == build_omega_via_action(shape);
        });
      }
      if (n <= 5) {
        run_check(report, "specht_rank", n, lam, [&](std::string& d) {
          const auto f = count_tableaux(shape);
          std::vector<Polynomial> specht;
          std::vector<Polynomial> young;
          for (const auto& v : specht_basis(shape)) specht.push_back(v.polynomial);
          for (const auto& v : young_basis(shape)) young.push_back(v.polynomial);
          const auto rs = polynomial_rank(specht);
          const auto ry = polynomial_rank(young);
          const auto span = specht_span_rank(shape);
          d = "f=" + std::to_string(f) + " specht=" + std::to_string(rs) + " young=" + std::to_string(ry) +
              " span=" + std::to_string(span);
          return rs == f && ry == f && span == f;
        });
        run_check(report, "decomposition", n, lam, [&](std::string&) { return verify_decomposition(shape).ok(); });
      }
      if (theorem_range) {
        run_check(report, "quasi_idempotent", n, lam, [&](std::string& d) {
          const auto q = verify_quasi_idempotent(shape);
          d = q.ok ? "scale " + q.measured_scale->str() : q.message;
          return q.ok;
        });
        run_check(report, "symmetries", n, lam, [&](std::string& d) {
          const auto s = verify_symmetries(shape);
          if (s.isotype) d = "isotype columns " + s.isotype->columns.str() + " rows " + s.isotype->rows.str();
          if (!s.failures.empty()) d = s.failures.front();
          return s.ok();
        });
      }
      if (n <= 5 || (n == 6 && slow)) {
        run_check(report, "specialized_g", n, lam, [&](std::string& d) {
          const auto g = specialized_g(shape);
          d = "kappa " + g.kappa.str() + ", quasi constant " + g.quasi_constant.str();
          if (!g.failures.empty()) d = g.failures.front();
          return g.ok();
        });
      }
    }
    if (n == 5) {
      run_check(report, "g32_word_formula", n, "3,2", [&](std::string& d) {
        const auto w = verify_g32_word_formula();
        d = "ratio " + w.ratio.str() + ", support " + std::to_string(w.support);
        return w.ok();
      });
      run_check(report, "code_polynomial", n, "3,2", [&](std::string& d) {
        const auto r = verify_factorized_examples(false);
        d = "scalar " + r.cases.front().scalar.str();
        return r.ok();
      });
    }
    if (n == 7 && slow) {
      run_check(report, "specialized_g", n, "4,2,1", [&](std::string& d) {
        const auto g = specialized_g(Partition({4, 2, 1}));
        d = "kappa " + g.kappa.str() + ", quasi constant " + g.quasi_constant.str();
        return g.ok();
      });
      run_check(report, "code_polynomial", n, "4,2,1", [&](std::string& d) {
        const auto r = verify_factorized_examples(true);
        d = "scalar " + r.cases.back().scalar.str();
        return r.ok() && r.cases.size() == 2;
      });
    }
  }
  return report;
}

}  // namespace spechtlab
