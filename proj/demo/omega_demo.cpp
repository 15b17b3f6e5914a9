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

// Walks through Omega for the shape with column lengths (2,2): the element
// itself, its square, the Young-basis reconstruction and the specialization.

#include <iostream>

#include "spechtlab.hpp"

using namespace spechtlab;

int main() {
  const Partition shape({2, 2});
  const auto omega = build_omega(shape);
  std::cout << "Omega has " << omega.size() << " terms; coefficient at the identity: "
            << omega.coefficient(Permutation::identity(4)).str() << "\n";

  const auto q = verify_quasi_idempotent(shape);
  std::cout << "Omega^2 = (" << (q.measured_scale ? q.measured_scale->str() : "?") << ") Omega: "
            << (q.ok ? "verified" : q.message) << "\n";

  const auto [tc, tr] = extremal_tableaux(shape);
  std::cout << "tableaux: tc = " << tc.str() << ", tr = " << tr.str() << "\n";
  for (const auto& t : enumerate_tableaux(shape))
    std::cout << "  Y_" << t.str() << " = " << young_polynomial(t).str() << "\n";
  std::cout << "(f/n!) Omega = sum_t Y_t e_{t,tc}: " << (verify_decomposition(shape).ok() ? "verified" : "FAILED")
            << "\n";

  const auto g = specialized_g(shape);
  std::cout << "at x = (0,0,1,1): g = " << g.kappa.str() << " e_{tr,tc}, g^2 = 0: "
            << (g.nilpotent.value_or(false) ? "yes" : "no") << ", (w g)^2 = " << g.quasi_constant.str()
            << " (w g) with w = " << g.w.str() << "\n";
  return q.ok && g.ok() ? 0 : 1;
}
