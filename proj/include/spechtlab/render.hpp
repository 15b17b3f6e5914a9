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

// JSON forms of the domain values. Every scalar is an exact string.

#include <nlohmann/json.hpp>

#include "spechtlab/omega.hpp"
#include "spechtlab/young_units.hpp"

namespace spechtlab::json {

using nlohmann::json;

inline json to_json(const Rational& q) { return q.str(); }
inline json to_json(const RadicalRational& r) { return r.str(); }
inline json to_json(const Permutation& p) { return p.one_line(); }
inline json to_json(const Partition& p) { return p.parts(); }
inline json to_json(const Monomial& m) { return m.exponents(); }

inline json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"exponents", t.mono.exponents()}, {"coeff", t.coeff.str()}});
  return {{"family", std::string(1, family_letter(p.family()))}, {"n", p.arity()}, {"terms", terms}, {"text", p.str()}};
}

inline json to_json(const AlgebraElement& a) {
  json terms = json::array();
  for (const auto& t : a.terms()) terms.push_back({{"perm", t.perm.one_line()}, {"coeff", t.coeff.str()}});
  return {{"n", a.degree()}, {"terms", terms}};
}

inline json to_json(const StandardTableau& t) {
  return {{"columns", t.columns()}, {"text", t.str()}, {"contents", t.content_vector()}};
}

inline json to_json(const QuasiIdempotentCheck& q) {
  return {{"lambda", to_json(q.shape)},
          {"ok", q.ok},
          {"proportional", q.proportional},
          {"reference", to_json(q.reference)},
          {"measured_scale", q.measured_scale ? json(q.measured_scale->str()) : json(nullptr)},
          {"expected_scale", q.expected_scale.str()},
          {"message", q.message}};
}

inline json to_json(const DecompositionCheck& d) {
  return {{"lambda", to_json(d.shape)}, {"ok", d.ok()}, {"young_form", d.young_form_ok}, {"zeta_pair_form", d.pair_form_ok}};
}

inline json to_json(const SymmetryCheck& s) {
  json j = {{"lambda", to_json(s.shape)},
            {"ok", s.ok()},
            {"invariance", s.invariance_ok},
            {"alternation", s.alternation_ok},
            {"trivial_absorption", s.trivial_absorption_ok},
            {"failures", s.failures}};
  if (s.isotype) j["isotype"] = {{"columns", to_json(s.isotype->columns)}, {"rows", to_json(s.isotype->rows)}};
  if (s.block_absorption_ok) j["isotype_block_absorption"] = *s.block_absorption_ok;
  if (s.other_blocks_vanish) j["other_blocks_vanish"] = *s.other_blocks_vanish;
  return j;
}

inline json to_json(const OmegaReport& r) {
  json j = {{"lambda", to_json(r.shape)}, {"ok", r.ok()}, {"quasi", to_json(r.quasi)}, {"symmetry", to_json(r.symmetry)}};
  if (r.decomposition) j["decomposition"] = to_json(*r.decomposition);
  return j;
}

inline json to_json(const SpecializedG& g) {
  json j = {{"lambda", to_json(g.shape)},
            {"mu", to_json(g.mu)},
            {"point", json::array()},
            {"ok", g.ok()},
            {"terms", g.g.size()},
            {"tc", g.tc.str()},
            {"tr", g.tr.str()},
            {"kappa", g.kappa.str()},
            {"proportional", g.proportional},
            {"single_tableau", g.single_tableau},
            {"w_word", g.w_word},
            {"w", to_json(g.w)},
            {"quasi_constant", g.quasi_constant.str()},
            {"quasi_idempotent", g.quasi_idempotent},
            {"idempotent", g.idempotent_ok},
            {"failures", g.failures}};
  for (const auto& x : g.point) j["point"].push_back(x.str());
  if (g.nilpotent) j["nilpotent"] = *g.nilpotent;
  return j;
}

inline json to_json(const FactorizationCase& c) {
  return {{"lambda", to_json(c.shape)},
          {"ok", c.ok()},
          {"factors", c.factors},
          {"terms", c.term_count},
          {"expected_terms", c.expected_term_count},
          {"unit_coefficients", c.unit_coefficients},
          {"matches", c.matches},
          {"scalar", c.scalar.str()},
          {"extra_monomial", c.extra ? json(c.extra->str(VarFamily::y)) : json(nullptr)}};
}

inline json to_json(const PairDecompositionReport& r) {
  json constants = json::array();
  for (const auto& c : r.constants)
    constants.push_back({{"lambda", to_json(c.shape)},
                         {"measured", c.measured.str()},
                         {"expected", c.expected.str()},
                         {"uniform", c.uniform}});
  return {{"n", r.n}, {"ok", r.ok()}, {"identity", r.identity_ok}, {"sandwich", r.sandwich_ok},
          {"constants", constants}, {"failures", r.failures}};
}

}  // namespace spechtlab::json
