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
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "spechtlab/errors.hpp"
#include "spechtlab/permutation.hpp"

namespace spechtlab {

// Weakly decreasing list of positive integers. Throughout the library a
// partition passed as a tableau shape lists COLUMN lengths; the drawn diagram
// has row lengths conjugate().
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "3,2", "[3,2]" or "3 2".
  static Partition parse(std::string_view text) {
    std::string s(text);
    for (char& c : s)
      if (c == '[' || c == ']' || c == ' ') c = ',';
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
      const auto comma = s.find(',', pos);
      const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!tok.empty()) {
        try {
          std::size_t used = 0;
          parts.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw UsageError("bad partition part: " + tok);
        } catch (const std::logic_error&) {
          throw UsageError("bad partition part: '" + tok + "'");
        }
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (parts.empty()) throw UsageError("empty partition");
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    for (int k = 1; k <= parts_.front(); ++k)
      out.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [k](int p) { return p >= k; })));
    return Partition(std::move(out));
  }

  // Positions i with s_i outside the Young subgroup: the block ends
  // lambda_1, lambda_1 + lambda_2, ...
  std::vector<int> block_ends() const {
    std::vector<int> ends;
    int acc = 0;
    for (int p : parts_) ends.push_back(acc += p);
    return ends;
  }

  // s_i generating S_lambda: i not a block end, 1 <= i < n.
  std::vector<int> young_generators() const {
    std::vector<int> gens;
    const auto ends = block_ends();
    for (int i = 1; i < weight(); ++i)
      if (std::find(ends.begin(), ends.end(), i) == ends.end()) gens.push_back(i);
    return gens;
  }

  std::string str() const { return "[" + csv() + "]"; }
  std::string csv() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

// All partitions of n, in reverse lexicographic order ([n] first).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (n > 0) rec(rec, n, n);
  return out;
}

// Number of standard fillings of the diagram with the given ROW lengths,
// n! / prod(hooks).
inline std::uint64_t hook_length_count(const Partition& rows) {
  const Partition cols = rows.conjugate();
  std::uint64_t num = factorial(rows.weight());
  std::uint64_t den = 1;
  for (int i = 0; i < rows.length(); ++i)
    for (int j = 0; j < rows[i]; ++j) den *= static_cast<std::uint64_t>((rows[i] - j - 1) + (cols[j] - i - 1) + 1);
  return num / den;
}

}  // namespace spechtlab
