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
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spechtlab/errors.hpp"
#include "spechtlab/partition.hpp"
#include "spechtlab/permutation.hpp"

namespace spechtlab {

// Standard tableau described column by column, each column listed bottom to
// top (French orientation: row 1 is the bottom row). The shape is the list of
// column lengths. Entries increase up every column and along every row.
class StandardTableau {
 public:
  struct Cell {
    int column;  // 1-based
    int row;     // 1-based, bottom row is 1
  };

  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> columns) : columns_(std::move(columns)) {
    std::vector<int> lengths;
    for (const auto& c : columns_) lengths.push_back(static_cast<int>(c.size()));
    shape_ = Partition(lengths);  // rejects increasing column lengths and empty columns
    n_ = shape_.weight();
    if (n_ > kMaxDegree) throw UsageError("tableau too large");
    cells_.assign(static_cast<std::size_t>(n_) + 1, Cell{0, 0});
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      for (std::size_t k = 0; k < columns_[j].size(); ++k) {
        const int v = columns_[j][k];
        if (v < 1 || v > n_ || cells_[static_cast<std::size_t>(v)].column != 0)
          throw UsageError("tableau entries must be a permutation of 1..n");
        cells_[static_cast<std::size_t>(v)] = {static_cast<int>(j) + 1, static_cast<int>(k) + 1};
        if (k > 0 && columns_[j][k - 1] >= v) throw UsageError("tableau column not increasing: " + str());
        if (j > 0 && columns_[j - 1][k] >= v) throw UsageError("tableau row not increasing: " + str());
      }
    }
  }

  // "1,2,3|4,5": columns separated by '|', entries bottom to top.
  static StandardTableau parse(std::string_view text) {
    std::vector<std::vector<int>> cols;
    std::string s(text);
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    std::size_t pos = 0;
    while (true) {
      const auto bar = s.find('|', pos);
      const std::string col = s.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
      std::vector<int> entries;
      std::size_t p = 0;
      while (p <= col.size()) {
        const auto comma = col.find(',', p);
        const std::string tok = col.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
        try {
          std::size_t used = 0;
          entries.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw UsageError("bad tableau entry: " + tok);
        } catch (const std::logic_error&) {
          throw UsageError("bad tableau entry: '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        p = comma + 1;
      }
      cols.push_back(std::move(entries));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    return StandardTableau(std::move(cols));
  }

  int size() const { return n_; }
  const Partition& shape() const { return shape_; }
  Partition row_shape() const { return shape_.conjugate(); }
  const std::vector<std::vector<int>>& columns() const { return columns_; }
  Cell cell_of(int i) const {
    if (i < 1 || i > n_) throw UsageError("entry out of range: " + std::to_string(i));
    return cells_[static_cast<std::size_t>(i)];
  }
  int entry(int column, int row) const {
    return columns_.at(static_cast<std::size_t>(column - 1)).at(static_cast<std::size_t>(row - 1));
  }

  // column - row of the cell holding i.
  int content(int i) const {
    const Cell c = cell_of(i);
    return c.column - c.row;
  }
  std::vector<int> content_vector() const {
    std::vector<int> v;
    for (int i = 1; i <= n_; ++i) v.push_back(content(i));
    return v;
  }

  // Column reading word, bottom to top, left to right.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (const auto& c : columns_) w.insert(w.end(), c.begin(), c.end());
    return w;
  }

  // Entries relabelled e -> sigma(e), or nullopt when the result is not standard.
  std::optional<StandardTableau> relabelled(const Permutation& sigma) const {
    if (sigma.size() != n_) throw UsageError("relabel: size mismatch");
    auto cols = columns_;
    for (auto& c : cols)
      for (int& e : c) e = sigma(e);
    if (!is_standard(cols)) return std::nullopt;
    return StandardTableau(std::move(cols));
  }

  // s_i t: swap entries i and i+1 if that leaves a standard tableau.
  std::optional<StandardTableau> apply_transposition(int i) const {
    if (i < 1 || i >= n_) throw UsageError("transposition index out of range");
    const Cell a = cells_[static_cast<std::size_t>(i)];
    const Cell b = cells_[static_cast<std::size_t>(i + 1)];
    if (a.column == b.column || a.row == b.row) return std::nullopt;
    StandardTableau t = *this;
    t.columns_[static_cast<std::size_t>(a.column - 1)][static_cast<std::size_t>(a.row - 1)] = i + 1;
    t.columns_[static_cast<std::size_t>(b.column - 1)][static_cast<std::size_t>(b.row - 1)] = i;
    std::swap(t.cells_[static_cast<std::size_t>(i)], t.cells_[static_cast<std::size_t>(i + 1)]);
    return t;
  }

  // Drops the entry n (a corner cell); n >= 2.
  StandardTableau restricted() const {
    if (n_ < 2) throw UsageError("cannot restrict a one-box tableau");
    auto cols = columns_;
    const Cell c = cells_[static_cast<std::size_t>(n_)];
    cols[static_cast<std::size_t>(c.column - 1)].pop_back();
    if (cols.back().empty()) cols.pop_back();
    return StandardTableau(std::move(cols));
  }

  std::string str() const {
    std::string s;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (j) s += "|";
      for (std::size_t k = 0; k < columns_[j].size(); ++k) s += (k ? "," : "") + std::to_string(columns_[j][k]);
    }
    return s;
  }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.columns_ == b.columns_; }
  // Shape first, then column reading word.
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.reading_word() <=> b.reading_word();
  }

 private:
  static bool is_standard(const std::vector<std::vector<int>>& cols) {
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t k = 0; k < cols[j].size(); ++k) {
        if (k > 0 && cols[j][k - 1] >= cols[j][k]) return false;
        if (j > 0 && cols[j - 1][k] >= cols[j][k]) return false;
      }
    return true;
  }

  std::vector<std::vector<int>> columns_;
  Partition shape_;
  int n_ = 0;
  std::vector<Cell> cells_;
};

// Every standard tableau with the given column lengths, sorted by column
// reading word.
inline std::vector<StandardTableau> enumerate_tableaux(const Partition& shape) {
  if (shape.empty()) throw UsageError("enumerate_tableaux: empty shape");
  const int n = shape.weight();
  if (n > kMaxDegree) throw UsageError("shape too large");
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape.length()));
  std::vector<StandardTableau> out;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.emplace_back(cols);
      return;
    }
    for (int j = 0; j < shape.length(); ++j) {
      const auto h = cols[static_cast<std::size_t>(j)].size();
      if (static_cast<int>(h) >= shape[j]) continue;
      if (j > 0 && cols[static_cast<std::size_t>(j - 1)].size() <= h) continue;
      cols[static_cast<std::size_t>(j)].push_back(next);
      self(self, next + 1);
      cols[static_cast<std::size_t>(j)].pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t count_tableaux(const Partition& shape) { return enumerate_tableaux(shape).size(); }

// tc: consecutive integers up each column, columns left to right.
inline StandardTableau first_tableau(const Partition& shape) {
  std::vector<std::vector<int>> cols;
  int next = 1;
  for (int len : shape.parts()) {
    cols.emplace_back();
    for (int k = 0; k < len; ++k) cols.back().push_back(next++);
  }
  return StandardTableau(std::move(cols));
}

// tr: consecutive integers along each row, rows bottom to top.
inline StandardTableau last_tableau(const Partition& shape) {
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape.length()));
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j].resize(static_cast<std::size_t>(shape[static_cast<int>(j)]));
  int next = 1;
  const Partition rows = shape.conjugate();
  for (int k = 0; k < rows.length(); ++k)
    for (int j = 0; j < rows[k]; ++j) cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = next++;
  return StandardTableau(std::move(cols));
}

struct ExtremalTableaux {
  StandardTableau tc;
  StandardTableau tr;
};

inline ExtremalTableaux extremal_tableaux(const Partition& shape) {
  if (shape.empty()) throw UsageError("extremal_tableaux: empty shape");
  return {first_tableau(shape), last_tableau(shape)};
}

// Indices [i, j, ..., k] with s_i s_j ... s_k u = t, from a breadth-first
// search of the adjacent-transposition graph (so the word is shortest).
// Neighbours are explored in increasing i, which makes the result unique.
inline std::vector<int> word_between(const StandardTableau& t, const StandardTableau& u) {
  if (t.shape() != u.shape()) throw UsageError("word_between: shapes differ");
  if (t == u) return {};
  std::map<std::vector<int>, std::pair<std::vector<int>, int>> parent;  // word -> (previous word, move)
  std::deque<StandardTableau> queue{u};
  parent.emplace(u.reading_word(), std::make_pair(std::vector<int>{}, 0));
  const auto target = t.reading_word();
  while (!queue.empty()) {
    const StandardTableau cur = queue.front();
    queue.pop_front();
    for (int i = 1; i < cur.size(); ++i) {
      auto next = cur.apply_transposition(i);
      if (!next) continue;
      auto key = next->reading_word();
      if (parent.count(key)) continue;
      parent.emplace(key, std::make_pair(cur.reading_word(), i));
      if (key == target) {
        // Moves were applied to u in path order; the word lists them last-first.
        std::vector<int> word;
        for (auto k = key; k != u.reading_word(); k = parent.at(k).first) word.push_back(parent.at(k).second);
        return word;
      }
      queue.push_back(std::move(*next));
    }
  }
  throw VerificationFailure("word_between: tableaux not connected (should not happen)");
}

}  // namespace spechtlab
