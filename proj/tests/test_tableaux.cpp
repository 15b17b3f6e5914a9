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

#include <deque>
#include <set>

#include "oracles.hpp"

using namespace spechtlab;

namespace {

// Hook-length formula on the row shape, computed from scratch.
std::uint64_t hook_formula(const Partition& columns) {
  const auto& c = columns.parts();
  std::vector<int> rows;
  for (int r = 1; r <= c.front(); ++r) {
    int len = 0;
    for (int x : c) len += x >= r;
    rows.push_back(len);
  }
  boost::multiprecision::cpp_int num = 1;
  for (int i = 2; i <= columns.weight(); ++i) num *= i;
  boost::multiprecision::cpp_int den = 1;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < rows[r]; ++j) {
      const int arm = rows[r] - j - 1;
      const int leg = c[static_cast<std::size_t>(j)] - static_cast<int>(r) - 1;
      den *= arm + leg + 1;
    }
  return static_cast<std::uint64_t>(num / den);
}

// Every permutation of 1..n poured into the columns, kept if standard.
std::set<std::string> brute_force_tableaux(const Partition& shape) {
  std::set<std::string> out;
  for (const auto& p : all_permutations(shape.weight())) {
    const auto w = p.one_line();
    std::vector<std::vector<int>> cols;
    std::size_t pos = 0;
    for (int len : shape.parts()) {
      cols.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + len));
      pos += static_cast<std::size_t>(len);
    }
    bool ok = true;
    for (std::size_t j = 0; j < cols.size() && ok; ++j)
      for (std::size_t k = 0; k < cols[j].size() && ok; ++k) {
        if (k > 0 && cols[j][k - 1] > cols[j][k]) ok = false;
        if (j > 0 && cols[j - 1][k] > cols[j][k]) ok = false;
      }
    if (ok) out.insert(StandardTableau(cols).str());
  }
  return out;
}

}  // namespace

TEST_CASE("partitions", "[tableaux]") {
  CHECK(Partition::parse("3,2") == Partition({3, 2}));
  CHECK(Partition::parse("[3,2]") == Partition({3, 2}));
  CHECK(Partition({3, 2}).conjugate() == Partition({2, 2, 1}));
  CHECK(Partition({3, 2}).young_generators() == std::vector<int>{1, 2, 4});
  CHECK(Partition({1, 1}).young_generators().empty());
  CHECK_THROWS_AS(Partition::parse("2,3"), UsageError);
  CHECK_THROWS_AS(Partition::parse("2,0"), UsageError);
  CHECK_THROWS_AS(Partition::parse("a"), UsageError);
  const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) {
    const auto parts = partitions_of(n);
    CHECK(parts.size() == expected[n]);
    for (const auto& p : parts) {
      CHECK(p.weight() == n);
      CHECK(p.conjugate().conjugate() == p);
      CHECK(Partition::parse(p.csv()) == p);
      CHECK(Partition::parse(p.str()) == p);
    }
  }
}

TEST_CASE("extremal tableaux of columns (3,2)", "[tableaux]") {
  const auto [tc, tr] = extremal_tableaux(Partition({3, 2}));
  CHECK(tc.str() == "1,2,3|4,5");
  CHECK(tr.str() == "1,3,5|2,4");
  CHECK(tr.row_shape() == Partition({2, 2, 1}));
  const auto single = extremal_tableaux(Partition({4}));
  CHECK(single.tc == single.tr);
}

TEST_CASE("enumeration of small shapes", "[tableaux]") {
  const auto tabs = enumerate_tableaux(Partition({3, 2}));
  std::vector<std::string> text;
  for (const auto& t : tabs) text.push_back(t.str());
  CHECK(text == std::vector<std::string>{"1,2,3|4,5", "1,2,4|3,5", "1,2,5|3,4", "1,3,4|2,5", "1,3,5|2,4"});
  CHECK(enumerate_tableaux(Partition({1, 1})).size() == 1);
  CHECK(enumerate_tableaux(Partition({1, 1})).front().str() == "1|2");
  CHECK(count_tableaux(Partition({2, 2, 1})) == 5);
  CHECK(count_tableaux(Partition({1, 1, 1, 1})) == 1);
  CHECK(count_tableaux(Partition({4})) == 1);
}

TEST_CASE("tableau counts: enumeration, brute force and hook lengths", "[tableaux]") {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t squares = 0;
    for (const auto& shape : partitions_of(n)) {
      const auto tabs = enumerate_tableaux(shape);
      CHECK(tabs.size() == hook_formula(shape));
      CHECK(tabs.size() == hook_formula(shape.conjugate()));
      CHECK(hook_length_count(shape.conjugate()) == tabs.size());
      CHECK(std::is_sorted(tabs.begin(), tabs.end()));
      if (n <= 7) {
        std::set<std::string> mine;
        for (const auto& t : tabs) mine.insert(t.str());
        CHECK(mine == brute_force_tableaux(shape));
      }
      squares += tabs.size() * tabs.size();
    }
    CHECK(squares == factorial(n));
  }
}

TEST_CASE("contents", "[tableaux]") {
  const auto tc22 = first_tableau(Partition({2, 2}));
  CHECK(tc22.content(2) == -1);
  CHECK(tc22.content(3) == 1);
  const auto tc32 = first_tableau(Partition({3, 2}));
  CHECK(tc32.content(3) == -2);
  CHECK(tc32.content(4) == 1);
  for (const auto& t : enumerate_tableaux(Partition({3, 2, 1}))) CHECK(t.content(1) == 0);
  CHECK_THROWS_AS(tc22.content(5), UsageError);
  CHECK_THROWS_AS(tc22.content(0), UsageError);
}

TEST_CASE("content vectors separate tableaux", "[tableaux]") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> seen;
    std::size_t total = 0;
    for (const auto& shape : partitions_of(n))
      for (const auto& t : enumerate_tableaux(shape)) {
        seen.insert(t.content_vector());
        ++total;
      }
    CHECK(seen.size() == total);
  }
}

TEST_CASE("adjacent transpositions", "[tableaux]") {
  const auto tc = first_tableau(Partition({3, 2}));
  const auto moved = tc.apply_transposition(3);
  REQUIRE(moved.has_value());
  CHECK(moved->str() == "1,2,4|3,5");
  CHECK_FALSE(tc.apply_transposition(1).has_value());
  CHECK_FALSE(tc.apply_transposition(4).has_value());
  CHECK(moved->apply_transposition(3).value() == tc);
}

TEST_CASE("transposition graph is connected with axial distance at least 2", "[tableaux]") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : partitions_of(n)) {
      const auto tabs = enumerate_tableaux(shape);
      std::set<std::string> reached{tabs.front().str()};
      std::deque<StandardTableau> queue{tabs.front()};
      while (!queue.empty()) {
        const auto t = queue.front();
        queue.pop_front();
        for (int i = 1; i < n; ++i) {
          const auto u = t.apply_transposition(i);
          if (!u) continue;
          CHECK(std::abs(t.content(i) - t.content(i + 1)) >= 2);
          if (reached.insert(u->str()).second) queue.push_back(*u);
        }
      }
      CHECK(reached.size() == tabs.size());
    }
}

TEST_CASE("connecting words", "[tableaux]") {
  const auto [tc, tr] = extremal_tableaux(Partition({3, 2}));
  CHECK(word_between(tc, tc).empty());
  CHECK(word_between(*tc.apply_transposition(3), tc) == std::vector<int>{3});
  // tr is reached from tc by the relabelling s2 s4 s3, and tc from tr by s3 s2 s4.
  CHECK(Permutation::from_word(word_between(tr, tc), 5) == Permutation::from_word({2, 4, 3}, 5));
  CHECK(Permutation::from_word(word_between(tc, tr), 5) == Permutation::from_word({3, 2, 4}, 5));

  for (int n = 2; n <= 6; ++n)
    for (const auto& shape : partitions_of(n)) {
      const auto tabs = enumerate_tableaux(shape);
      for (const auto& t : tabs)
        for (const auto& u : tabs) {
          const auto w = word_between(t, u);
          // Apply the moves to u in reverse order of the word.
          StandardTableau cur = u;
          for (auto it = w.rbegin(); it != w.rend(); ++it) {
            auto next = cur.apply_transposition(*it);
            REQUIRE(next.has_value());
            cur = *next;
          }
          CHECK(cur == t);
          // The relabelling by the product permutation gives the same tableau.
          CHECK(u.relabelled(Permutation::from_word(w, n)).value() == t);
        }
    }
}

TEST_CASE("tableau validation and text round trip", "[tableaux]") {
  CHECK_THROWS_AS(StandardTableau::parse("1,4|2,3"), UsageError);
  CHECK_THROWS_AS(StandardTableau::parse("2,1"), UsageError);
  CHECK_THROWS_AS(StandardTableau::parse("1,2|4"), UsageError);
  CHECK_THROWS_AS(StandardTableau::parse("1|2,3"), UsageError);
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : partitions_of(n))
      for (const auto& t : enumerate_tableaux(shape)) {
        CHECK(StandardTableau::parse(t.str()) == t);
        CHECK(t.shape() == shape);
      }
}
