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
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spechtlab/errors.hpp"

namespace spechtlab {

inline constexpr int kMaxDegree = 8;

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Permutation of {1..n} in one-line notation, n <= kMaxDegree.
// Product convention: (a*b)(i) = a(b(i)), i.e. b acts first.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::span<const int> one_line) {
    if (one_line.size() > static_cast<std::size_t>(kMaxDegree))
      throw UsageError("permutation degree above " + std::to_string(kMaxDegree));
    n_ = static_cast<std::uint8_t>(one_line.size());
    std::array<bool, kMaxDegree + 1> seen{};
    for (int i = 0; i < n_; ++i) {
      const int v = one_line[static_cast<std::size_t>(i)];
      if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
        throw UsageError("not a permutation of 1.." + std::to_string(n_));
      seen[static_cast<std::size_t>(v)] = true;
      img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
    }
  }
  Permutation(std::initializer_list<int> one_line) : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

  static Permutation identity(int n) {
    check_degree(n);
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    return p;
  }

  static Permutation transposition(int a, int b, int n) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw UsageError("bad transposition");
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
    return p;
  }

  // s_i = (i, i+1), 1 <= i < n.
  static Permutation simple(int i, int n) {
    if (i < 1 || i >= n) throw UsageError("simple transposition index out of range");
    return transposition(i, i + 1, n);
  }

  // s_{w[0]} s_{w[1]} ... s_{w[k-1]}.
  static Permutation from_word(std::span<const int> word, int n) {
    Permutation p = identity(n);
    for (int i : word) p = p * simple(i, n);
    return p;
  }
  static Permutation from_word(std::initializer_list<int> word, int n) {
    return from_word(std::span<const int>(word.begin(), word.size()), n);
  }

  // omega = [n, n-1, ..., 1].
  static Permutation longest(int n) {
    Permutation p = identity(n);
    std::reverse(p.img_.begin(), p.img_.begin() + n);
    return p;
  }

  static Permutation unrank(std::uint64_t rank, int n) {
    check_degree(n);
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    for (int k = n; k >= 1; --k) {
      const std::uint64_t f = factorial(k - 1);
      const auto idx = static_cast<std::size_t>(rank / f);
      rank %= f;
      out.push_back(pool[idx]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(out);
  }

  static Permutation parse(std::string_view text);

  int size() const { return n_; }
  // sigma(i), 1-based.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> one_line() const { return {img_.begin(), img_.begin() + n_}; }
  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (img_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n_ != b.n_) throw UsageError("permutation size mismatch");
    Permutation r;
    r.n_ = a.n_;
    for (int i = 0; i < a.n_; ++i)
      r.img_[static_cast<std::size_t>(i)] = a.img_[static_cast<std::size_t>(b.img_[static_cast<std::size_t>(i)] - 1)];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.n_ = n_;
    for (int i = 0; i < n_; ++i)
      r.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)] - 1)] = static_cast<std::uint8_t>(i + 1);
    return r;
  }

  // Same permutation on {1..m}, m >= n, fixing n+1..m.
  Permutation extended(int m) const {
    if (m < n_) throw UsageError("cannot shrink a permutation");
    check_degree(m);
    Permutation r = *this;
    r.n_ = static_cast<std::uint8_t>(m);
    for (int i = n_; i < m; ++i) r.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    return r;
  }

  int inversions() const {
    int c = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) c += img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)];
    return c;
  }
  int sign() const { return inversions() % 2 ? -1 : 1; }

  // Lexicographic index among all permutations of the same size.
  std::uint64_t rank() const {
    std::uint64_t r = 0;
    for (int i = 0; i < n_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n_; ++j) smaller += img_[static_cast<std::size_t>(j)] < img_[static_cast<std::size_t>(i)];
      r += static_cast<std::uint64_t>(smaller) * factorial(n_ - 1 - i);
    }
    return r;
  }

  std::uint64_t key() const {
    std::uint64_t k = n_;
    for (int i = 0; i < n_; ++i) k = k * 16 + img_[static_cast<std::size_t>(i)];
    return k;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string(img_[static_cast<std::size_t>(i)]);
    }
    return s + "]";
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && std::equal(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin());
  }
  // Lexicographic on the one-line word (sizes compared first).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin(),
                                                  b.img_.begin() + b.n_);
  }

 private:
  static void check_degree(int n) {
    if (n < 0 || n > kMaxDegree) throw UsageError("permutation degree out of range: " + std::to_string(n));
  }

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// c_i = #{ j >= i : sigma_j <= sigma_i }; every entry is at least 1.
inline std::vector<int> perm_code(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) c[static_cast<std::size_t>(i - 1)] += sigma(j) <= sigma(i);
  return c;
}

// "[3,1,2]" or "3,1,2".
inline Permutation Permutation::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), s.end());
  std::vector<int> v;
  std::size_t pos = 0;
  while (!s.empty() && pos <= s.size()) {
    auto comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw UsageError("bad permutation entry: " + tok);
    } catch (const std::logic_error&) {
      throw UsageError("bad permutation entry: '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Permutation(v);
}

}  // namespace spechtlab

template <>
struct std::hash<spechtlab::Permutation> {
  std::size_t operator()(const spechtlab::Permutation& p) const { return std::hash<std::uint64_t>{}(p.key()); }
};
