#pragma once
// Deterministic enumeration helpers over 1-based cache labels: k-subsets in
// lexicographic order, full and partial permutations, and product/sum
// helpers over occupancy vectors. Header-only; everything is pure.

#include <algorithm>
#include <numeric>
#include <vector>

#include "exact.hpp"

namespace shc {

// Visits every k-subset of {1..n} as an ascending vector, in lexicographic
// order. k = 0 visits the empty set once; k > n visits nothing.
template <class Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<size_t>(k));
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    fn(const_cast<const std::vector<int>&>(c));
    // Advance to the lexicographic successor.
    int i = k - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) return;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
  }
}

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for_each_k_subset(n, k, [&](const std::vector<int>& c) { out.push_back(c); });
  return out;
}

// Visits every permutation of {1..n} in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    fn(const_cast<const std::vector<int>&>(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

// Visits every ordered k-tuple of distinct labels from {1..n}.
template <class Fn>
void for_each_k_permutation(int n, int k, Fn&& fn) {
  std::vector<int> tuple;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      fn(const_cast<const std::vector<int>&>(tuple));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      used[static_cast<size_t>(v)] = true;
      tuple.push_back(v);
      self(self, depth + 1);
      tuple.pop_back();
      used[static_cast<size_t>(v)] = false;
    }
  };
  if (k >= 0 && k <= n) rec(rec, 0);
}

// Product of X over the given labels (1-based); the empty product is 1.
template <class T>
T product_over(const std::vector<T>& X, const std::vector<int>& labels) {
  T prod(1);
  for (int lab : labels) prod *= X[static_cast<size_t>(lab - 1)];
  return prod;
}

// Sum of X over the given labels (1-based); the empty sum is 0.
template <class T>
T sum_over(const std::vector<T>& X, const std::vector<int>& labels) {
  T s(0);
  for (int lab : labels) s += X[static_cast<size_t>(lab - 1)];
  return s;
}

inline bool contains_label(const std::vector<int>& sorted_set, int label) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), label);
}

// Ascending complement of `sorted_set` within {1..n}.
inline std::vector<int> complement_of(const std::vector<int>& sorted_set, int n) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n) - sorted_set.size());
  size_t idx = 0;
  for (int v = 1; v <= n; ++v) {
    if (idx < sorted_set.size() && sorted_set[idx] == v) {
      ++idx;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

// |a ∩ b| for ascending label vectors.
inline int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

}  // namespace shc
