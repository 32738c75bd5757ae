#pragma once
// Elementary symmetric polynomials over integer multisets, computed exactly,
// together with the order and convexity checks built on them: the deletion
// recursion, the weighted subset identity, ratio sequences of consecutive
// values, strict log-concavity, and the power-mean (Maclaurin) chain.

#include <vector>

#include "exact.hpp"

namespace shc {

// Occupancy-style multiset: order of elements is preserved because positions
// double as 1-based cache labels.
using Multiset = std::vector<Int>;

// e_0..e_kmax of X by the one-pass Newton/DP expansion, O(|X|·kmax).
// Subset enumeration is never used here regardless of |X|.
template <class T>
std::vector<T> elem_sym_prefix(const std::vector<T>& X, long kmax) {
  std::vector<T> e(static_cast<size_t>(kmax) + 1, T(0));
  e[0] = 1;
  long filled = 0;
  for (const T& x : X) {
    if (filled < kmax) ++filled;
    for (long i = filled; i >= 1; --i)
      e[static_cast<size_t>(i)] += x * e[static_cast<size_t>(i - 1)];
  }
  return e;
}

// e_k(X); e_0 = 1 and e_k = 0 for k > |X|. Throws on negative k.
Int elem_sym(const Multiset& X, long k);

// e_k of X with the element at `position` (1-based) removed.
Int elem_sym_without(const Multiset& X, int position, long k);

// E_k(X) = e_k(X) / C(|X|, k). Requires 1 <= k <= |X|.
Rat elem_sym_mean(const Multiset& X, long k);

// True iff e_k(X) = e_k(X minus x_i) + x_i * e_{k-1}(X minus x_i).
bool check_recursion(const Multiset& X, long k, int position);

// True iff  sum over positions i outside phi of x_i * e_{k-1}(X minus x_i)
// equals  sum over k-subsets q of positions of (prod of X over q) * |q \ phi|.
// With phi empty, the right side collapses to k * e_k(X).
bool check_weighted_identity(const Multiset& X, long k, const std::vector<int>& phi);

// The sequence { e_{t+1}(X) / e_t(X) } for t = 0..|X|; the last entry is 0.
// Requires all elements >= 1.
std::vector<Rat> ratio_sequence(const Multiset& X);

// True iff {1, e_1(X), ..., e_n(X), 0} satisfies a_k^2 > a_{k-1} * a_{k+1}
// at every interior index. Requires all elements >= 1.
bool check_log_concavity(const Multiset& X);

// True iff E_1 >= E_2^{1/2} >= ... >= E_n^{1/n}, verified by comparing
// E_j^{j+1} against E_{j+1}^{j} in exact integer arithmetic (no roots).
bool check_maclaurin_chain(const Multiset& X);

bool strictly_decreasing(const std::vector<Rat>& v);

// Discrete convexity: 2*v[j] <= v[j-1] + v[j+1] at every interior index.
bool discretely_convex(const std::vector<Rat>& v);

}  // namespace shc
