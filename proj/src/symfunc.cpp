#include "symfunc.hpp"

#include <stdexcept>

#include "combinatorics.hpp"

namespace shc {

Int elem_sym(const Multiset& X, long k) {
  if (k < 0) throw std::invalid_argument("elementary symmetric index must be non-negative");
  if (X.empty()) throw std::invalid_argument("multiset must be non-empty");
  if (k > static_cast<long>(X.size())) return Int(0);
  return elem_sym_prefix(X, k)[static_cast<size_t>(k)];
}

Int elem_sym_without(const Multiset& X, int position, long k) {
  if (position < 1 || position > static_cast<int>(X.size()))
    throw std::invalid_argument("position out of range");
  if (k < 0) throw std::invalid_argument("elementary symmetric index must be non-negative");
  Multiset reduced;
  reduced.reserve(X.size() - 1);
  for (size_t i = 0; i < X.size(); ++i) {
    if (static_cast<int>(i) != position - 1) reduced.push_back(X[i]);
  }
  if (k == 0) return Int(1);
  if (reduced.empty() || k > static_cast<long>(reduced.size())) return Int(0);
  return elem_sym_prefix(reduced, k)[static_cast<size_t>(k)];
}

Rat elem_sym_mean(const Multiset& X, long k) {
  if (k < 1 || k > static_cast<long>(X.size()))
    throw std::invalid_argument("symmetric mean index out of range");
  return make_rat(elem_sym(X, k),
                  binomial(X.size(), static_cast<unsigned long>(k)));
}

bool check_recursion(const Multiset& X, long k, int position) {
  if (k < 1 || k > static_cast<long>(X.size()))
    throw std::invalid_argument("recursion index out of range");
  if (position < 1 || position > static_cast<int>(X.size()))
    throw std::invalid_argument("position out of range");
  const Int& x = X[static_cast<size_t>(position - 1)];
  return elem_sym(X, k) ==
         elem_sym_without(X, position, k) + x * elem_sym_without(X, position, k - 1);
}

bool check_weighted_identity(const Multiset& X, long k, const std::vector<int>& phi) {
  const int n = static_cast<int>(X.size());
  if (k < 1 || k > n) throw std::invalid_argument("identity index out of range");
  if (n > 25) throw std::invalid_argument("identity check limited to 25 elements");
  std::vector<int> phi_sorted = phi;
  std::sort(phi_sorted.begin(), phi_sorted.end());

  Int lhs(0);
  for (int i = 1; i <= n; ++i) {
    if (contains_label(phi_sorted, i)) continue;
    lhs += X[static_cast<size_t>(i - 1)] * elem_sym_without(X, i, k - 1);
  }

  Int rhs(0);
  for_each_k_subset(n, static_cast<int>(k), [&](const std::vector<int>& q) {
    int outside = static_cast<int>(q.size()) - intersection_size(q, phi_sorted);
    rhs += product_over(X, q) * outside;
  });
  return lhs == rhs;
}

std::vector<Rat> ratio_sequence(const Multiset& X) {
  for (const Int& x : X) {
    if (x < 1) throw std::invalid_argument("ratio sequence requires elements >= 1");
  }
  const long n = static_cast<long>(X.size());
  std::vector<Int> e = elem_sym_prefix(X, n);
  std::vector<Rat> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (long t = 0; t < n; ++t)
    out.push_back(make_rat(e[static_cast<size_t>(t + 1)], e[static_cast<size_t>(t)]));
  out.push_back(Rat(0));  // e_{n+1} = 0
  return out;
}

bool check_log_concavity(const Multiset& X) {
  for (const Int& x : X) {
    if (x < 1) throw std::invalid_argument("log-concavity check requires elements >= 1");
  }
  const long n = static_cast<long>(X.size());
  std::vector<Int> e = elem_sym_prefix(X, n);
  // a = (1, e_1, ..., e_n, 0); interior indices are 1..n.
  std::vector<Int> a;
  a.reserve(static_cast<size_t>(n) + 2);
  for (long i = 0; i <= n; ++i) a.push_back(e[static_cast<size_t>(i)]);
  a.push_back(Int(0));
  for (size_t k = 1; k + 1 < a.size(); ++k) {
    if (!(a[k] * a[k] > a[k - 1] * a[k + 1])) return false;
  }
  return true;
}

bool check_maclaurin_chain(const Multiset& X) {
  const long n = static_cast<long>(X.size());
  for (long j = 1; j < n; ++j) {
    Rat ej = elem_sym_mean(X, j);
    Rat ej1 = elem_sym_mean(X, j + 1);
    // E_j^{1/j} >= E_{j+1}^{1/(j+1)}  <=>  E_j^{j+1} >= E_{j+1}^{j}.
    if (rat_pow(ej, static_cast<unsigned long>(j + 1)) <
        rat_pow(ej1, static_cast<unsigned long>(j)))
      return false;
  }
  return true;
}

bool strictly_decreasing(const std::vector<Rat>& v) {
  for (size_t i = 1; i < v.size(); ++i) {
    if (!(v[i - 1] > v[i])) return false;
  }
  return true;
}

bool discretely_convex(const std::vector<Rat>& v) {
  for (size_t j = 1; j + 1 < v.size(); ++j) {
    if (!(2 * v[j] <= v[j - 1] + v[j + 1])) return false;
  }
  return true;
}

}  // namespace shc
