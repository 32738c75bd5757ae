// Converse machinery: permutation weights, coefficient tables c and c-tilde,
// the optimal tau* subsets over the canonical descending order, convex
// envelopes of the tilde sequence, the general and regular lower bounds on
// delivery time, and the convexity-based optimality certificate.
#pragma once

#include <utility>
#include <vector>

#include "exact.hpp"
#include "model.hpp"

namespace shc {

// w_sigma^(p): the product of the occupancies selected by the last p entries
// of sigma, normalized so the weights over all permutations sum to 1.
// For p = 0 every permutation weighs 1/Lambda!.
Rat weight(const std::vector<int>& sigma, long p, const Topology& topo);

// Coefficient kernels over a raw positive multiset; positions double as
// labels and `tau` is an ascending subset of them.
Rat coefficient_over(const Multiset& L, long p, const std::vector<int>& tau);
Rat tilde_coefficient_over(const Multiset& L, long p, const std::vector<int>& tau);

// c_tau^(p) and its q-sum-only lower version over the caller's cache labels.
// The tilde value never exceeds the full coefficient.
Rat coefficient(const Topology& topo, long p, const std::vector<int>& tau);
Rat tilde_coefficient(const Topology& topo, long p, const std::vector<int>& tau);

// The j-element subset minimizing the tilde coefficient when occupancies are
// sorted in descending order (labels here index that canonical order):
// empty for j=0, the j smallest occupancies for 1 <= j < p, the j largest
// for j >= p.
std::vector<int> tau_star(const Topology& topo, long p, long j);

// { tilde_c_{tau*_j}^(p) : j = 0..Lambda } over the descending-sorted
// occupancies.
std::vector<Rat> tilde_sequence(const Topology& topo, long p);

// Lower convex envelope of points at consecutive integer abscissas,
// evaluated at x. Throws std::invalid_argument when x lies outside the
// point range.
Rat envelope(const std::vector<std::pair<long, Rat>>& points, const Rat& x);

enum class BoundKind { general, regular };

struct BoundResult {
  Rat t;
  Rat value;
  BoundKind kind = BoundKind::general;
  bool optimalityCertificate = false;
  std::vector<Rat> sequence;  // tilde sequence behind a general-kind bound
  long p = 0;                 // parameter the bound was evaluated at
};

// General lower bound: evaluates the envelope of the tilde sequence at
// p = round-half-up(t). With maxOverP, takes the best bound over every
// p in {0..Lambda} (a strictly stronger variant).
BoundResult lower_bound_general(const Topology& topo, const Rat& t, bool maxOverP = false);

// Regular-placement lower bound e_{t+1}(L)/e_t(L); integer budgets only.
BoundResult lower_bound_regular(const Topology& topo, long t);

// True iff the tilde sequence at p = t is discretely convex, in which case
// the achievable time is optimal with no regularity assumption needed.
bool optimality_certificate(const Topology& topo, long t);

}  // namespace shc
