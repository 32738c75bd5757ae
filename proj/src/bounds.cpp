#include "bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "symfunc.hpp"

namespace shc {

namespace {

// Direct subset enumeration is used throughout; beyond this the converse is
// out of desk scale.
constexpr int kMaxLambda = 20;

void check_scale(int lambda) {
  if (lambda > kMaxLambda)
    throw resource_limit_error("bound computations are capped at " +
                               std::to_string(kMaxLambda) + " caches");
}

void check_p(int lambda, long p) {
  if (p < 0 || p > lambda)
    throw std::invalid_argument("parameter p must lie in {0..cache count}");
}

// Ascending, duplicate-free, in-range copy of a label subset.
std::vector<int> canonical_subset(int lambda, std::vector<int> tau) {
  std::sort(tau.begin(), tau.end());
  for (size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] < 1 || tau[i] > lambda)
      throw std::invalid_argument("cache label out of range");
    if (i > 0 && tau[i] == tau[i - 1])
      throw std::invalid_argument("duplicate cache label in subset");
  }
  return tau;
}

// Shared core of the two coefficient kernels.
Rat coefficient_impl(const Multiset& L, long p, const std::vector<int>& tau, bool tildeOnly) {
  const int n = static_cast<int>(L.size());
  check_scale(n);
  check_p(n, p);
  const std::vector<int> phi = canonical_subset(n, tau);
  const long j = static_cast<long>(phi.size());

  Rat total(0);
  for_each_k_subset(n, static_cast<int>(p) + 1, [&](const std::vector<int>& q) {
    const int overlap = intersection_size(q, phi);
    if (overlap == p + 1) return;  // weight zero
    total += Rat(product_over(L, q)) *
             make_rat(Int(p + 1 - overlap), Int(j + 1 - overlap));
  });

  if (!tildeOnly && j < p) {
    // Occupancy-weighted sum over the (p-j)-subsets disjoint from tau.
    const std::vector<int> rest = complement_of(phi, n);
    Int acc(0);
    for_each_k_subset(static_cast<int>(rest.size()), static_cast<int>(p - j),
                      [&](const std::vector<int>& idx) {
                        Int prod(1), sum(0);
                        for (int ii : idx) {
                          const Int& v = L[static_cast<size_t>(rest[static_cast<size_t>(ii - 1)] - 1)];
                          prod *= v;
                          sum += v;
                        }
                        acc += prod * sum;
                      });
    total += make_rat(product_over(L, phi) * acc, Int(j + 1));
  }

  return total / Rat(elem_sym(L, p));
}

}  // namespace

Rat weight(const std::vector<int>& sigma, long p, const Topology& topo) {
  const int n = topo.lambda();
  check_p(n, p);
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("sigma must be a permutation of all cache labels");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int lab : sigma) {
    if (lab < 1 || lab > n || seen[static_cast<size_t>(lab)])
      throw std::invalid_argument("sigma must be a permutation of all cache labels");
    seen[static_cast<size_t>(lab)] = true;
  }
  // Numerator: occupancies picked by the last p entries of sigma. The
  // denominator, summed over every permutation, collapses to
  // (Lambda-p)! * p! * e_p(L): each p-subset occupies the tail in p! orders
  // while the head permutes freely.
  Int num(1);
  for (long k = 0; k < p; ++k)
    num *= topo.occupancy(sigma[static_cast<size_t>(n - p + k)]);
  const Int den = factorial(static_cast<unsigned long>(n - p)) *
                  factorial(static_cast<unsigned long>(p)) * elem_sym(topo.L, p);
  return make_rat(num, den);
}

Rat coefficient_over(const Multiset& L, long p, const std::vector<int>& tau) {
  return coefficient_impl(L, p, tau, false);
}

Rat tilde_coefficient_over(const Multiset& L, long p, const std::vector<int>& tau) {
  return coefficient_impl(L, p, tau, true);
}

Rat coefficient(const Topology& topo, long p, const std::vector<int>& tau) {
  return coefficient_impl(topo.L, p, tau, false);
}

Rat tilde_coefficient(const Topology& topo, long p, const std::vector<int>& tau) {
  return coefficient_impl(topo.L, p, tau, true);
}

std::vector<int> tau_star(const Topology& topo, long p, long j) {
  const int n = topo.lambda();
  check_p(n, p);
  if (j < 0 || j > n) throw std::invalid_argument("subset size j must lie in {0..cache count}");
  std::vector<int> out;
  if (j == 0) return out;
  if (j < p) {
    for (int lab = n - static_cast<int>(j) + 1; lab <= n; ++lab) out.push_back(lab);
  } else {
    for (int lab = 1; lab <= static_cast<int>(j); ++lab) out.push_back(lab);
  }
  return out;
}

std::vector<Rat> tilde_sequence(const Topology& topo, long p) {
  const Multiset sorted = topo.sorted_desc();
  std::vector<Rat> seq;
  seq.reserve(static_cast<size_t>(topo.lambda()) + 1);
  for (long j = 0; j <= topo.lambda(); ++j)
    seq.push_back(tilde_coefficient_over(sorted, p, tau_star(topo, p, j)));
  return seq;
}

Rat envelope(const std::vector<std::pair<long, Rat>>& points, const Rat& x) {
  if (points.empty()) throw std::invalid_argument("envelope needs at least one point");
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i].first != points[i - 1].first + 1)
      throw std::invalid_argument("points must sit at consecutive integers");
  if (x < Rat(points.front().first) || x > Rat(points.back().first))
    throw std::invalid_argument("evaluation point lies outside the point range");

  // Monotone-chain lower hull over exact rationals. Collinear middle points
  // are dropped; the interpolant is unchanged.
  std::vector<std::pair<Rat, Rat>> hull;
  for (const auto& pt : points) {
    const std::pair<Rat, Rat> cur(Rat(pt.first), pt.second);
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull[hull.size() - 1];
      const Rat cross = (a.first - o.first) * (cur.second - o.second) -
                        (a.second - o.second) * (cur.first - o.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(cur);
  }

  if (hull.size() == 1) return hull.front().second;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    if (x >= hull[i].first && x <= hull[i + 1].first) {
      const Rat& x0 = hull[i].first;
      const Rat& x1 = hull[i + 1].first;
      const Rat& y0 = hull[i].second;
      const Rat& y1 = hull[i + 1].second;
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  }
  return hull.back().second;  // x == last abscissa
}

BoundResult lower_bound_general(const Topology& topo, const Rat& t, bool maxOverP) {
  validate_budget(topo, CacheBudget{t, Int(1)});
  check_scale(topo.lambda());
  const long pbar = int_to_long(rat_round_half_up(t));

  auto evaluate = [&](long p) {
    std::vector<Rat> seq = tilde_sequence(topo, p);
    std::vector<std::pair<long, Rat>> points;
    for (long j = 0; j <= topo.lambda(); ++j)
      points.emplace_back(j, seq[static_cast<size_t>(j)]);
    return std::make_pair(envelope(points, t), std::move(seq));
  };

  BoundResult out;
  out.t = t;
  out.kind = BoundKind::general;
  out.p = pbar;
  auto best = evaluate(pbar);
  if (maxOverP) {
    for (long p = 0; p <= topo.lambda(); ++p) {
      if (p == pbar) continue;
      auto cand = evaluate(p);
      if (cand.first > best.first) {
        best = std::move(cand);
        out.p = p;
      }
    }
  }
  out.value = best.first;
  out.sequence = std::move(best.second);
  // Convexity of the round(t) sequence; at integer t this is exactly the
  // optimality certificate.
  out.optimalityCertificate = discretely_convex(tilde_sequence(topo, pbar));
  return out;
}

BoundResult lower_bound_regular(const Topology& topo, long t) {
  if (t < 0 || t > topo.lambda())
    throw std::invalid_argument("budget t must lie in {0..cache count}");
  BoundResult out;
  out.t = Rat(Int(t));
  out.kind = BoundKind::regular;
  out.value = make_rat(elem_sym(topo.L, t + 1), elem_sym(topo.L, t));
  out.p = t;
  out.optimalityCertificate = optimality_certificate(topo, t);
  return out;
}

bool optimality_certificate(const Topology& topo, long t) {
  if (t < 0 || t > topo.lambda())
    throw std::invalid_argument("budget t must lie in {0..cache count}");
  check_scale(topo.lambda());
  return discretely_convex(tilde_sequence(topo, t));
}

}  // namespace shc
