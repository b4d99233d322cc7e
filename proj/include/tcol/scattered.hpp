#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "tcol/stencil.hpp"

namespace tcol {

struct DerivativeRequest {
  Point target;
  MultiIndex order;
};

enum class ExtremumKind { Maximum, Minimum };

struct ExtremumReport {
  double location = 0.0;
  ExtremumKind kind = ExtremumKind::Minimum;
  double derivative_residual = 0.0;
};

/// For each sample point, solve the full-stencil Taylor system (the query's
/// own sample included) and report its derivative vector.
inline std::vector<DerivativeVector> estimate_at_samples(
    const std::vector<Sample>& samples, int max_order) {
  if (samples.size() < 2)
    throw std::invalid_argument("estimate_at_samples: need >= 2 samples");
  (void)max_order;  // truncation is implied by the sample count
  std::vector<DerivativeVector> out;
  out.reserve(samples.size());
  for (const Sample& s : samples) {
    try {
      out.push_back(solve_derivatives(assemble(s.point, samples)));
    } catch (const SingularSystemError& e) {
      throw SingularSystemError(std::string(e.what()) + " at query " +
                                format_point(s.point));
    }
  }
  return out;
}

/// One solve per request, centered at the request target.
inline std::vector<double> query_field(const std::vector<Sample>& samples,
                                       const std::vector<DerivativeRequest>& requests) {
  std::vector<double> out;
  out.reserve(requests.size());
  for (const DerivativeRequest& r : requests) {
    const DerivativeVector d = solve_derivatives(assemble(r.target, samples));
    out.push_back(d.entry(r.order));
  }
  return out;
}

/// Mixed value/derivative constraints; the augmented square system is
/// rebuilt at each request target.
inline std::vector<double> evaluate_with_constraints(
    const std::vector<Sample>& samples,
    const std::vector<DerivativeRequest>& requests) {
  return query_field(samples, requests);
}

struct ExtremaOptions {
  /// Nearest points used per evaluation of the interpolated derivative;
  /// 0 means the full sample set (the global interpolant).
  int stencil_size = 4;
  int scan_subintervals = 1000;
};

namespace detail {

inline std::vector<Sample> nearest_subset(const std::vector<Sample>& samples,
                                          double x, int k) {
  if (k <= 0 || k >= static_cast<int>(samples.size())) return samples;
  std::vector<int> idx(samples.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::abs(samples[static_cast<std::size_t>(a)].point(0) - x) <
           std::abs(samples[static_cast<std::size_t>(b)].point(0) - x);
  });
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    out.push_back(samples[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
  return out;
}

}  // namespace detail

/// Locate extrema of 1D scattered value data on [lo, hi]: scan the
/// interpolated first derivative for sign changes, bisect each bracket,
/// classify by the interpolated second derivative.
inline std::vector<ExtremumReport> find_extrema(const std::vector<Sample>& samples,
                                                double lo, double hi,
                                                const ExtremaOptions& options = {}) {
  if (samples.size() < 3)
    throw std::invalid_argument("find_extrema: need >= 3 samples");
  if (!(lo < hi)) throw std::invalid_argument("find_extrema: lo must be < hi");
  for (const Sample& s : samples) {
    if (s.point.size() != 1 || !s.order.is_zero())
      throw std::invalid_argument("find_extrema: 1D value samples required");
  }

  auto derivs_at = [&](double x) {
    Point q(1);
    q(0) = x;
    const std::vector<Sample> local =
        detail::nearest_subset(samples, x, options.stencil_size);
    return solve_derivatives(assemble(q, local));
  };
  auto fprime = [&](double x) {
    return derivs_at(x).values(1);
  };

  const int n = options.scan_subintervals;
  std::vector<double> grid(static_cast<std::size_t>(n) + 1);
  std::vector<double> fp(grid.size());
  for (int i = 0; i <= n; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / n;
    fp[static_cast<std::size_t>(i)] = fprime(grid[static_cast<std::size_t>(i)]);
  }

  double value_scale = 0.0;
  for (const Sample& s : samples) value_scale = std::max(value_scale, std::abs(s.value));
  const double local_scale = (1.0 + value_scale) / (hi - lo);

  std::vector<ExtremumReport> reports;
  for (int i = 0; i < n; ++i) {
    const double fa = fp[static_cast<std::size_t>(i)];
    const double fb = fp[static_cast<std::size_t>(i) + 1];
    if (fa == 0.0 && i > 0) continue;  // counted by the previous bracket
    if (fa * fb > 0.0) continue;
    double a = grid[static_cast<std::size_t>(i)];
    double b = grid[static_cast<std::size_t>(i) + 1];
    double va = fa;
    for (int it = 0; it < 200 && b - a > 1e-15 * (std::abs(a) + std::abs(b)); ++it) {
      const double mid = 0.5 * (a + b);
      const double vm = fprime(mid);
      if (va * vm <= 0.0) {
        b = mid;
      } else {
        a = mid;
        va = vm;
      }
    }
    const double root = 0.5 * (a + b);
    const DerivativeVector d = derivs_at(root);
    const double residual = std::abs(d.values(1));
    if (residual > 1e-8 * local_scale) continue;  // stencil-switch jump, not a root
    const double second = d.values.size() > 2 ? d.values(2) : 0.0;
    reports.push_back(ExtremumReport{
        root, second < 0.0 ? ExtremumKind::Maximum : ExtremumKind::Minimum,
        residual});
  }
  std::sort(reports.begin(), reports.end(),
            [](const ExtremumReport& a, const ExtremumReport& b) {
              return a.location < b.location;
            });
  return reports;
}

}  // namespace tcol
