#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tcol/multi_index.hpp"

namespace tcol {

struct SingularSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Duplicate samples make M exactly singular, so this maps to the same
// numerical-failure exit path as SingularSystemError.
struct DuplicateSampleError : SingularSystemError {
  using SingularSystemError::SingularSystemError;
};

/// A data point: either a known function value or a known partial
/// derivative of given order at `point`.
struct Sample {
  Point point;
  MultiIndex order;  // all-zero order means a plain value constraint
  double value = 0.0;

  static Sample value_at(Point p, double v) {
    MultiIndex o = MultiIndex::zero(static_cast<int>(p.size()));
    return Sample{std::move(p), std::move(o), v};
  }
  static Sample derivative_at(Point p, MultiIndex order, double v) {
    if (order.dimension() != static_cast<int>(p.size()))
      throw std::invalid_argument("Sample: order dimension mismatch");
    return Sample{std::move(p), std::move(order), v};
  }
};

/// The square system F = M D assembled at one query point, with the
/// offsets (x - a) divided by the stencil scale h before exponentiation.
struct TaylorSystem {
  Point query;
  std::vector<Sample> samples;
  BasisOrdering ordering;
  double scale = 1.0;        // h = max Euclidean offset
  Eigen::MatrixXd matrix;    // N x N, scaled coordinates
  Eigen::VectorXd rhs;       // F, derivative rows premultiplied by h^|beta|
};

/// Derivative estimates at the query, in physical (un-scaled) units;
/// entry j is the alpha_j-th partial derivative.
struct DerivativeVector {
  Point query;
  BasisOrdering ordering;
  Eigen::VectorXd values;
  double condition = 0.0;
  bool ill_conditioned = false;

  double entry(const MultiIndex& order) const {
    const int i = ordering.find(order);
    if (i < 0) throw std::invalid_argument("entry order not in ordering");
    return values(i);
  }
};

inline std::string format_point(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.size(); ++i) os << (i ? "," : "") << p(i);
  os << ")";
  return os.str();
}

/// Assemble the N x N Taylor system at `query` from N samples.
inline TaylorSystem assemble(const Point& query, const std::vector<Sample>& samples) {
  if (samples.empty()) throw std::invalid_argument("assemble: no samples");
  const int d = static_cast<int>(query.size());
  const int n = static_cast<int>(samples.size());
  for (const Sample& s : samples) {
    if (static_cast<int>(s.point.size()) != d || s.order.dimension() != d)
      throw std::invalid_argument("assemble: dimension mismatch");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (samples[static_cast<std::size_t>(i)].order ==
              samples[static_cast<std::size_t>(j)].order &&
          (samples[static_cast<std::size_t>(i)].point -
           samples[static_cast<std::size_t>(j)].point).squaredNorm() == 0.0)
        throw DuplicateSampleError(
            "assemble: duplicate sample at " +
            format_point(samples[static_cast<std::size_t>(i)].point));

  double h = 0.0;
  for (const Sample& s : samples) h = std::max(h, (s.point - query).norm());
  if (h == 0.0) h = 1.0;

  BasisOrdering ordering = graded_multi_indices(d, n);
  Eigen::MatrixXd m(n, n);
  Eigen::VectorXd f(n);
  for (int i = 0; i < n; ++i) {
    const Sample& s = samples[static_cast<std::size_t>(i)];
    const Point scaled = query + (s.point - query) / h;
    m.row(i) = basis_row(query, scaled, ordering, s.order);
    f(i) = s.value * std::pow(h, s.order.degree());
  }
  return TaylorSystem{query, samples, std::move(ordering), h, std::move(m),
                      std::move(f)};
}

namespace detail {

inline Eigen::PartialPivLU<Eigen::MatrixXd> checked_lu(const Eigen::MatrixXd& m) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  if (pivots.minCoeff() < 1e-18 * scale)
    throw SingularSystemError("singular Taylor system (degenerate point placement)");
  return lu;
}

}  // namespace detail

/// Infinity-norm condition number of the scaled matrix.
inline double condition_estimate(const TaylorSystem& system) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.matrix);
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  if (pivots.minCoeff() == 0.0) return std::numeric_limits<double>::infinity();
  const Eigen::MatrixXd inv = lu.inverse();
  auto inf_norm = [](const Eigen::MatrixXd& a) {
    return a.cwiseAbs().rowwise().sum().maxCoeff();
  };
  return inf_norm(system.matrix) * inf_norm(inv);
}

/// Solve F = M D and undo the h-scaling: the entry for index alpha is
/// divided by h^|alpha|.
inline DerivativeVector solve_derivatives(const TaylorSystem& system) {
  const auto lu = detail::checked_lu(system.matrix);
  Eigen::VectorXd scaled = lu.solve(system.rhs);

  const double residual = (system.matrix * scaled - system.rhs).lpNorm<Eigen::Infinity>();
  const double rhs_norm = system.rhs.lpNorm<Eigen::Infinity>();
  if (residual > 1e-8 * (1.0 + rhs_norm))
    throw SingularSystemError("Taylor solve residual too large");

  DerivativeVector out{system.query, system.ordering, Eigen::VectorXd(scaled.size()),
                       condition_estimate(system), false};
  for (int j = 0; j < scaled.size(); ++j)
    out.values(j) = scaled(j) * std::pow(system.scale, -system.ordering[j].degree());
  out.ill_conditioned = out.condition > 1e12;
  return out;
}

/// Single entry via Cramer's rule: det(M_i)/det(M) with column i replaced
/// by the right-hand side, un-scaled afterwards.
inline double derivative_entry_cramer(const TaylorSystem& system,
                                      const MultiIndex& entry) {
  const int i = system.ordering.find(entry);
  if (i < 0) throw std::invalid_argument("cramer: entry not in ordering");
  const auto lu = detail::checked_lu(system.matrix);
  Eigen::MatrixXd replaced = system.matrix;
  replaced.col(i) = system.rhs;
  const double det = lu.determinant();
  const double det_i = replaced.partialPivLu().determinant();
  return det_i / det * std::pow(system.scale, -entry.degree());
}

/// Evaluate the requested derivative of the truncated Taylor polynomial
/// at `target`; request = 0 gives the interpolated value.
inline double interpolate(const DerivativeVector& derivatives, const Point& target,
                          const MultiIndex& request) {
  if (target.size() != derivatives.query.size() ||
      request.dimension() != static_cast<int>(target.size()))
    throw std::invalid_argument("interpolate: dimension mismatch");
  const Eigen::RowVectorXd row =
      basis_row(derivatives.query, target, derivatives.ordering, request);
  return row * derivatives.values;
}

}  // namespace tcol
