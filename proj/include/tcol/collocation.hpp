#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tcol/stencil.hpp"

namespace tcol {

struct NonFiniteCoefficientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Strictly increasing 1D node set.
class NodeSet {
 public:
  explicit NodeSet(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2)
      throw std::invalid_argument("NodeSet: need >= 2 nodes");
    for (std::size_t i = 1; i < nodes_.size(); ++i)
      if (!(nodes_[i - 1] < nodes_[i]))
        throw std::invalid_argument("NodeSet: nodes must be strictly increasing");
  }

  static NodeSet uniform(double lo, double hi, int count) {
    if (count < 2) throw std::invalid_argument("NodeSet: count must be >= 2");
    std::vector<double> nodes(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
      nodes[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return NodeSet(std::move(nodes));
  }

  int size() const { return static_cast<int>(nodes_.size()); }
  double operator[](int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return nodes_; }

 private:
  std::vector<double> nodes_;
};

/// Maps nodal values of f to nodal values of f^(k); exact on polynomials
/// of degree <= N-1 by construction.
struct DifferentiationMatrix {
  int order = 0;
  NodeSet nodes;
  Eigen::MatrixXd weights;
};

/// Row i holds the weights expressing f^(k)(x_i) from the N nodal values,
/// read off the inverse of the Taylor system centered at x_i.
inline DifferentiationMatrix differentiation_matrix(const NodeSet& nodes, int k) {
  const int n = nodes.size();
  if (k < 0 || k > n - 1)
    throw std::invalid_argument("differentiation_matrix: order out of range");

  Eigen::MatrixXd w(n, n);
  if (k == 0) {
    w.setIdentity();
    return DifferentiationMatrix{0, nodes, std::move(w)};
  }

  for (int i = 0; i < n; ++i) {
    const double a = nodes[i];
    double h = 0.0;
    for (int j = 0; j < n; ++j) h = std::max(h, std::abs(nodes[j] - a));
    if (h == 0.0) h = 1.0;

    // M^T y = e_k gives the k-th row of M^{-1}; the weight vector follows
    // after undoing the h-scaling of the coordinates.
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r) {
      const double xi = (nodes[r] - a) / h;
      double term = 1.0;
      for (int c = 0; c < n; ++c) {
        m(r, c) = term;
        term *= xi / (c + 1);
      }
    }
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(k) = 1.0;
    Eigen::VectorXd y = m.transpose().partialPivLu().solve(e);
    w.row(i) = y.transpose() / std::pow(h, k);
  }
  return DifferentiationMatrix{k, nodes, std::move(w)};
}

/// Linear ODE  sum_k c_k(x) f^(k)(x) = s(x)  with Dirichlet data at the
/// domain endpoints.
struct LinearBvp {
  NodeSet nodes;
  std::map<int, std::function<double(double)>> coeff;  // derivative order -> c_k
  std::function<double(double)> source;
  double left_value = 0.0;
  double right_value = 0.0;
};

/// Collocate on the interior nodes, replace the first/last rows by the
/// Dirichlet identities, solve.
inline Eigen::VectorXd solve_linear_bvp(const LinearBvp& problem) {
  const int n = problem.nodes.size();
  if (problem.coeff.empty())
    throw std::invalid_argument("solve_linear_bvp: no operator coefficients");

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [k, ck] : problem.coeff) {
    const DifferentiationMatrix w = differentiation_matrix(problem.nodes, k);
    for (int i = 1; i < n - 1; ++i) {
      const double c = ck(problem.nodes[i]);
      if (!std::isfinite(c))
        throw NonFiniteCoefficientError("non-finite coefficient at node");
      a.row(i) += c * w.weights.row(i);
    }
  }
  Eigen::VectorXd b(n);
  for (int i = 1; i < n - 1; ++i) {
    b(i) = problem.source(problem.nodes[i]);
    if (!std::isfinite(b(i)))
      throw NonFiniteCoefficientError("non-finite source at node");
  }
  a.row(0).setZero();
  a(0, 0) = 1.0;
  b(0) = problem.left_value;
  a.row(n - 1).setZero();
  a(n - 1, n - 1) = 1.0;
  b(n - 1) = problem.right_value;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const double scale = a.cwiseAbs().maxCoeff();
  if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() < 1e-14 * scale)
    throw SingularSystemError("solve_linear_bvp: singular collocation system");
  return lu.solve(b);
}

}  // namespace tcol
