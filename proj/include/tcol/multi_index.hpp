#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace tcol {

/// Exponent tuple (n_1, ..., n_D) identifying one monomial / partial
/// derivative of a D-variate Taylor expansion.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents)
      : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
      if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    }
    if (exponents_.empty())
      throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  }

  static MultiIndex zero(int dimension) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dimension), 0));
  }

  int dimension() const { return static_cast<int>(exponents_.size()); }
  int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }

  int degree() const {
    int s = 0;
    for (int e : exponents_) s += e;
    return s;
  }

  /// Product of component factorials, n_1! * ... * n_D!.
  double factorial_weight() const {
    double w = 1.0;
    for (int e : exponents_)
      for (int k = 2; k <= e; ++k) w *= k;
    return w;
  }

  bool is_zero() const { return degree() == 0; }

  /// Componentwise alpha >= beta.
  bool dominates(const MultiIndex& beta) const {
    for (int i = 0; i < dimension(); ++i)
      if (exponents_[static_cast<std::size_t>(i)] < beta[i]) return false;
    return true;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.exponents_ == b.exponents_;
  }

  const std::vector<int>& exponents() const { return exponents_; }

 private:
  std::vector<int> exponents_;
};

/// Canonical graded sequence of multi-indices: sorted by total degree,
/// and within a degree by decreasing exponent of the earlier coordinates,
/// so for D=2 the order is (0,0),(1,0),(0,1),(2,0),(1,1),(0,2),...
class BasisOrdering {
 public:
  BasisOrdering(int dimension, std::vector<MultiIndex> indices)
      : dimension_(dimension), indices_(std::move(indices)) {}

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(indices_.size()); }
  const MultiIndex& operator[](int i) const {
    return indices_[static_cast<std::size_t>(i)];
  }
  const std::vector<MultiIndex>& indices() const { return indices_; }

  /// Position of `mi` in the ordering, or -1.
  int find(const MultiIndex& mi) const {
    for (int i = 0; i < size(); ++i)
      if (indices_[static_cast<std::size_t>(i)] == mi) return i;
    return -1;
  }

 private:
  int dimension_;
  std::vector<MultiIndex> indices_;
};

namespace detail {

inline void append_degree_block(int dimension, int degree,
                                std::vector<int>& scratch,
                                std::vector<MultiIndex>& out, int coord) {
  if (coord == dimension - 1) {
    scratch[static_cast<std::size_t>(coord)] = degree;
    out.emplace_back(scratch);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    scratch[static_cast<std::size_t>(coord)] = e;
    append_degree_block(dimension, degree - e, scratch, out, coord + 1);
  }
}

}  // namespace detail

/// First `count` multi-indices of the canonical graded ordering.
inline BasisOrdering graded_multi_indices(int dimension, int count) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<MultiIndex> indices;
  indices.reserve(static_cast<std::size_t>(count));
  std::vector<int> scratch(static_cast<std::size_t>(dimension), 0);
  for (int degree = 0; static_cast<int>(indices.size()) < count; ++degree)
    detail::append_degree_block(dimension, degree, scratch, indices, 0);
  indices.resize(static_cast<std::size_t>(count));
  return BasisOrdering(dimension, std::move(indices));
}

using Point = Eigen::VectorXd;

/// One row of the Taylor matrix M: entry j is
///   prod_i (x_i - a_i)^(alpha_j,i - beta_i) / (alpha_j,i - beta_i)!
/// when alpha_j >= beta componentwise, else 0. beta = 0 gives the plain
/// value row; nonzero beta is the row for a known beta-th derivative.
inline Eigen::RowVectorXd basis_row(const Point& query, const Point& sample_point,
                                    const BasisOrdering& ordering,
                                    const MultiIndex& constraint_order) {
  const int d = ordering.dimension();
  if (query.size() != d || sample_point.size() != d ||
      constraint_order.dimension() != d)
    throw std::invalid_argument("basis_row: dimension mismatch");

  Eigen::RowVectorXd row(ordering.size());
  for (int j = 0; j < ordering.size(); ++j) {
    const MultiIndex& alpha = ordering[j];
    if (!alpha.dominates(constraint_order)) {
      row(j) = 0.0;
      continue;
    }
    double v = 1.0;
    for (int i = 0; i < d; ++i) {
      const int k = alpha[i] - constraint_order[i];
      const double dx = sample_point(i) - query(i);
      for (int p = 1; p <= k; ++p) v *= dx / p;
    }
    row(j) = v;
  }
  return row;
}

}  // namespace tcol
