#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "tcol/collocation.hpp"

namespace tcol {

struct NonFinitePotentialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// -kappa f'' + U(x) f = lambda f on (x_lo, x_hi) with homogeneous
/// Dirichlet conditions, discretized on node_count uniform nodes
/// (endpoints included, carrying f = 0).
struct EigenProblem {
  double x_lo = 0.0;
  double x_hi = 1.0;
  int node_count = 14;
  double kappa = 1.0;
  std::function<double(double)> potential = [](double) { return 0.0; };
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> residuals;    // ||Hv - lambda v|| / ||v||
  int discarded_count = 0;          // complex pairs removed
};

/// H = -kappa * W2 restricted to interior rows/columns + diag(U); the
/// boundary columns drop out because f vanishes there.
inline Eigen::MatrixXd assemble_hamiltonian(const EigenProblem& problem) {
  if (!(problem.x_lo < problem.x_hi))
    throw std::invalid_argument("EigenProblem: empty domain");
  if (problem.node_count < 3)
    throw std::invalid_argument("EigenProblem: need >= 3 nodes");
  const NodeSet nodes =
      NodeSet::uniform(problem.x_lo, problem.x_hi, problem.node_count);
  const DifferentiationMatrix w2 = differentiation_matrix(nodes, 2);
  const int m = problem.node_count - 2;
  Eigen::MatrixXd h = -problem.kappa * w2.weights.block(1, 1, m, m);
  for (int i = 0; i < m; ++i) {
    const double u = problem.potential(nodes[i + 1]);
    if (!std::isfinite(u))
      throw NonFinitePotentialError("potential not finite at interior node");
    h(i, i) += u;
  }
  return h;
}

/// Lowest `count` real eigenvalues of the interior Hamiltonian; complex
/// pairs are discarded and counted.
inline Spectrum solve_spectrum(const EigenProblem& problem, int count) {
  const Eigen::MatrixXd h = assemble_hamiltonian(problem);
  if (count < 1 || count > h.rows())
    throw std::invalid_argument("solve_spectrum: bad mode count");

  Eigen::EigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("solve_spectrum: eigen iteration failed");

  struct Mode {
    double lambda;
    Eigen::VectorXd vec;
  };
  std::vector<Mode> real_modes;
  int discarded = 0;
  for (int i = 0; i < h.rows(); ++i) {
    const std::complex<double> ev = solver.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-8 * (1.0 + std::abs(ev))) {
      ++discarded;
      continue;
    }
    real_modes.push_back(Mode{ev.real(), solver.eigenvectors().col(i).real()});
  }
  std::sort(real_modes.begin(), real_modes.end(),
            [](const Mode& a, const Mode& b) { return a.lambda < b.lambda; });
  if (static_cast<int>(real_modes.size()) < count)
    throw std::runtime_error("solve_spectrum: fewer real modes than requested");

  Spectrum out;
  out.discarded_count = discarded;
  for (int i = 0; i < count; ++i) {
    const Mode& mode = real_modes[static_cast<std::size_t>(i)];
    out.eigenvalues.push_back(mode.lambda);
    out.residuals.push_back((h * mode.vec - mode.lambda * mode.vec).norm() /
                            mode.vec.norm());
  }
  return out;
}

/// Validated spectrum: additionally drop modes that move by more than 10%
/// when the grid is refined from N to N+4 nodes.
inline Spectrum solve_spectrum_validated(const EigenProblem& problem, int count) {
  const Spectrum coarse = solve_spectrum(problem, count);
  EigenProblem refined = problem;
  refined.node_count += 4;
  const Spectrum fine =
      solve_spectrum(refined, std::min(count + 2, refined.node_count - 2));

  Spectrum out;
  out.discarded_count = coarse.discarded_count;
  for (std::size_t i = 0; i < coarse.eigenvalues.size(); ++i) {
    const double lambda = coarse.eigenvalues[i];
    bool confirmed = false;
    for (double mu : fine.eigenvalues) {
      if (std::abs(mu - lambda) <= 0.10 * (std::abs(lambda) + 1e-12)) {
        confirmed = true;
        break;
      }
    }
    if (confirmed) {
      out.eigenvalues.push_back(lambda);
      out.residuals.push_back(coarse.residuals[i]);
    } else {
      ++out.discarded_count;
    }
  }
  return out;
}

/// |det(H - lambda I)| divided by the product of the N-1 largest pivot
/// magnitudes of its LU factorization, i.e. the smallest pivot magnitude.
/// Collapses at the spectrum, stays at the matrix scale away from it.
inline double det_residual(const EigenProblem& problem, double lambda) {
  const Eigen::MatrixXd h = assemble_hamiltonian(problem);
  Eigen::MatrixXd shifted = h - lambda * Eigen::MatrixXd::Identity(h.rows(), h.cols());
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(shifted);
  return lu.matrixLU().diagonal().cwiseAbs().minCoeff();
}

/// Infinite square well on [0,1]: f'' + omega^2 f = 0, lambda = omega^2.
inline EigenProblem infinite_well_problem(int node_count) {
  EigenProblem p;
  p.x_lo = 0.0;
  p.x_hi = 1.0;
  p.node_count = node_count;
  p.kappa = 1.0;
  p.potential = [](double) { return 0.0; };
  return p;
}

/// Poeschl-Teller well in V0 = hbar^2 alpha^2 / m0 units:
///   U(x)/V0 = (1/2) [ k(k-1)/sin^2(alpha x) + lam(lam-1)/cos^2(alpha x) ]
/// on (0, 1) with kappa = 1/(2 alpha^2).
inline EigenProblem poschl_teller_problem(double k, double lam, double alpha,
                                          int node_count) {
  if (!(k > 1.0) || !(lam > 1.0))
    throw std::invalid_argument("poschl_teller_problem: need k, lam > 1");
  EigenProblem p;
  p.x_lo = 0.0;
  p.x_hi = 1.0;
  p.node_count = node_count;
  p.kappa = 1.0 / (2.0 * alpha * alpha);
  p.potential = [k, lam, alpha](double x) {
    const double s = std::sin(alpha * x);
    const double c = std::cos(alpha * x);
    return 0.5 * (k * (k - 1.0) / (s * s) + lam * (lam - 1.0) / (c * c));
  };
  return p;
}

/// Bound-state energies E_n / V0 = (1/2)(k + lam + 2n)^2; the ground state
/// is n = 0.
inline double poschl_teller_energy(double k, double lam, int n) {
  const double s = k + lam + 2.0 * n;
  return 0.5 * s * s;
}

/// Squared-cotangent well U(x) = V_a cot^2(pi x / alpha) on (0, alpha)
/// with kappa = 1/A.
inline EigenProblem trigonometric_problem(double v_a, double alpha, double a_mass,
                                          int node_count) {
  EigenProblem p;
  p.x_lo = 0.0;
  p.x_hi = alpha;
  p.node_count = node_count;
  p.kappa = 1.0 / a_mass;
  p.potential = [v_a, alpha](double x) {
    const double c = 1.0 / std::tan(std::numbers::pi * x / alpha);
    return v_a * c * c;
  };
  return p;
}

/// E_n = (pi^2 / (A alpha^2)) (n^2 + 4 n lambda_a - 2 lambda_a) with
/// lambda_a = (sqrt(4 A V_a alpha^2 / pi^2 + 1) - 1) / 4; n starts at 1.
inline double trigonometric_energy(double v_a, double alpha, double a_mass, int n) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double la =
      0.25 * (std::sqrt(4.0 * a_mass * v_a * alpha * alpha / pi2 + 1.0) - 1.0);
  return pi2 / (a_mass * alpha * alpha) *
         (static_cast<double>(n) * n + 4.0 * n * la - 2.0 * la);
}

}  // namespace tcol
