#include <cmath>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "tcol/collocation.hpp"
#include "tcol/fixtures.hpp"

using namespace tcol;

TEST_CASE("NodeSet validation") {
  CHECK_THROWS_AS(NodeSet({0.0}), std::invalid_argument);
  CHECK_THROWS_AS(NodeSet({0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(NodeSet({1.0, 0.0}), std::invalid_argument);
  CHECK_NOTHROW(NodeSet({0.0, 0.5, 1.0}));
}

TEST_CASE("order zero gives the identity") {
  const NodeSet nodes = NodeSet::uniform(0.0, 2.0, 5);
  const DifferentiationMatrix w = differentiation_matrix(nodes, 0);
  CHECK(w.weights.isIdentity(1e-14));
}

TEST_CASE("one-sided quadratic stencil weights") {
  const NodeSet nodes({0.0, 0.5, 1.0});
  const DifferentiationMatrix w = differentiation_matrix(nodes, 1);
  CHECK(w.weights(0, 0) == Catch::Approx(-3.0).epsilon(1e-12));
  CHECK(w.weights(0, 1) == Catch::Approx(4.0).epsilon(1e-12));
  CHECK(w.weights(0, 2) == Catch::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("second derivative is exact on cubics") {
  // Chebyshev-like clustering on [0, 1]
  std::vector<double> nodes;
  for (int i = 0; i < 5; ++i)
    nodes.push_back(0.5 - 0.5 * std::cos(M_PI * i / 4.0));
  const NodeSet set(nodes);
  const DifferentiationMatrix w = differentiation_matrix(set, 2);
  Eigen::VectorXd values(5);
  for (int i = 0; i < 5; ++i) values(i) = std::pow(set[i], 3);
  const Eigen::VectorXd second = w.weights * values;
  for (int i = 0; i < 5; ++i)
    CHECK(second(i) == Catch::Approx(6.0 * set[i]).margin(1e-9));
}

TEST_CASE("rows of higher-order matrices sum to zero") {
  const NodeSet nodes = NodeSet::uniform(-1.0, 3.0, 9);
  for (int k = 1; k <= 3; ++k) {
    const DifferentiationMatrix w = differentiation_matrix(nodes, k);
    const Eigen::VectorXd sums = w.weights.rowwise().sum();
    for (int i = 0; i < nodes.size(); ++i) CHECK(std::abs(sums(i)) < 1e-9);
  }
}

TEST_CASE("composition identity on polynomials") {
  // W_1 W_1 p == W_2 p for polynomials of low enough degree
  const NodeSet nodes = NodeSet::uniform(0.0, 1.0, 8);
  const Eigen::MatrixXd w1 = differentiation_matrix(nodes, 1).weights;
  const Eigen::MatrixXd w2 = differentiation_matrix(nodes, 2).weights;
  for (int degree = 0; degree <= 5; ++degree) {
    Eigen::VectorXd p(8);
    for (int i = 0; i < 8; ++i) p(i) = std::pow(nodes[i], degree);
    const Eigen::VectorXd via_composition = w1 * (w1 * p);
    const Eigen::VectorXd direct = w2 * p;
    for (int i = 0; i < 8; ++i) {
      const double scale = std::max(1.0, std::abs(direct(i)));
      CHECK(std::abs(via_composition(i) - direct(i)) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("differentiation_matrix rejects orders beyond N-1") {
  const NodeSet nodes = NodeSet::uniform(0.0, 1.0, 3);
  CHECK_THROWS_AS(differentiation_matrix(nodes, 3), std::invalid_argument);
  CHECK_THROWS_AS(differentiation_matrix(nodes, -1), std::invalid_argument);
}

namespace {

LinearBvp table3_problem() {
  LinearBvp bvp{NodeSet::uniform(0.0, 1.0, 14), {}, {}, 3.0, 2.0};
  bvp.coeff[2] = [](double) { return 1.0; };
  bvp.source = [](double x) { return -std::pow(std::sin(x), 3); };
  return bvp;
}

}  // namespace

TEST_CASE("benchmark BVP hits the closed form at every node") {
  const LinearBvp bvp = table3_problem();
  const Eigen::VectorXd solution = solve_linear_bvp(bvp);
  CHECK(solution(1) == Catch::Approx(2.92611).margin(5e-6));
  CHECK(solution(12) == Catch::Approx(2.08598).margin(5e-6));
  for (int i = 0; i < 14; ++i) {
    const double exact = fixtures::bvp_exact(bvp.nodes[i]);
    CHECK(std::abs((solution(i) - exact) / exact) <= 1e-9);
  }
}

TEST_CASE("BVP solution satisfies the ODE between nodes") {
  const LinearBvp bvp = table3_problem();
  const Eigen::VectorXd solution = solve_linear_bvp(bvp);

  // re-expand the solution as scattered value samples and check the
  // residual f'' + sin^3 x at random off-node points
  std::vector<Sample> samples;
  for (int i = 0; i < 14; ++i) {
    Point p(1);
    p(0) = bvp.nodes[i];
    samples.push_back(Sample::value_at(p, solution(i)));
  }
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> unif(0.02, 0.98);
  for (int trial = 0; trial < 50; ++trial) {
    Point q(1);
    q(0) = unif(rng);
    const DerivativeVector d = solve_derivatives(assemble(q, samples));
    const double residual = d.values(2) + std::pow(std::sin(q(0)), 3);
    CHECK(std::abs(residual) <= 1e-6);
  }
}

TEST_CASE("Laplace problem gives the linear interpolant") {
  LinearBvp bvp{NodeSet({0.0, 0.13, 0.4, 0.77, 1.0}), {}, {}, 0.0, 1.0};
  bvp.coeff[2] = [](double) { return 1.0; };
  bvp.source = [](double) { return 0.0; };
  const Eigen::VectorXd solution = solve_linear_bvp(bvp);
  for (int i = 0; i < 5; ++i)
    CHECK(solution(i) == Catch::Approx(bvp.nodes[i]).margin(1e-11));
}

TEST_CASE("constant curvature problem recovers x^2") {
  LinearBvp bvp{NodeSet::uniform(0.0, 1.0, 6), {}, {}, 0.0, 1.0};
  bvp.coeff[2] = [](double) { return 1.0; };
  bvp.source = [](double) { return 2.0; };
  const Eigen::VectorXd solution = solve_linear_bvp(bvp);
  for (int i = 0; i < 6; ++i)
    CHECK(solution(i) == Catch::Approx(bvp.nodes[i] * bvp.nodes[i]).margin(1e-10));
}

TEST_CASE("non-finite coefficients are reported") {
  LinearBvp bvp{NodeSet::uniform(0.0, 1.0, 5), {}, {}, 0.0, 1.0};
  bvp.coeff[2] = [](double x) { return 1.0 / (x - 0.5); };
  bvp.source = [](double) { return 0.0; };
  // 0.5 is a node of the uniform 5-point grid
  CHECK_THROWS_AS(solve_linear_bvp(bvp), NonFiniteCoefficientError);
}
