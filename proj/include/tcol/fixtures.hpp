#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "tcol/stencil.hpp"

namespace tcol::fixtures {

/// The 21 scattered points used throughout the bivariate experiments,
/// with the published derivative estimates for regression reporting.
struct ScatterRow {
  double x, y;
  double reported_fx, reported_fy;
};

inline const std::array<ScatterRow, 21>& scatter21() {
  static const std::array<ScatterRow, 21> rows = {{
      {0.44, 0.89, 0.744112, 0.718355},
      {0.83, 0.98, 0.712135, 1.13167},
      {0.30, 0.39, 0.153233, 0.232836},
      {0.53, 0.67, 0.436543, 0.692824},
      {0.01, 0.71, 0.501928, 0.0204939},
      {0.32, 0.27, 0.0727901, 0.172403},
      {0.97, 0.48, 0.229766, 0.928144},
      {0.42, 0.22, 0.0473943, 0.180365},
      {0.08, 0.77, 0.590927, 0.122278},
      {0.53, 0.41, 0.166948, 0.433456},
      {0.91, 0.18, 0.0179674, 0.277667},
      {0.17, 0.78, 0.606371, 0.264328},
      {0.25, 0.85, 0.715137, 0.409043},
      {0.82, 0.88, 0.637844, 1.16065},
      {0.13, 0.17, 0.0430017, 0.0190376},
      {0.66, 0.74, 0.510209, 0.914023},
      {0.74, 0.65, 0.403238, 0.91452},
      {0.56, 0.44, 0.192158, 0.490137},
      {0.71, 0.53, 0.275418, 0.738331},
      {0.49, 0.45, 0.201672, 0.43798},
      {0.93, 0.49, 0.23768, 0.903173},
  }};
  return rows;
}

inline double f_sin_xy2(double x, double y) { return std::sin(x * y * y); }
inline double fx_sin_xy2(double x, double y) { return y * y * std::cos(x * y * y); }
inline double fy_sin_xy2(double x, double y) {
  return 2.0 * x * y * std::cos(x * y * y);
}
inline double fxy_sin_xy2(double x, double y) {
  return 2.0 * y * std::cos(x * y * y) -
         2.0 * x * y * y * y * std::sin(x * y * y);
}

inline std::vector<Sample> scatter21_samples() {
  std::vector<Sample> samples;
  samples.reserve(21);
  for (const ScatterRow& r : scatter21()) {
    Point p(2);
    p << r.x, r.y;
    samples.push_back(Sample::value_at(p, f_sin_xy2(r.x, r.y)));
  }
  return samples;
}

/// Jacobi elliptic sn(x | m) by RK4 integration of
///   s' = c d,  c' = -s d,  d' = -m s c,  (s,c,d)(0) = (0,1,1).
/// Fixed step chosen for ~1e-12 accuracy on the ranges used here.
inline double jacobi_sn(double x, double m, double step = 1e-4) {
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(x) / step)));
  const double h = x / n;
  double s = 0.0, c = 1.0, d = 1.0;
  auto fs = [m](double s_, double c_, double d_, double& ds, double& dc, double& dd) {
    ds = c_ * d_;
    dc = -s_ * d_;
    dd = -m * s_ * c_;
  };
  for (int i = 0; i < n; ++i) {
    double k1s, k1c, k1d, k2s, k2c, k2d, k3s, k3c, k3d, k4s, k4c, k4d;
    fs(s, c, d, k1s, k1c, k1d);
    fs(s + 0.5 * h * k1s, c + 0.5 * h * k1c, d + 0.5 * h * k1d, k2s, k2c, k2d);
    fs(s + 0.5 * h * k2s, c + 0.5 * h * k2c, d + 0.5 * h * k2d, k3s, k3c, k3d);
    fs(s + h * k3s, c + h * k3c, d + h * k3d, k4s, k4c, k4d);
    s += h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
    c += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
    d += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
  }
  return s;
}

/// sn(x | 1/3) sampled at x = 1..7.
inline std::vector<Sample> sn_samples() {
  std::vector<Sample> samples;
  for (int x = 1; x <= 7; ++x) {
    Point p(1);
    p(0) = x;
    samples.push_back(Sample::value_at(p, jacobi_sn(x, 1.0 / 3.0)));
  }
  return samples;
}

/// f(x) = (x - 1) sin(x) sin(x^-2) and the derivative-constraint setup:
/// values at x = 1..10 plus f' = 0 at the three interior extrema.
inline double f_constraint(double x) {
  return (x - 1.0) * std::sin(x) * std::sin(1.0 / (x * x));
}

inline const std::array<double, 3>& constraint_extrema() {
  static const std::array<double, 3> xs = {1.77251, 4.55625, 7.74447};
  return xs;
}

inline std::vector<Sample> constraint_samples() {
  std::vector<Sample> samples;
  for (int x = 1; x <= 10; ++x) {
    Point p(1);
    p(0) = x;
    samples.push_back(Sample::value_at(p, f_constraint(x)));
  }
  for (double x : constraint_extrema()) {
    Point p(1);
    p(0) = x;
    samples.push_back(Sample::derivative_at(p, MultiIndex({1}), 0.0));
  }
  return samples;
}

/// Closed form for f'' + sin^3(x) = 0, f(0) = 3, f(1) = 2:
/// integrate sin^3 x = (3 sin x - sin 3x)/4 twice.
inline double bvp_exact(double x) {
  const double c1 =
      2.0 - 3.0 - 0.75 * std::sin(1.0) + std::sin(3.0) / 36.0;
  return 0.75 * std::sin(x) - std::sin(3.0 * x) / 36.0 + c1 * x + 3.0;
}

}  // namespace tcol::fixtures
