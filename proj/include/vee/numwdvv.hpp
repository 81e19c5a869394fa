#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

#include "vee/config.hpp"
#include "vee/sampling.hpp"

namespace vee {

using CMatrix = Eigen::MatrixXcd;

/// Principal square root of lambda^2.
Complex principal_lambda(const Rational& lambda_squared);

/// F_0..F_n for F = y^3/3 + sum c_a a(x)^2 y + lambda sum c_a f(a(x)) with
/// f''' = cot, in coordinates (x_0 = y, x_1..x_n):
///   F_0 = 2 blockdiag(1, sum c_a a (x) a)
///   F_i = [[0, 2 sum c_a a_i a], [2 sum c_a a_i a^T, lambda sum c_a a_i cot a(x) a (x) a]]
/// Throws ZeroLambda, SingularPoint (some sin a(x) = 0).
std::vector<CMatrix> third_derivative_matrices(const VConfiguration& cfg, Complex lambda, const EvalPoint& p);
std::vector<CMatrix> third_derivative_matrices(const VConfiguration& cfg, const Rational& lambda_squared,
                                               const EvalPoint& p);

/// |F_i F_0^{-1} F_j - F_j F_0^{-1} F_i|_max for all i, j (symmetric array).
std::vector<std::vector<double>> pair_residuals(const std::vector<CMatrix>& f);

struct WdvvOptions {
  std::size_t points = 10;
  std::uint64_t seed = 0;
  double margin_floor = 0.1;
};

struct ResidualReport {
  std::vector<double> per_point;
  double aggregate = 0.0;
  std::size_t points = 0;
  std::uint64_t seed = 0;
};

/// Max WDVV commutator residual (pivot k = 0) over seeded sample points.
/// Points are evaluated in parallel; the report does not depend on the
/// thread count. Throws DegenerateForm, ZeroLambda, SamplingExhausted.
ResidualReport wdvv_residual(const VConfiguration& cfg, const Rational& lambda_squared, const WdvvOptions& opts = {});
ResidualReport wdvv_residual(const VConfiguration& cfg, Complex lambda, const WdvvOptions& opts = {});

/// Single-threaded reference for wdvv_residual.
ResidualReport wdvv_residual_serial(const VConfiguration& cfg, Complex lambda, const WdvvOptions& opts = {});

/// Li_3(z) = sum_{k>=1} z^k / k^3 for |z| < 1, summed until |term| < 1e-16.
Complex trilog_series(Complex z);

/// f(x) = (i/6) x^3 + Li_3(e^{-2ix}) / 4, defined for Im x < 0.
Complex prepotential_f(Complex x);

/// F(y, x) summed over the positive system. Throws OutOfDomain unless
/// Im a(x) < 0 for every signed covector, DegenerateForm on a degenerate form.
Complex eval_prepotential(const VConfiguration& cfg, const Rational& lambda_squared, const PositiveSystem& psys,
                          const EvalPoint& p);

/// max_x | delta_h^3 f(x) / h^3 - cot x | with the central stencil on
/// x +- h/2, x +- 3h/2.
double check_f_derivative(std::span<const Complex> samples, double h);

}  // namespace vee
