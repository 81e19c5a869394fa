#include "vee/numwdvv.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>

#include "vee/error.hpp"

namespace vee {

namespace {

CMatrix first_block_matrix(const NumericConfig& nc) {
  const std::size_t n = nc.dim;
  CMatrix f0 = CMatrix::Zero(n + 1, n + 1);
  f0(0, 0) = 2.0;
  for (std::size_t a = 0; a < nc.covectors.size(); ++a) {
    const auto& v = nc.covectors[a];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f0(i + 1, j + 1) += 2.0 * nc.mults[a] * v[i] * v[j];
  }
  return f0;
}

std::vector<CMatrix> build_matrices(const NumericConfig& nc, Complex lambda, const EvalPoint& p) {
  if (lambda == Complex(0.0)) throw VeeError(ErrorCode::ZeroLambda, "lambda must be nonzero");
  if (!(p.margin > 0.0)) throw VeeError(ErrorCode::SingularPoint, "some sin a(x) vanishes at the point");
  const std::size_t n = nc.dim;
  std::vector<CMatrix> f;
  f.reserve(n + 1);
  f.push_back(first_block_matrix(nc));
  std::vector<Complex> cot(nc.covectors.size());
  for (std::size_t a = 0; a < cot.size(); ++a) {
    Complex ax = nc.pair(a, p.x);
    cot[a] = std::cos(ax) / std::sin(ax);
  }
  for (std::size_t i = 0; i < n; ++i) {
    CMatrix fi = CMatrix::Zero(n + 1, n + 1);
    for (std::size_t a = 0; a < nc.covectors.size(); ++a) {
      const auto& v = nc.covectors[a];
      const double cai = nc.mults[a] * v[i];
      if (cai == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        fi(0, j + 1) += 2.0 * cai * v[j];
        fi(j + 1, 0) += 2.0 * cai * v[j];
      }
      const Complex w = lambda * cai * cot[a];
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) fi(j + 1, k + 1) += w * v[j] * v[k];
    }
    f.push_back(std::move(fi));
  }
  return f;
}

double max_commutator(const std::vector<CMatrix>& f, const std::vector<CMatrix>& f0inv_f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      CMatrix r = f[i] * f0inv_f[j] - f[j] * f0inv_f[i];
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  return worst;
}

double point_residual(const NumericConfig& nc, const CMatrix& f0inv, Complex lambda, const EvalPoint& p) {
  auto f = build_matrices(nc, lambda, p);
  std::vector<CMatrix> g;
  g.reserve(f.size());
  for (const auto& m : f) g.push_back(f0inv * m);
  return max_commutator(f, g);
}

CMatrix inverse_first(const VConfiguration& cfg, const NumericConfig& nc) {
  if (cfg.is_degenerate()) throw VeeError(ErrorCode::DegenerateForm, "F_0 is singular because the form is degenerate");
  return first_block_matrix(nc).inverse();
}

ResidualReport finish(std::vector<double> per_point, const WdvvOptions& opts) {
  ResidualReport r;
  r.per_point = std::move(per_point);
  r.points = r.per_point.size();
  r.seed = opts.seed;
  for (double v : r.per_point) r.aggregate = std::max(r.aggregate, v);
  return r;
}

}  // namespace

Complex principal_lambda(const Rational& lambda_squared) { return std::sqrt(Complex(to_double(lambda_squared), 0.0)); }

std::vector<CMatrix> third_derivative_matrices(const VConfiguration& cfg, Complex lambda, const EvalPoint& p) {
  return build_matrices(NumericConfig(cfg), lambda, p);
}

std::vector<CMatrix> third_derivative_matrices(const VConfiguration& cfg, const Rational& lambda_squared,
                                               const EvalPoint& p) {
  return third_derivative_matrices(cfg, principal_lambda(lambda_squared), p);
}

std::vector<std::vector<double>> pair_residuals(const std::vector<CMatrix>& f) {
  const CMatrix f0inv = f.front().inverse();
  std::vector<std::vector<double>> out(f.size(), std::vector<double>(f.size(), 0.0));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) {
      CMatrix r = f[i] * f0inv * f[j] - f[j] * f0inv * f[i];
      out[i][j] = r.cwiseAbs().maxCoeff();
    }
  return out;
}

ResidualReport wdvv_residual(const VConfiguration& cfg, const Rational& lambda_squared, const WdvvOptions& opts) {
  return wdvv_residual(cfg, principal_lambda(lambda_squared), opts);
}

ResidualReport wdvv_residual(const VConfiguration& cfg, Complex lambda, const WdvvOptions& opts) {
  const NumericConfig nc(cfg);
  const CMatrix f0inv = inverse_first(cfg, nc);
  const SamplerOptions so{opts.margin_floor, 1000};
  const auto count = static_cast<std::ptrdiff_t>(opts.points);
  std::vector<double> per_point(opts.points, 0.0);
  std::vector<std::exception_ptr> errors(opts.points);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      EvalPoint p = sample_point(nc, opts.seed, static_cast<std::size_t>(k), so);
      per_point[k] = point_residual(nc, f0inv, lambda, p);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return finish(std::move(per_point), opts);
}

ResidualReport wdvv_residual_serial(const VConfiguration& cfg, Complex lambda, const WdvvOptions& opts) {
  const NumericConfig nc(cfg);
  const CMatrix f0inv = inverse_first(cfg, nc);
  const SamplerOptions so{opts.margin_floor, 1000};
  std::vector<double> per_point;
  per_point.reserve(opts.points);
  for (std::size_t k = 0; k < opts.points; ++k) {
    EvalPoint p = sample_point(nc, opts.seed, k, so);
    per_point.push_back(point_residual(nc, f0inv, lambda, p));
  }
  return finish(std::move(per_point), opts);
}

Complex trilog_series(Complex z) {
  if (!(std::abs(z) < 1.0)) throw VeeError(ErrorCode::OutOfDomain, "trilogarithm series needs |z| < 1");
  Complex sum = 0.0;
  Complex zk = z;
  for (long k = 1; k < 100000000; ++k) {
    const double kd = static_cast<double>(k);
    Complex term = zk / (kd * kd * kd);
    sum += term;
    if (std::abs(term) < 1e-16) break;
    zk *= z;
  }
  return sum;
}

Complex prepotential_f(Complex x) {
  if (!(x.imag() < 0.0)) throw VeeError(ErrorCode::OutOfDomain, "f needs Im x < 0");
  const Complex i(0.0, 1.0);
  return i * x * x * x / 6.0 + 0.25 * trilog_series(std::exp(-2.0 * i * x));
}

Complex eval_prepotential(const VConfiguration& cfg, const Rational& lambda_squared, const PositiveSystem& psys,
                          const EvalPoint& p) {
  if (cfg.is_degenerate()) throw VeeError(ErrorCode::DegenerateForm, "the form is degenerate");
  const NumericConfig nc(cfg);
  const Complex lambda = principal_lambda(lambda_squared);
  Complex quad = 0.0;
  Complex trans = 0.0;
  for (std::size_t a = 0; a < nc.covectors.size(); ++a) {
    Complex ax = nc.pair(a, p.x);
    quad += nc.mults[a] * ax * ax;
    Complex signed_ax = psys.signs.at(a) > 0 ? ax : -ax;
    if (!(signed_ax.imag() < 0.0))
      throw VeeError(ErrorCode::OutOfDomain, "Im a(x) >= 0 for covector " + to_string(cfg.covector(a)));
    trans += nc.mults[a] * prepotential_f(signed_ax);
  }
  return p.y * p.y * p.y / 3.0 + quad * p.y + lambda * trans;
}

double check_f_derivative(std::span<const Complex> samples, double h) {
  double worst = 0.0;
  for (Complex x : samples) {
    Complex d3 = prepotential_f(x + 1.5 * h) - 3.0 * prepotential_f(x + 0.5 * h) + 3.0 * prepotential_f(x - 0.5 * h) -
                 prepotential_f(x - 1.5 * h);
    d3 /= h * h * h;
    worst = std::max(worst, std::abs(d3 - std::cos(x) / std::sin(x)));
  }
  return worst;
}

}  // namespace vee
