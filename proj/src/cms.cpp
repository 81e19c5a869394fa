#include "vee/cms.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>

#include "vee/error.hpp"

namespace vee {

Metric Metric::vee(const VConfiguration& cfg) { return Metric{cfg.covector_form(), true}; }

Metric Metric::from_matrix(RatMatrix form) {
  if (!form.is_symmetric()) throw VeeError(ErrorCode::InvalidArgument, "metric must be a symmetric square matrix");
  if (determinant(form) == 0) throw VeeError(ErrorCode::DegenerateForm, "metric is degenerate");
  return Metric{std::move(form), false};
}

namespace {

void require_usable(const VConfiguration& cfg, const Metric& metric) {
  if (metric.form.rows() != cfg.dim() || metric.form.cols() != cfg.dim())
    throw VeeError(ErrorCode::DimensionMismatch, "metric shape does not match configuration");
  for (std::size_t i = 0; i < cfg.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.size(); ++j)
      if (parallel(cfg.covector(i), cfg.covector(j)))
        throw VeeError(ErrorCode::CollinearPair,
                       "covectors " + to_string(cfg.covector(i)) + " and " + to_string(cfg.covector(j)) + " are collinear");
  if (determinant(metric.form) == 0) throw VeeError(ErrorCode::DegenerateForm, "metric is degenerate");
}

struct CmsKernel {
  NumericConfig nc;
  std::vector<std::vector<double>> pairing;  // (a_i, a_j) from the metric
  std::vector<std::vector<double>> form;     // metric entries for the Laplacian

  CmsKernel(const VConfiguration& cfg, const Metric& metric) : nc(cfg) {
    const std::size_t m = cfg.size();
    pairing.assign(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) pairing[i][j] = to_double(metric(cfg.covector(i), cfg.covector(j)));
    form.assign(cfg.dim(), std::vector<double>(cfg.dim()));
    for (std::size_t i = 0; i < cfg.dim(); ++i)
      for (std::size_t j = 0; j < cfg.dim(); ++j) form[i][j] = to_double(metric.form(i, j));
  }

  // S(x) = sum_{a != b} c_a c_b (a,b) cot a(x) cot b(x)
  Complex identity_value(const std::vector<Complex>& cot) const {
    Complex s = 0.0;
    for (std::size_t a = 0; a < cot.size(); ++a)
      for (std::size_t b = 0; b < cot.size(); ++b) {
        if (a == b) continue;
        s += nc.mults[a] * nc.mults[b] * pairing[a][b] * cot[a] * cot[b];
      }
    return s;
  }

  // (L psi) / psi through the log-derivative: with g = grad log psi and
  // H = Hess log psi, Delta psi / psi = sum form_ij (H_ij + g_i g_j).
  Complex eigen_value(const std::vector<Complex>& cot, const std::vector<Complex>& csc2) const {
    const std::size_t n = nc.dim;
    std::vector<Complex> g(n, 0.0);
    std::vector<Complex> h(n * n, 0.0);
    Complex potential = 0.0;
    for (std::size_t a = 0; a < cot.size(); ++a) {
      const auto& v = nc.covectors[a];
      const double c = nc.mults[a];
      for (std::size_t i = 0; i < n; ++i) {
        g[i] -= c * v[i] * cot[a];
        for (std::size_t j = 0; j < n; ++j) h[i * n + j] += c * v[i] * v[j] * csc2[a];
      }
      potential += c * (c + 1.0) * pairing[a][a] * csc2[a];
    }
    Complex lap = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lap += form[i][j] * (h[i * n + j] + g[i] * g[j]);
    return -lap + potential;
  }

  void evaluate(const EvalPoint& p, Complex* identity, Complex* eigen) const {
    const std::size_t m = nc.covectors.size();
    std::vector<Complex> cot(m), csc2(m);
    for (std::size_t a = 0; a < m; ++a) {
      Complex ax = nc.pair(a, p.x);
      Complex s = std::sin(ax);
      cot[a] = std::cos(ax) / s;
      csc2[a] = 1.0 / (s * s);
    }
    *identity = identity_value(cot);
    *eigen = eigen_value(cot, csc2);
  }
};

std::pair<Complex, double> mean_and_spread(const std::vector<Complex>& v) {
  Complex mean = 0.0;
  for (auto z : v) mean += z;
  if (!v.empty()) mean /= static_cast<double>(v.size());
  double dev = 0.0;
  for (auto z : v) dev = std::max(dev, std::abs(z - mean));
  return {mean, dev};
}

CmsReport finish(std::vector<Complex> identity, std::vector<Complex> eigen, double tol) {
  CmsReport r;
  std::tie(r.mean, r.max_deviation) = mean_and_spread(identity);
  std::tie(r.eigenvalue_estimate, r.eigenvalue_deviation) = mean_and_spread(eigen);
  r.identity_values = std::move(identity);
  r.eigenvalue_values = std::move(eigen);
  r.constant = r.max_deviation < tol;
  return r;
}

}  // namespace

CmsReport cms_identity_residual(const VConfiguration& cfg, const Metric& metric, const CmsOptions& opts) {
  require_usable(cfg, metric);
  const CmsKernel kernel(cfg, metric);
  const SamplerOptions so{opts.margin_floor, 1000};
  std::vector<Complex> identity(opts.points), eigen(opts.points);
  std::vector<std::exception_ptr> errors(opts.points);
  const auto count = static_cast<std::ptrdiff_t>(opts.points);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      EvalPoint p = sample_point(kernel.nc, opts.seed, static_cast<std::size_t>(k), so);
      kernel.evaluate(p, &identity[k], &eigen[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return finish(std::move(identity), std::move(eigen), opts.tol);
}

CmsReport cms_identity_residual_serial(const VConfiguration& cfg, const Metric& metric, const CmsOptions& opts) {
  require_usable(cfg, metric);
  const CmsKernel kernel(cfg, metric);
  const SamplerOptions so{opts.margin_floor, 1000};
  std::vector<Complex> identity(opts.points), eigen(opts.points);
  for (std::size_t k = 0; k < opts.points; ++k) {
    EvalPoint p = sample_point(kernel.nc, opts.seed, k, so);
    kernel.evaluate(p, &identity[k], &eigen[k]);
  }
  return finish(std::move(identity), std::move(eigen), opts.tol);
}

EigenvalueEstimate eigenvalue_estimate(const VConfiguration& cfg, const Metric& metric, const CmsOptions& opts) {
  CmsReport r = cms_identity_residual(cfg, metric, opts);
  return {r.eigenvalue_estimate, r.eigenvalue_deviation};
}

Complex eigenvalue_from_constant(const VConfiguration& cfg, const Metric& metric, Complex constant) {
  Rational diag = 0;
  for (std::size_t a = 0; a < cfg.size(); ++a) diag += cfg.mult(a) * cfg.mult(a) * metric(cfg.covector(a), cfg.covector(a));
  return to_double(diag) - constant;
}

SeriesCheckReport check_series_with_metric(const VConfiguration& cfg, const Metric& metric) {
  if (determinant(metric.form) == 0) throw VeeError(ErrorCode::DegenerateForm, "metric is degenerate");
  return check_series_with_form(cfg, metric.form);
}

namespace {

std::vector<Integer> positive_divisors(Integer v) {
  v = abs(v);
  if (v > Integer("1000000000000"))
    throw VeeError(ErrorCode::NonScalarAction, "characteristic polynomial coefficients too large to search for rational roots");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational horner(const RatVector& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const RatVector& coeffs) {
  RatVector c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  std::size_t shift = 0;
  while (c[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
  if (c.size() <= 1) return roots;
  Integer l = lcm_of_denominators(c);
  Integer a0 = Rational(c.front() * l).get_num();
  Integer an = Rational(c.back() * l).get_num();
  for (const auto& p : positive_divisors(a0))
    for (const auto& q : positive_divisors(an))
      for (int s : {1, -1}) {
        Rational x(s * p, q);
        x.canonicalize();
        if (std::find(roots.begin(), roots.end(), x) != roots.end()) continue;
        if (horner(c, x) == 0) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

CmsToVee cms_to_vee(const VConfiguration& cfg, const Metric& metric) {
  if (cfg.is_degenerate()) throw VeeError(ErrorCode::DegenerateForm, "the form is degenerate");
  if (determinant(metric.form) == 0) throw VeeError(ErrorCode::DegenerateForm, "metric is degenerate");
  const std::size_t n = cfg.dim();
  CmsToVee out;
  out.metric_series = check_series_with_metric(cfg, metric);

  // M v = sum c_b b(v) b^w with b^w = form b^T, i.e. M = form * G.
  const RatMatrix op = metric.form * cfg.gram();
  std::size_t covered = 0;
  for (const auto& mu : rational_roots(characteristic_polynomial(op))) {
    auto basis = kernel_basis(op - mu * RatMatrix::identity(n));
    covered += basis.size();
    out.components.push_back({mu, std::move(basis)});
  }
  if (covered != n)
    throw VeeError(ErrorCode::NonScalarAction,
                   "sum c_b b (x) b^w is not diagonalizable with rational eigenvalues (" + std::to_string(covered) +
                       " of " + std::to_string(n) + " dimensions found)");

  const RatMatrix metric_on_v = mat_inverse(metric.form);
  out.blocks_orthogonal = true;
  out.form_matches_metric = true;
  for (std::size_t i = 0; i < out.components.size(); ++i)
    for (const auto& u : out.components[i].basis)
      for (std::size_t j = 0; j < out.components.size(); ++j)
        for (const auto& v : out.components[j].basis) {
          Rational gm = metric_on_v.bilinear(u, v);
          if (i != j && gm != 0) out.blocks_orthogonal = false;
          if (i == j && cfg.gram().bilinear(u, v) != out.components[i].scalar * gm) out.form_matches_metric = false;
        }

  out.vee_series = check_series_condition(cfg);
  out.is_trig_vee = out.metric_series.pass && out.blocks_orthogonal && out.form_matches_metric && out.vee_series.pass;
  return out;
}

CapitalLambda solve_capital_lambda(const VConfiguration& cfg, const Metric& metric, const PositiveSystem& psys) {
  if (determinant(metric.form) == 0) throw VeeError(ErrorCode::DegenerateForm, "metric is degenerate");
  auto solved = solve_proportionality(condition_tensors(cfg, metric.form, psys));
  CapitalLambda out;
  out.status = solved.status;
  out.witness = solved.witness;
  if (solved.status == LambdaStatus::Value) out.value = solved.ratio;
  return out;
}

}  // namespace vee
