#pragma once

#include <cstdint>
#include <vector>

#include "vee/config.hpp"
#include "vee/sampling.hpp"
#include "vee/veecheck.hpp"

namespace vee {

/// Inner product on V* used by the Schrodinger operator:
/// (a, b) = a * form * b^T and Laplacian sum_{ij} form_ij d_i d_j.
struct Metric {
  RatMatrix form;
  bool is_vee_form = false;

  /// The inner product induced by G = sum c_a a^T a. Throws DegenerateForm.
  static Metric vee(const VConfiguration& cfg);
  /// Throws InvalidArgument unless square symmetric, DegenerateForm if singular.
  static Metric from_matrix(RatMatrix form);

  Rational operator()(const RatVector& a, const RatVector& b) const { return form.bilinear(a, b); }
};

struct CmsOptions {
  std::size_t points = 10;
  std::uint64_t seed = 0;
  double margin_floor = 0.1;
  double tol = 1e-9;
};

/// Values of S(x) = sum_{a != b} c_a c_b (a, b) cot a(x) cot b(x) at sample
/// points, plus the eigenvalue (L psi)/psi for psi = prod sin^{-c_a} a(x).
struct CmsReport {
  std::vector<Complex> identity_values;
  Complex mean;
  double max_deviation = 0.0;
  bool constant = false;  // max_deviation < tol
  std::vector<Complex> eigenvalue_values;
  Complex eigenvalue_estimate;
  double eigenvalue_deviation = 0.0;
};

/// Throws CollinearPair, DegenerateForm, SamplingExhausted.
CmsReport cms_identity_residual(const VConfiguration& cfg, const Metric& metric, const CmsOptions& opts = {});
CmsReport cms_identity_residual_serial(const VConfiguration& cfg, const Metric& metric, const CmsOptions& opts = {});

struct EigenvalueEstimate {
  Complex mu;
  double deviation = 0.0;
};

EigenvalueEstimate eigenvalue_estimate(const VConfiguration& cfg, const Metric& metric, const CmsOptions& opts = {});

/// Closed form sum c_a^2 (a, a) - const used as a cross-check of the numeric
/// eigenvalue; `constant` is the identity value.
Complex eigenvalue_from_constant(const VConfiguration& cfg, const Metric& metric, Complex constant);

SeriesCheckReport check_series_with_metric(const VConfiguration& cfg, const Metric& metric);

/// Exact rational roots of a polynomial (constant term first).
std::vector<Rational> rational_roots(const RatVector& coeffs);

struct CmsComponent {
  Rational scalar;               // eigenvalue of M = sum c_b b (x) b^w on this block
  std::vector<RatVector> basis;  // basis of the block in V
};

struct CmsToVee {
  bool is_trig_vee = false;
  std::vector<CmsComponent> components;
  bool blocks_orthogonal = false;      // (V_i, V_j) = 0 for i != j
  bool form_matches_metric = false;    // G = scalar_i * metric on each V_i
  SeriesCheckReport metric_series;     // series condition with the supplied metric
  SeriesCheckReport vee_series;        // the conclusion: series condition with the vee-form
};

/// Throws NonScalarAction when M has irrational eigenvalues or is not
/// diagonalizable over Q, DegenerateForm on a degenerate form or metric.
CmsToVee cms_to_vee(const VConfiguration& cfg, const Metric& metric);

struct CapitalLambda {
  LambdaStatus status = LambdaStatus::NoSolution;
  Rational value;
  std::optional<TensorWitness> witness;

  bool has_value() const { return status == LambdaStatus::Value; }
};

/// Lambda with sum_{a,b in A+} (Lambda (a,b) - 1) c_a c_b B_ab(a,b) B_ab(c,d) = 0,
/// (a, b) taken from the metric. For the vee-form Lambda = lambda^2 / 4.
CapitalLambda solve_capital_lambda(const VConfiguration& cfg, const Metric& metric, const PositiveSystem& psys);

}  // namespace vee
