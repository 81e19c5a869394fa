#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vee/config.hpp"

namespace vee {

// ---------------------------------------------------------------------------
// Series condition: for every alpha and every alpha-series Gamma,
//   sum_{beta in Gamma} c_beta (alpha, beta) alpha ^ beta = 0.
// All members of one series lie in span(alpha, beta_0) with
// alpha ^ beta = sign * (alpha ^ beta_0), so each condition is one rational
// number: sum c_beta (alpha, beta) sign_beta.
// ---------------------------------------------------------------------------

struct SeriesResidual {
  std::size_t base = 0;
  std::size_t series_index = 0;
  std::vector<std::size_t> members;
  Rational residual;
  bool pass = true;
};

struct SeriesCheckReport {
  std::vector<SeriesResidual> items;
  bool pass = true;

  const SeriesResidual* first_failure() const;
};

SeriesCheckReport check_series_condition(const VConfiguration& cfg);

/// Same algebra with (alpha, beta) = alpha * form * beta^T for an arbitrary
/// symmetric form on V*.
SeriesCheckReport check_series_with_form(const VConfiguration& cfg, const RatMatrix& covector_form);

// ---------------------------------------------------------------------------
// lambda^2 tensor condition over a positive system.
// Lambda^2 V* uses the ordered basis e^i ^ e^j (i < j); the two 4-tensors are
// stored as m x m arrays with m = n(n-1)/2:
//   P = sum_{a,b in A+} c_a c_b (a,b) (a^b) (x) (a^b)
//   Q = sum_{a,b in A+} c_a c_b       (a^b) (x) (a^b)
// and the condition reads (lambda^2 / 4) P = Q.
// ---------------------------------------------------------------------------

/// Coefficients of a ^ b over e^i ^ e^j, i < j.
RatVector wedge(const RatVector& a, const RatVector& b);

struct ConditionTensors {
  RatMatrix p;
  RatMatrix q;
};

ConditionTensors condition_tensors(const VConfiguration& cfg, const RatMatrix& covector_form, const PositiveSystem& psys);

enum class LambdaStatus { Value, NoSolution, AnyLambda };

struct TensorWitness {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational p;
  Rational q;
};

/// Solution of ratio * P = Q.
struct ProportionalitySolve {
  LambdaStatus status = LambdaStatus::NoSolution;
  Rational ratio;
  std::optional<TensorWitness> witness;
};

ProportionalitySolve solve_proportionality(const ConditionTensors& t);

struct LambdaSolution {
  LambdaStatus status = LambdaStatus::NoSolution;
  Rational lambda_squared;  // meaningful when status == Value
  std::optional<TensorWitness> witness;
  PositiveSystem psys;

  bool has_value() const { return status == LambdaStatus::Value; }
};

LambdaSolution solve_lambda_squared(const VConfiguration& cfg, const PositiveSystem& psys);

// ---------------------------------------------------------------------------
// Implied identities
// ---------------------------------------------------------------------------

struct V3Item {
  std::size_t base = 0;
  RatVector two_form;  // sum_b c_b (a,b) a ^ b over e^i ^ e^j
  bool pass = true;
};

struct V3Report {
  std::vector<V3Item> items;
  bool pass = true;
};

/// For each alpha: sum over all beta of c_beta (alpha,beta) alpha ^ beta = 0.
V3Report check_v3_identity(const VConfiguration& cfg);

struct PlaneItem {
  std::size_t base = 0;
  std::vector<std::size_t> plane_members;  // entries of A in the plane, alpha's parallels included
  RatVector sum;                           // sum c_g (alpha,g) g
  bool pass = true;
};

struct RationalVeeReport {
  std::vector<PlaneItem> items;
  bool pass = true;
};

/// For each alpha and each 2-plane through alpha spanned by entries:
/// sum_{g in A cap plane} c_g (alpha, g) g is proportional to alpha.
RationalVeeReport check_rational_vee(const VConfiguration& cfg);

// ---------------------------------------------------------------------------

struct FullCheck {
  bool degenerate = false;
  bool is_trig_vee = false;
  bool is_irreducible = false;
  std::size_t component_count = 0;
  LambdaSolution lambda;
  SeriesCheckReport series;
  /// is_trig_vee and a lambda^2 value exists
  bool defines_solution = false;
};

/// Never throws on a well-formed configuration; degeneracy is reported.
FullCheck full_check(const VConfiguration& cfg, const std::optional<RatVector>& functional = std::nullopt);

}  // namespace vee
