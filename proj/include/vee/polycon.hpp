#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vee/polynomial.hpp"
#include "vee/rational.hpp"

namespace vee {

/// One series condition with the multiplicities as variables, cleared of the
/// det G denominator: sum_{b in Gamma} c_b sign_b (a adj(G(c)) b^T).
struct Constraint {
  std::size_t base = 0;
  std::size_t series_index = 0;
  std::vector<std::size_t> members;
  MultiPoly poly;
};

/// A rational multiplicity assignment is a trigonometric vee-system iff every
/// constraint vanishes and the nondegeneracy polynomial (det G) does not.
struct ConstraintSet {
  std::vector<std::string> vars;
  std::size_t dim = 0;
  std::vector<Constraint> constraints;
  MultiPoly nondegeneracy;

  std::vector<const Constraint*> nontrivial() const;
  bool satisfied_by(std::span<const Rational> mults) const;
};

/// Default symbol names c1..cm.
std::vector<std::string> default_symbols(std::size_t count);

/// Determinant of a square matrix of polynomials by cofactor expansion.
MultiPoly polynomial_determinant(const std::vector<std::vector<MultiPoly>>& m);

/// G(c) = sum_k c_k v_k^T v_k with symbolic c_k.
std::vector<std::vector<MultiPoly>> symbolic_gram(std::span<const RatVector> vectors, const std::vector<std::string>& symbols);

/// Throws SpanDeficient when the vectors do not span, DuplicateCovector /
/// ZeroCovector / DimensionMismatch on malformed input.
ConstraintSet series_constraints(std::span<const RatVector> vectors, std::vector<std::string> symbols = {});

struct FamilyReport {
  bool pass = false;
  std::vector<std::size_t> failing;     // indices into ConstraintSet::constraints
  std::vector<MultiPoly> cleared;       // constraint numerators in the parameters
  MultiPoly nondegeneracy_numerator;    // det G numerator in the parameters
  MultiPoly denominator_locus;          // product of parametrization denominators
};

/// Substitutes c_k = num_k / den_k (functions of shared parameters) into the
/// constraints and checks they vanish identically. Every constraint and det G
/// is homogeneous of degree n in c, so writing c_k = p_k * (D / q_k) / D with
/// D the product of denominators turns each into an exact polynomial identity.
/// Throws InvalidParams (symbol missing, zero denominator) and
/// DegenerateParametrization (det G vanishes identically).
FamilyReport verify_family(std::span<const RatVector> vectors, const std::vector<std::string>& symbols,
                           const std::map<std::string, RationalFunction>& parametrization);

struct SearchOptions {
  std::size_t starts = 48;
  std::uint64_t seed = 0;
  long max_den = 1000000;
  double residual_tol = 1e-10;
  int max_iterations = 300;
};

struct SearchResult {
  RatVector mults;
  std::size_t start = 0;
};

/// Seeded Levenberg-Marquardt descent on the series conditions (each divided
/// by det G), with c[normalized] = 1. Converged points are rationalized by
/// continued fractions; if that does not verify, one free multiplicity at a
/// time is pinned to a nearby small-denominator rational and the descent is
/// repeated. Only assignments that pass the exact series check on a
/// non-degenerate form are returned, deduplicated, in start order.
std::vector<SearchResult> find_multiplicities(std::span<const RatVector> vectors, std::size_t normalized,
                                              const SearchOptions& opts = {});

/// Single-threaded reference for find_multiplicities.
std::vector<SearchResult> find_multiplicities_serial(std::span<const RatVector> vectors, std::size_t normalized,
                                                     const SearchOptions& opts = {});

/// Exact acceptance test used by the search.
bool verify_multiplicities(std::span<const RatVector> vectors, const RatVector& mults);

}  // namespace vee
