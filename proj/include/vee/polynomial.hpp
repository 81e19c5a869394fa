#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vee/rational.hpp"

namespace vee {

using Monomial = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients over a named,
/// ordered variable list. Zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly p) { return p *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Replaces variable i by images[i]; all images share one variable list,
  /// which becomes the result's.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  std::string to_string() const;

 private:
  void require_same_vars(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  std::map<Monomial, Rational, GrlexLess> terms_;
};

/// Quotient num / den of polynomials over the same variables.
struct RationalFunction {
  MultiPoly num;
  MultiPoly den;

  static RationalFunction constant(std::vector<std::string> vars, const Rational& c);
};

/// Parses + - * / ^ (non-negative integer exponent), parentheses, integer
/// literals and identifiers. Identifiers must appear in `vars`.
/// Throws VeeError(ParseError).
RationalFunction parse_rational_function(std::string_view text, const std::vector<std::string>& vars);

/// Identifiers appearing in the expression, in order of first appearance.
std::vector<std::string> expression_identifiers(std::string_view text);

}  // namespace vee
