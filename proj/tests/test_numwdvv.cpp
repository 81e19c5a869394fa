#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "vee/error.hpp"
#include "vee/numwdvv.hpp"
#include "vee/veecheck.hpp"

using namespace vee;
using namespace vee::test;

namespace {

// Point with Im a(x) < 0 for every positively signed covector.
EvalPoint domain_point(const VConfiguration& cfg, const PositiveSystem& ps, Complex y, std::vector<double> re) {
  double norm = 0.0;
  for (const auto& f : ps.functional) norm += to_double(f) * to_double(f);
  norm = std::sqrt(norm);
  std::vector<Complex> x(cfg.dim());
  for (std::size_t i = 0; i < cfg.dim(); ++i) x[i] = Complex(re[i], -0.4 * to_double(ps.functional[i]) / norm);
  return make_point(NumericConfig(cfg), y, x);
}

}  // namespace

TEST_SUITE("numwdvv") {
  TEST_CASE("trilogarithm series against reference values") {
    CHECK(std::abs(trilog_series(0.5) - 0.5372131936080402) < 1e-14);
    CHECK(std::abs(trilog_series(Complex(0.3, 0.4)) - Complex(0.28615178039588962, 0.43082140592475463)) < 1e-14);
    CHECK(std::abs(trilog_series(-0.9) - (-0.8186382015443639)) < 1e-14);
    CHECK(trilog_series(0.0) == Complex(0.0));
  }

  TEST_CASE("prepotential f against a reference value") {
    Complex f = prepotential_f(Complex(0.7, -0.5));
    CHECK(std::abs(f - Complex(0.11315125579128816, -0.12194570931595156)) < 1e-14);
    CHECK_THROWS_AS(prepotential_f(Complex(0.7, 0.5)), VeeError);
  }

  TEST_CASE("f''' approaches cot at second order") {
    const std::vector<Complex> xs{{0.5, -1.0}, {2.0, -0.5}, {1.0, -1.0}, {-1.3, -0.7}, {3.0, -2.0}};
    double coarse = check_f_derivative(xs, 2e-2);
    double fine = check_f_derivative(xs, 1e-2);
    double ratio = coarse / fine;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
  }

  TEST_CASE("third derivative matrices match finite differences of F") {
    for (const char* name : {"A2", "B2", "G2"}) {
      CAPTURE(name);
      CatalogEntry e = catalog_get(name);
      const Rational& l2 = e.expected->lambda_squared;
      PositiveSystem ps = positive_system(e.cfg);
      EvalPoint p = domain_point(e.cfg, ps, Complex(0.3, 0.2), {0.4, -0.9});
      auto f = third_derivative_matrices(e.cfg, l2, p);
      const std::vector<Complex> v{Complex(0.5, 0.1), Complex(-0.3, 0.0), Complex(0.8, -0.2)};
      Complex analytic = 0.0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          for (std::size_t k = 0; k < 3; ++k) analytic += v[i] * v[j] * v[k] * f[i](j, k);
      auto at = [&](double t) {
        std::vector<Complex> x = p.x;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += t * v[i + 1];
        EvalPoint q = make_point(NumericConfig(e.cfg), p.y + t * v[0], x);
        return eval_prepotential(e.cfg, l2, ps, q);
      };
      const double h = 1e-2;
      Complex fd = (at(1.5 * h) - 3.0 * at(0.5 * h) + 3.0 * at(-0.5 * h) - at(-1.5 * h)) / (h * h * h);
      CHECK(std::abs(fd - analytic) < 1e-3 * std::max(1.0, std::abs(analytic)));
    }
  }

  TEST_CASE("F0 pairs commute to rounding") {
    CatalogEntry e = catalog_get("B3");
    EvalPoint p = sample_point(NumericConfig(e.cfg), 3, 0);
    auto r = pair_residuals(third_derivative_matrices(e.cfg, e.expected->lambda_squared, p));
    for (std::size_t j = 0; j < r.size(); ++j) {
      CHECK(r[0][j] < 1e-12);
      CHECK(r[j][0] < 1e-12);
      CHECK(r[j][j] < 1e-12);
    }
  }

  TEST_CASE("catalog solutions satisfy WDVV; perturbed lambda does not") {
    for (const auto& e : valued_entries()) {
      CAPTURE(e.name);
      const Rational& l2 = e.expected->lambda_squared;
      CHECK(wdvv_residual(e.cfg, l2).aggregate < 1e-8);
      CHECK(wdvv_residual(e.cfg, Rational(l2 * q(101, 100))).aggregate > 1e-4);
    }
  }

  TEST_CASE("lambda and -lambda give the same residual") {
    for (const char* name : {"A2", "G2", "Prop5"}) {
      CatalogEntry e = catalog_get(name);
      Complex lam = principal_lambda(e.expected->lambda_squared);
      ResidualReport plus = wdvv_residual(e.cfg, lam);
      ResidualReport minus = wdvv_residual(e.cfg, -lam);
      CHECK(minus.aggregate < 1e-8);
      CHECK(std::abs(plus.aggregate - minus.aggregate) < 1e-10);
    }
  }

  TEST_CASE("parallel kernel equals the serial reference bit for bit") {
    for (const char* name : {"B3", "TenVector"}) {
      CatalogEntry e = catalog_get(name);
      WdvvOptions opts{37, 9, 0.1};
      Complex lam = principal_lambda(e.expected->lambda_squared);
      ResidualReport a = wdvv_residual(e.cfg, lam, opts);
      ResidualReport b = wdvv_residual_serial(e.cfg, lam, opts);
      CHECK(a.per_point == b.per_point);
      CHECK(a.aggregate == b.aggregate);
      CHECK(wdvv_residual(e.cfg, lam, opts).per_point == a.per_point);
    }
  }

  TEST_CASE("seeded sampling") {
    NumericConfig nc(catalog_get("G2").cfg);
    EvalPoint a = sample_point(nc, 7, 3), b = sample_point(nc, 7, 3), c = sample_point(nc, 8, 3);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.x != c.x);
    CHECK(a.margin > 0.1);
    for (const auto& xi : a.x) {
      CHECK(std::abs(xi.real()) <= 2.0);
      CHECK(xi.imag() <= -0.25);
      CHECK(xi.imag() >= -1.0);
    }
    SamplerOptions impossible{2.0, 50};
    try {
      sample_point(nc, 0, 0, impossible);
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::SamplingExhausted);
    }
  }

  TEST_CASE("errors") {
    VConfiguration a2 = catalog_get("A2").cfg;
    try {
      wdvv_residual(a2, Rational(0));
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::ZeroLambda);
    }
    NumericConfig nc(a2);
    EvalPoint bad = make_point(nc, 0.0, {Complex(0.0, 0.0), Complex(0.5, -0.5)});
    try {
      third_derivative_matrices(a2, Rational(36), bad);
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::SingularPoint);
    }
    EvalPoint up = make_point(nc, 0.0, {Complex(0.3, 0.5), Complex(0.5, 0.5)});
    try {
      eval_prepotential(a2, Rational(36), positive_system(a2), up);
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::OutOfDomain);
    }
  }
}
