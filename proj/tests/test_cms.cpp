#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "vee/cms.hpp"
#include "vee/error.hpp"

using namespace vee;
using namespace vee::test;

namespace {

VConfiguration b2_1211() {
  return from_text("dim 2\nvector 1 0 mult 1\nvector 0 1 mult 2\nvector 1 1 mult 1\nvector 1 -1 mult 1\n");
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

}  // namespace

TEST_SUITE("cms") {
  TEST_CASE("A2 identity constant and eigenvalue") {
    VConfiguration a2 = catalog_get("A2").cfg;
    CmsReport r = cms_identity_residual(a2, Metric::vee(a2));
    CHECK(r.constant);
    CHECK(std::abs(r.mean - Complex(-2.0 / 3.0)) < 1e-10);
    CHECK(std::abs(r.eigenvalue_estimate - Complex(8.0 / 3.0)) < 1e-8);
    CHECK(std::abs(eigenvalue_from_constant(a2, Metric::vee(a2), r.mean) - r.eigenvalue_estimate) < 1e-8);
  }

  TEST_CASE("one covector in one dimension") {
    VConfiguration a1 = from_text("dim 1\nvector 1 mult 1\n");
    EigenvalueEstimate mu = eigenvalue_estimate(a1, Metric::vee(a1));
    CHECK(std::abs(mu.mu - Complex(1.0)) < 1e-10);
    CmsReport r = cms_identity_residual(a1, Metric::vee(a1));
    CHECK(std::abs(r.mean) < 1e-12);
  }

  TEST_CASE("identity holds on every collinear-free catalog entry") {
    for (const auto& info : catalog_list()) {
      CatalogEntry e = catalog_get(info.name);
      bool collinear = false;
      for (std::size_t i = 0; i < e.cfg.size(); ++i)
        for (std::size_t j = i + 1; j < e.cfg.size(); ++j) collinear = collinear || parallel(e.cfg.covector(i), e.cfg.covector(j));
      CAPTURE(e.name);
      if (collinear) {
        CHECK_THROWS_AS(cms_identity_residual(e.cfg, Metric::vee(e.cfg)), VeeError);
        continue;
      }
      CmsReport r = cms_identity_residual(e.cfg, Metric::vee(e.cfg));
      CHECK(r.max_deviation < 1e-9);
      CHECK(std::abs(eigenvalue_from_constant(e.cfg, Metric::vee(e.cfg), r.mean) - r.eigenvalue_estimate) < 1e-8);
    }
  }

  TEST_CASE("collinear pairs are rejected") {
    VConfiguration p4 = catalog_get("Prop4").cfg;
    try {
      cms_identity_residual(p4, Metric::vee(p4));
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::CollinearPair);
    }
  }

  TEST_CASE("B2(1,2,1,1): the identity breaks and so does the series condition") {
    VConfiguration cfg = b2_1211();
    CmsReport r = cms_identity_residual(cfg, Metric::vee(cfg));
    CHECK(r.max_deviation > 1e-3);
    CHECK_FALSE(check_series_with_metric(cfg, Metric::vee(cfg)).pass);
    CmsToVee c = cms_to_vee(cfg, Metric::vee(cfg));
    CHECK_FALSE(c.is_trig_vee);
  }

  TEST_CASE("rescaled metrics: the converse direction") {
    std::mt19937_64 rng(17);
    for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
      VConfiguration cfg = catalog_get(name).cfg;
      for (int k = 0; k < 3; ++k) {
        Rational s = random_rational(rng);
        Metric m = Metric::from_matrix(s * cfg.covector_form());
        CmsReport r = cms_identity_residual(cfg, m);
        REQUIRE(r.constant);
        CHECK(check_series_with_metric(cfg, m).pass);
        CmsToVee c = cms_to_vee(cfg, m);
        CHECK(c.is_trig_vee);
        REQUIRE(c.components.size() == 1);
        CHECK(c.components[0].scalar == s);
        CHECK(c.components[0].basis.size() == cfg.dim());
      }
    }
  }

  TEST_CASE("block-rescaled metric on a direct sum") {
    VConfiguration a = catalog_get("A2").cfg, b = catalog_get("B2").cfg;
    VConfiguration sum = direct_sum(a, b);
    Metric m = Metric::from_matrix(block_diag(q(1, 2) * a.covector_form(), q(3) * b.covector_form()));
    CHECK(cms_identity_residual(sum, m).constant);
    CmsToVee c = cms_to_vee(sum, m);
    CHECK(c.is_trig_vee);
    CHECK(c.blocks_orthogonal);
    CHECK(c.form_matches_metric);
    REQUIRE(c.components.size() == 2);
    std::vector<Rational> scalars{c.components[0].scalar, c.components[1].scalar};
    std::sort(scalars.begin(), scalars.end());
    CHECK(scalars == std::vector<Rational>{q(1, 2), q(3)});
  }

  TEST_CASE("identity metric on an orthogonal pair with unequal multiplicities") {
    VConfiguration cfg = catalog_get("OrthogonalPair", {{"c1", q(1)}, {"c2", q(2)}}).cfg;
    CmsToVee c = cms_to_vee(cfg, Metric::from_matrix(RatMatrix::identity(2)));
    CHECK(c.is_trig_vee);
    std::vector<Rational> scalars;
    for (const auto& comp : c.components) scalars.push_back(comp.scalar);
    std::sort(scalars.begin(), scalars.end());
    CHECK(scalars == std::vector<Rational>{q(1), q(2)});
  }

  TEST_CASE("capital lambda on the vee form is lambda^2 / 4") {
    for (const auto& e : valued_entries()) {
      CapitalLambda cl = solve_capital_lambda(e.cfg, Metric::vee(e.cfg), positive_system(e.cfg));
      REQUIRE(cl.has_value());
      CHECK(cl.value == e.expected->lambda_squared / 4);
    }
  }

  TEST_CASE("metric validation") {
    try {
      Metric::from_matrix(RatMatrix{{q(1), q(2)}, {q(0), q(1)}});
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
    try {
      Metric::from_matrix(RatMatrix{{q(1), q(1)}, {q(1), q(1)}});
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::DegenerateForm);
    }
  }

  TEST_CASE("rational roots") {
    // (t - 1/2)(t + 3) = t^2 + 5/2 t - 3/2
    CHECK(rational_roots({q(-3, 2), q(5, 2), q(1)}) == std::vector<Rational>{q(-3), q(1, 2)});
    CHECK(rational_roots({q(-2), q(0), q(1)}).empty());
    CHECK(rational_roots({q(0), q(0), q(1)}) == std::vector<Rational>{q(0)});
  }

  TEST_CASE("parallel kernel equals the serial reference") {
    VConfiguration cfg = catalog_get("B4").cfg;
    CmsOptions opts{23, 4, 0.1, 1e-9};
    CmsReport a = cms_identity_residual(cfg, Metric::vee(cfg), opts);
    CmsReport b = cms_identity_residual_serial(cfg, Metric::vee(cfg), opts);
    CHECK(a.identity_values == b.identity_values);
    CHECK(a.eigenvalue_values == b.eigenvalue_values);
    CHECK(a.max_deviation == b.max_deviation);
  }
}
