#include <doctest.h>

#include "support.hpp"
#include "vee/error.hpp"
#include "vee/polycon.hpp"
#include "vee/veecheck.hpp"

using namespace vee;
using namespace vee::test;

namespace {

std::map<std::string, RationalFunction> family(const std::vector<std::string>& params,
                                               const std::vector<std::pair<std::string, std::string>>& exprs) {
  std::map<std::string, RationalFunction> out;
  for (const auto& [sym, e] : exprs) out[sym] = parse_rational_function(e, params);
  return out;
}

const std::vector<RatVector> prop3_vectors{{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}, {q(1), q(-1)}};

}  // namespace

TEST_SUITE("polycon") {
  TEST_CASE("constraints are homogeneous of degree n") {
    for (const char* name : {"A2", "B2", "G2", "Prop5", "A3", "B3"}) {
      CAPTURE(name);
      VConfiguration cfg = catalog_get(name).cfg;
      auto vs = vectors_of(cfg);
      ConstraintSet cs = series_constraints(vs);
      CHECK(cs.nondegeneracy.total_degree() == static_cast<int>(cfg.dim()));
      for (const auto* c : cs.nontrivial()) {
        CHECK(c->poly.is_homogeneous());
        CHECK(c->poly.total_degree() == static_cast<int>(cfg.dim()));
      }
    }
  }

  TEST_CASE("constraint values equal det G times the exact series residuals") {
    std::mt19937_64 rng(99);
    for (const char* name : {"B2", "G2", "Prop4", "A3"}) {
      VConfiguration cfg = catalog_get(name).cfg;
      auto vs = vectors_of(cfg);
      ConstraintSet cs = series_constraints(vs);
      for (int k = 0; k < 5; ++k) {
        RatVector c(vs.size());
        for (auto& x : c) x = random_rational(rng);
        VConfiguration r = cfg.with_multiplicities(c);
        if (r.is_degenerate()) continue;
        SeriesCheckReport rep = check_series_condition(r);
        REQUIRE(rep.items.size() == cs.constraints.size());
        for (std::size_t i = 0; i < rep.items.size(); ++i) {
          CHECK(rep.items[i].base == cs.constraints[i].base);
          CHECK(cs.constraints[i].poly.evaluate(c) == r.gram_det() * rep.items[i].residual);
        }
        CHECK(cs.satisfied_by(c) == rep.pass);
      }
      CHECK(cs.satisfied_by(mults_of(cfg)));
    }
  }

  TEST_CASE("Prop3 vectors force c1 = c2") {
    ConstraintSet cs = series_constraints(prop3_vectors, {"c1", "c2", "cp", "cm"});
    CHECK_FALSE(cs.nontrivial().empty());
    const std::vector<std::string> syms{"c1", "c2", "cp", "cm"};
    FamilyReport equal = verify_family(prop3_vectors, syms, family({"u", "v", "w"}, {{"c1", "u"}, {"c2", "u"}, {"cp", "v"}, {"cm", "w"}}));
    CHECK(equal.pass);
    CHECK(equal.failing.empty());
    FamilyReport unequal = verify_family(prop3_vectors, syms, family({"v", "w"}, {{"c1", "2"}, {"c2", "1"}, {"cp", "v"}, {"cm", "w"}}));
    CHECK_FALSE(unequal.pass);
    CHECK_FALSE(unequal.failing.empty());
  }

  TEST_CASE("Prop4 family") {
    const std::vector<RatVector> vs{{q(1), q(0)}, {q(2), q(0)}, {q(0), q(1)}, {q(1), q(1)}, {q(1), q(-1)}};
    const std::vector<std::string> syms{"c1", "ct1", "c2", "cp", "cm"};
    FamilyReport r = verify_family(
        vs, syms, family({"a", "b", "u"}, {{"c1", "a"}, {"ct1", "u*(a-b)/(2*b)"}, {"c2", "b"}, {"cp", "u"}, {"cm", "u"}}));
    CHECK(r.pass);
    CHECK(r.denominator_locus.to_string() == "2*b");
    FamilyReport off = verify_family(
        vs, syms, family({"a", "b", "u"}, {{"c1", "a"}, {"ct1", "u*(a-b)/b"}, {"c2", "b"}, {"cp", "u"}, {"cm", "u"}}));
    CHECK_FALSE(off.pass);
  }

  TEST_CASE("Prop5 parametrization") {
    VConfiguration cfg = catalog_get("Prop5").cfg;
    auto vs = vectors_of(cfg);
    const std::vector<std::string> syms{"c1", "c2", "ct2", "a1", "a2", "b1", "b2"};
    FamilyReport r = verify_family(vs, syms,
                                   family({"t", "s"}, {{"c1", "t*(3*t-2*s)/(3*t+4*s)"},
                                                       {"c2", "3*t+2*s"},
                                                       {"ct2", "s"},
                                                       {"a1", "3*t"},
                                                       {"a2", "3*t"},
                                                       {"b1", "t"},
                                                       {"b2", "t"}}));
    CHECK(r.pass);
    CHECK(r.denominator_locus.to_string() == "3*t + 4*s");
    CHECK_FALSE(r.nondegeneracy_numerator.is_zero());
  }

  TEST_CASE("errors") {
    const std::vector<std::string> syms{"c1", "c2", "c3"};
    const std::vector<RatVector> a2{{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}};
    try {
      verify_family(a2, syms, family({"t"}, {{"c1", "t"}, {"c2", "t"}, {"c3", "-t/2"}}));
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::DegenerateParametrization);
    }
    try {
      verify_family(a2, syms, family({"t"}, {{"c1", "t"}, {"c2", "t"}}));
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::InvalidParams);
    }
    try {
      auto f = family({"t"}, {{"c1", "t"}, {"c2", "t"}, {"c3", "t"}});
      f["c3"].den = MultiPoly(std::vector<std::string>{"t"});
      verify_family(a2, syms, f);
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::InvalidParams);
    }
    try {
      const std::vector<RatVector> line{{q(1), q(0)}, {q(2), q(0)}};
      series_constraints(line);
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::SpanDeficient);
    }
  }

  TEST_CASE("search certifies the ten-vector multiplicities") {
    auto vs = vectors_of(catalog_get("TenVector").cfg);
    auto found = find_multiplicities(vs, 0);
    REQUIRE(found.size() == 1);
    CHECK(found[0].mults == RatVector{q(1), q(1, 4), q(1), q(1, 4), q(2, 3), q(2, 3), q(1, 6), q(1, 6), q(1, 6), q(1, 6)});
    CHECK(verify_multiplicities(vs, found[0].mults));
  }

  TEST_CASE("search on G2 plus doubled short roots finds only c_short = 3 c_long") {
    auto vs = vectors_of(catalog_get("G2timesScaledA2").cfg);
    auto found = find_multiplicities(vs, 0);
    REQUIRE_FALSE(found.empty());
    for (const auto& r : found) {
      CHECK(verify_multiplicities(vs, r.mults));
      CHECK(r.mults[0] == 3 * r.mults[1]);
      CHECK(r.mults[6] == r.mults[7]);
      CHECK(r.mults[7] == r.mults[8]);
    }
  }

  TEST_CASE("search results always pass the exact check") {
    // B2 plus one extra non-invariant covector
    const std::vector<RatVector> vs{{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}, {q(1), q(-1)}, {q(1), q(2)}};
    SearchOptions opts;
    opts.starts = 12;
    for (const auto& r : find_multiplicities(vs, 0, opts)) CHECK(verify_multiplicities(vs, r.mults));
  }

  TEST_CASE("serial and parallel searches agree") {
    auto vs = vectors_of(catalog_get("G2").cfg);
    SearchOptions opts;
    opts.starts = 16;
    opts.seed = 5;
    auto a = find_multiplicities(vs, 0, opts);
    auto b = find_multiplicities_serial(vs, 0, opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].mults == b[i].mults);
      CHECK(a[i].start == b[i].start);
    }
  }
}
