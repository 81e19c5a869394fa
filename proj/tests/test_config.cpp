#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "vee/error.hpp"

using namespace vee;
using vee::test::from_text;
using vee::test::q;

namespace {

ErrorCode build_error(std::size_t dim, std::vector<Entry> es) {
  try {
    VConfiguration::build(dim, std::move(es));
  } catch (const VeeError& e) {
    return e.code();
  }
  FAIL("no throw");
  return ErrorCode::InvalidArgument;
}

Entry ent(RatVector v, Rational c) { return {Covector{std::move(v)}, std::move(c), ""}; }

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("A2 gram form") {
    VConfiguration a2 = catalog_get("A2").cfg;
    CHECK(a2.gram() == RatMatrix{{q(2), q(1)}, {q(1), q(2)}});
    CHECK(a2.gram_det() == 3);
    CHECK(a2.covector_form() == RatMatrix{{q(2, 3), q(-1, 3)}, {q(-1, 3), q(2, 3)}});
    CHECK(vee_product(a2, Covector{{q(1), q(0)}}, Covector{{q(0), q(1)}}) == q(-1, 3));
    CHECK(a2.entry(2).label == "a+b");
  }

  TEST_CASE("dual vectors satisfy G v = a") {
    VConfiguration b2 = catalog_get("B2", {{"cs", q(2)}, {"cl", q(3)}}).cfg;
    for (std::size_t i = 0; i < b2.size(); ++i) {
      RatVector d = dual_vector(b2, b2.entry(i).covector);
      CHECK(b2.gram().apply(d) == b2.covector(i));
      for (std::size_t j = 0; j < b2.size(); ++j)
        CHECK(vee_product(b2, b2.entry(i).covector, b2.entry(j).covector) ==
              vee_product(b2, b2.entry(j).covector, b2.entry(i).covector));
    }
  }

  TEST_CASE("build validation") {
    CHECK(build_error(2, {ent({q(0), q(0)}, 1)}) == ErrorCode::ZeroCovector);
    CHECK(build_error(2, {ent({q(1), q(0)}, 0)}) == ErrorCode::ZeroMultiplicity);
    CHECK(build_error(2, {ent({q(1), q(0)}, 1), ent({q(1), q(0)}, 2)}) == ErrorCode::DuplicateCovector);
    CHECK(build_error(2, {ent({q(1), q(2)}, 1), ent({q(-1), q(-2)}, 2)}) == ErrorCode::DuplicateCovector);
    CHECK(build_error(2, {ent({q(1), q(0), q(0)}, 1)}) == ErrorCode::DimensionMismatch);
    // parallel but not equal up to sign is allowed
    CHECK_NOTHROW(VConfiguration::build(2, {ent({q(1), q(0)}, 1), ent({q(2), q(0)}, 1), ent({q(0), q(1)}, 1)}));
  }

  TEST_CASE("degenerate form is representable") {
    VConfiguration d = from_text("dim 2\nvector 1 0 mult 1\nvector 0 1 mult 1\nvector 1 1 mult -1/2\n");
    CHECK(d.is_degenerate());
    try {
      d.covector_form();
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::DegenerateForm);
    }
  }

  TEST_CASE("positive systems") {
    VConfiguration a2 = catalog_get("A2").cfg;
    PositiveSystem ps = positive_system(a2);
    CHECK(ps.functional == RatVector{q(1), q(1)});
    for (std::size_t i = 0; i < a2.size(); ++i) CHECK(dot(ps.signed_covector(a2, i), ps.functional) > 0);

    VConfiguration b2 = catalog_get("B2").cfg;
    PositiveSystem pb = positive_system(b2);
    CHECK(pb.functional == RatVector{q(1), q(2)});  // t = 1 kills e1 - e2
    PositiveSystem custom = positive_system(b2, RatVector{q(-1), q(3)});
    for (std::size_t i = 0; i < b2.size(); ++i) CHECK(dot(custom.signed_covector(b2, i), custom.functional) > 0);
    try {
      positive_system(a2, RatVector{q(1), q(-1)});
      FAIL("no throw");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::FunctionalVanishes);
    }
  }

  TEST_CASE("B2 series of e1+e2") {
    VConfiguration b2 = catalog_get("B2").cfg;
    auto s = alpha_series(b2, 2);
    REQUIRE(s.size() == 2);
    CHECK(s[0].members.size() == 2);  // e1, e2 = -e1 + (e1+e2)
    CHECK(s[1].members.size() == 1);  // e1 - e2
    CHECK(s[0].members[1].sign == -1);
  }

  TEST_CASE("half-integer covectors use the lattice of the configuration") {
    VConfiguration p5 = catalog_get("Prop5").cfg;
    // alpha = e2: (e1+e2)/2 and (e1-e2)/2 differ by e2; (e1+-3e2)/2 are further steps.
    auto s = alpha_series(p5, 1);
    std::size_t total = 0;
    for (const auto& g : s) total += g.members.size();
    CHECK(total == 5);
  }

  TEST_CASE("series partition the non-parallel entries") {
    for (const auto& info : catalog_list()) {
      VConfiguration cfg = catalog_get(info.name).cfg;
      for (std::size_t a = 0; a < cfg.size(); ++a) {
        std::multiset<std::size_t> seen;
        for (const auto& g : alpha_series(cfg, a)) {
          const RatVector& b0 = cfg.covector(g.members.front().entry);
          CHECK(g.members.front().sign == 1);
          CHECK(g.members.front().step == 0);
          for (const auto& m : g.members) {
            seen.insert(m.entry);
            RatVector lhs = Rational(m.sign) * cfg.covector(m.entry) + Rational(m.step) * cfg.covector(a);
            CHECK(lhs == b0);
          }
        }
        std::size_t expected = 0;
        for (std::size_t b = 0; b < cfg.size(); ++b)
          if (!parallel(cfg.covector(a), cfg.covector(b))) {
            ++expected;
            CHECK(seen.count(b) == 1);
          }
        CHECK(seen.size() == expected);
      }
    }
  }

  TEST_CASE("components") {
    CHECK(component_indices(catalog_get("OrthogonalPair").cfg).size() == 2);
    CHECK(component_indices(catalog_get("A2").cfg).size() == 1);
    VConfiguration sum = direct_sum(catalog_get("A2").cfg, catalog_get("B2").cfg);
    CHECK(sum.dim() == 4);
    auto parts = decompose_components(sum);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].dim() == 2);
    CHECK(parts[1].dim() == 2);
    CHECK(parts[0].size() + parts[1].size() == 7);
  }

  TEST_CASE("derived configurations") {
    VConfiguration a2 = catalog_get("A2").cfg;
    VConfiguration f = a2.with_flipped(1);
    CHECK(f.covector(1) == RatVector{q(0), q(-1)});
    CHECK(f.gram() == a2.gram());
    VConfiguration s = a2.with_multiplicities({q(2), q(2), q(2)});
    CHECK(s.gram() == q(2) * a2.gram());
    RatMatrix m{{q(1), q(1)}, {q(0), q(1)}};
    VConfiguration t = a2.transformed(m);
    CHECK(t.covector(0) == RatVector{q(1), q(1)});
    CHECK(t.gram_det() == a2.gram_det());
  }
}
