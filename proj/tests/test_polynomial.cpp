#include <doctest.h>

#include "support.hpp"
#include "vee/error.hpp"
#include "vee/polynomial.hpp"

using namespace vee;
using vee::test::q;

TEST_SUITE("polynomial") {
  const std::vector<std::string> xy{"x", "y"};

  TEST_CASE("arithmetic and printing") {
    MultiPoly x = MultiPoly::variable(xy, 0), y = MultiPoly::variable(xy, 1);
    MultiPoly s = (x + y).pow(2);
    CHECK(s.to_string() == "x^2 + 2*x*y + y^2");
    CHECK(s.total_degree() == 2);
    CHECK(s.is_homogeneous());
    CHECK_FALSE((s + MultiPoly::constant(xy, 1)).is_homogeneous());
    CHECK((s - s).is_zero());
    CHECK((s - s).total_degree() == -1);
    CHECK((x * y - y * x).is_zero());
    CHECK((q(1, 2) * x - y).to_string() == "1/2*x - y");
    CHECK(MultiPoly::constant(xy, q(-3)).to_string() == "-3");
    CHECK(MultiPoly(xy).to_string() == "0");
  }

  TEST_CASE("derivative, evaluation, substitution") {
    MultiPoly x = MultiPoly::variable(xy, 0), y = MultiPoly::variable(xy, 1);
    MultiPoly p = x.pow(3) * y + q(2) * y;
    CHECK(p.derivative(0) == q(3) * x.pow(2) * y);
    CHECK(p.derivative(1) == x.pow(3) + MultiPoly::constant(xy, 2));
    RatVector at{q(1, 2), q(3)};
    CHECK(p.evaluate(at) == q(3, 8) + 6);
    std::vector<double> atd{0.5, 3.0};
    CHECK(p.evaluate(std::span<const double>(atd)) == doctest::Approx(6.375));

    const std::vector<std::string> t{"t"};
    MultiPoly tt = MultiPoly::variable(t, 0);
    MultiPoly sub = p.substitute({tt + MultiPoly::constant(t, 1), q(2) * tt});
    // (t+1)^3 * 2t + 4t
    RatVector t3{q(3)};
    CHECK(sub.evaluate(t3) == 64 * 6 + 12);
    CHECK(sub.vars() == t);
  }

  TEST_CASE("rational function parser") {
    const std::vector<std::string> ts{"t", "s"};
    RationalFunction f = parse_rational_function("t*(3*t-2*s)/(3*t+4*s)", ts);
    RatVector one{q(1), q(1)};
    CHECK(f.num.evaluate(one) / f.den.evaluate(one) == q(1, 7));
    RationalFunction g = parse_rational_function("-(t^2 - 1)/2 + s", ts);
    RatVector pt{q(3), q(1, 2)};
    CHECK(g.num.evaluate(pt) / g.den.evaluate(pt) == q(-7, 2));
    RationalFunction h = parse_rational_function("1/(1/t)", ts);
    RatVector pt2{q(5), q(0)};
    CHECK(h.num.evaluate(pt2) / h.den.evaluate(pt2) == 5);

    for (const char* bad : {"2*", "(t", "t)", "u", "t^-1", "t^s", "", "3 4"}) {
      CAPTURE(bad);
      try {
        parse_rational_function(bad, ts);
        FAIL("accepted");
      } catch (const VeeError& e) {
        CHECK(e.code() == ErrorCode::ParseError);
      }
    }
  }

  TEST_CASE("identifiers") {
    CHECK(expression_identifiers("a*b + 2*a - c1/(b)") == std::vector<std::string>{"a", "b", "c1"});
    CHECK(expression_identifiers("17").empty());
  }
}
