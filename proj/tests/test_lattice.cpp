#include <doctest.h>

#include "support.hpp"
#include "vee/error.hpp"
#include "vee/lattice.hpp"
#include "vee/matrix.hpp"

using namespace vee;
using vee::test::q;

TEST_SUITE("lattice") {
  TEST_CASE("A2 roots generate Z^2") {
    std::vector<RatVector> rows{{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}};
    LatticeBasis b = hnf_basis(rows);
    CHECK(b.rank == 2);
    std::vector<RatVector> id{{q(1), q(0)}, {q(0), q(1)}};
    CHECK(same_lattice(b, hnf_basis(id)));
    CHECK(lattice_coordinates(b, {q(1), q(1)}) == IntVector{1, 1});
  }

  TEST_CASE("half-integer lattice") {
    std::vector<RatVector> rows{{q(1, 2), q(1, 2)}, {q(1, 2), q(-1, 2)}};
    LatticeBasis b = hnf_basis(rows);
    CHECK(b.rank == 2);
    IntVector c = lattice_coordinates(b, {q(1), q(0)});
    CHECK(c.size() == 2);
    try {
      lattice_coordinates(b, {q(1, 2), q(0)});
      FAIL("accepted a non-lattice point");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
    CHECK(span_coordinates(b, {q(1, 2), q(0)}).size() == 2);
  }

  TEST_CASE("rank-deficient rows") {
    std::vector<RatVector> rows{{q(2), q(4)}, {q(3), q(6)}};
    LatticeBasis b = hnf_basis(rows);
    CHECK(b.rank == 1);
    // gcd(2, 3) = 1: the group is Z (1, 2)
    CHECK(lattice_coordinates(b, {q(1), q(2)}).size() == 1);
    try {
      lattice_coordinates(b, {q(1), q(0)});
      FAIL("accepted a point outside the span");
    } catch (const VeeError& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
  }

  TEST_CASE("HNF is idempotent and preserves the group on random inputs") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-6, 6), den(1, 3), count(1, 5), dim(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = static_cast<std::size_t>(dim(rng));
      std::vector<RatVector> rows;
      for (long k = count(rng); k > 0; --k) {
        RatVector r(n);
        for (auto& x : r) x = make_rational(d(rng), den(rng));
        if (!is_zero(r)) rows.push_back(r);
      }
      if (rows.empty()) continue;
      LatticeBasis b = hnf_basis(rows);
      CHECK(b.rank == rank(RatMatrix::from_rows(rows)));
      for (const auto& r : rows) CHECK_NOTHROW(lattice_coordinates(b, r));
      LatticeBasis again = hnf_basis(b.basis);
      CHECK(again.basis == b.basis);
      CHECK(same_lattice(again, b));
    }
  }
}
