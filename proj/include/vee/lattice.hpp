#pragma once

#include <span>
#include <vector>

#include "vee/rational.hpp"

namespace vee {

/// Z-basis of the additive group generated by a set of rational rows.
struct LatticeBasis {
  std::vector<RatVector> basis;  // echelon form, one row per rank
  std::size_t rank = 0;
};

/// Clears denominators by their LCM, brings the integer rows to Hermite
/// normal form and scales back. The returned rows generate exactly the same
/// group as the input rows.
LatticeBasis hnf_basis(std::span<const RatVector> rows);

/// Coordinates of v in the basis. Throws VeeError(InvalidArgument) when v is
/// outside the rational span or has non-integer coordinates.
IntVector lattice_coordinates(const LatticeBasis& lattice, const RatVector& v);

/// Rational coordinates of v in the basis (v must lie in the span).
RatVector span_coordinates(const LatticeBasis& lattice, const RatVector& v);

/// Each basis expresses every row of the other with integer coordinates.
bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);

}  // namespace vee
