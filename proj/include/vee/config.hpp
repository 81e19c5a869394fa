#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vee/lattice.hpp"
#include "vee/matrix.hpp"
#include "vee/rational.hpp"

namespace vee {

/// A covector alpha in V*, stored by its coordinates in the dual basis.
struct Covector {
  RatVector coords;

  std::size_t dim() const { return coords.size(); }
  friend bool operator==(const Covector&, const Covector&) = default;
};

struct Entry {
  Covector covector;
  Rational mult;
  std::string label;
};

/// A finite collection of covectors with nonzero rational multiplicities,
/// together with the form G = sum c_a a^T a and the Z-lattice spanned by the
/// covectors. Immutable after build().
///
/// A degenerate G is representable; every operation that needs the induced
/// inner product on V* throws VeeError(DegenerateForm).
class VConfiguration {
 public:
  /// Throws ZeroCovector, ZeroMultiplicity, DuplicateCovector (equal up to
  /// sign) or DimensionMismatch.
  static VConfiguration build(std::size_t dim, std::vector<Entry> entries);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& entry(std::size_t i) const { return entries_.at(i); }
  const RatVector& covector(std::size_t i) const { return entries_.at(i).covector.coords; }
  const Rational& mult(std::size_t i) const { return entries_.at(i).mult; }

  const RatMatrix& gram() const { return gram_; }
  const Rational& gram_det() const { return gram_det_; }
  bool is_degenerate() const { return gram_det_ == 0; }

  /// G^{-1}: the inner product on V*. Throws DegenerateForm.
  const RatMatrix& covector_form() const;

  const LatticeBasis& lattice() const { return lattice_; }
  const IntVector& lattice_coords(std::size_t i) const { return lattice_coords_.at(i); }

  /// Same covectors with new multiplicities (labels kept).
  VConfiguration with_multiplicities(const RatVector& mults) const;
  /// Covector i replaced by its negative.
  VConfiguration with_flipped(std::size_t i) const;
  /// Every covector a replaced by a * m (m an invertible n x n matrix acting on V).
  VConfiguration transformed(const RatMatrix& m) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
  RatMatrix gram_;
  Rational gram_det_;
  std::optional<RatMatrix> gram_inverse_;
  LatticeBasis lattice_;
  std::vector<IntVector> lattice_coords_;
};

/// v^vee: the column vector with G * result = v^T.
RatVector dual_vector(const VConfiguration& cfg, const Covector& v);

/// (u, v) = u G^{-1} v^T.
Rational vee_product(const VConfiguration& cfg, const Covector& u, const Covector& v);

struct PositiveSystem {
  std::vector<int> signs;  // +1 / -1 per entry
  RatVector functional;

  /// sign_i * covector_i
  RatVector signed_covector(const VConfiguration& cfg, std::size_t i) const;
};

/// Without a functional, uses (1, t, t^2, ...) with the smallest positive
/// integer t that vanishes on no covector. Throws FunctionalVanishes when a
/// supplied functional kills some covector.
PositiveSystem positive_system(const VConfiguration& cfg, const std::optional<RatVector>& functional = std::nullopt);

struct SeriesMember {
  std::size_t entry;
  int sign;      // sign * beta + step * alpha is the same for every member
  Integer step;
};

/// One maximal alpha-series. members.front() is the representative beta_0
/// (sign +1, step 0); every member satisfies alpha ^ beta = sign * (alpha ^ beta_0).
struct AlphaSeries {
  std::size_t base;
  std::vector<SeriesMember> members;
};

/// Partition of the entries non-parallel to entry `base` into maximal
/// alpha-series, judged with integer steps in the lattice of the whole
/// configuration. Order: by first member index.
std::vector<AlphaSeries> alpha_series(const VConfiguration& cfg, std::size_t base);

/// Connected components of the graph joining entries with nonzero
/// vee-product, each re-expressed in a Z-basis of its own span.
std::vector<VConfiguration> decompose_components(const VConfiguration& cfg);

/// Entry indices of each component, in the order decompose_components uses.
std::vector<std::vector<std::size_t>> component_indices(const VConfiguration& cfg);

}  // namespace vee
