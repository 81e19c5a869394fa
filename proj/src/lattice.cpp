#include "vee/lattice.hpp"

#include <utility>

#include "vee/error.hpp"

namespace vee {

namespace {

using IntRows = std::vector<IntVector>;

// Row-style Hermite normal form by repeated Euclidean reduction on each column.
// Returns the nonzero rows.
IntRows hermite_rows(IntRows a, std::size_t cols) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < a.size(); ++c) {
    while (true) {
      // smallest nonzero |entry| at or below pivot_row
      std::size_t best = a.size();
      for (std::size_t r = pivot_row; r < a.size(); ++r) {
        if (a[r][c] == 0) continue;
        if (best == a.size() || abs(a[r][c]) < abs(a[best][c])) best = r;
      }
      if (best == a.size()) break;
      std::swap(a[pivot_row], a[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < a.size(); ++r) {
        if (a[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[pivot_row][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a[r][j] -= q * a[pivot_row][j];
        if (a[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[pivot_row][c] == 0) continue;
    if (a[pivot_row][c] < 0)
      for (auto& x : a[pivot_row]) x = -x;
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[pivot_row][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) a[r][j] -= q * a[pivot_row][j];
    }
    ++pivot_row;
  }
  a.resize(pivot_row);
  return a;
}

}  // namespace

LatticeBasis hnf_basis(std::span<const RatVector> rows) {
  if (rows.empty()) throw VeeError(ErrorCode::InvalidArgument, "hnf_basis needs at least one row");
  const std::size_t cols = rows.front().size();
  Integer l = 1;
  for (const auto& r : rows) {
    if (r.size() != cols) throw VeeError(ErrorCode::DimensionMismatch, "rows of different lengths");
    Integer rl = lcm_of_denominators(r);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rl.get_mpz_t());
  }
  IntRows ints;
  ints.reserve(rows.size());
  for (const auto& r : rows) {
    IntVector iv(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      Rational scaled = r[j] * l;
      iv[j] = scaled.get_num();
    }
    ints.push_back(std::move(iv));
  }
  LatticeBasis out;
  for (auto& ir : hermite_rows(std::move(ints), cols)) {
    RatVector rv(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      rv[j] = Rational(ir[j], l);
      rv[j].canonicalize();
    }
    out.basis.push_back(std::move(rv));
  }
  out.rank = out.basis.size();
  return out;
}

RatVector span_coordinates(const LatticeBasis& lattice, const RatVector& v) {
  // Basis rows are in echelon form: row k has its first nonzero at pivot p_k,
  // strictly increasing in k.
  const std::size_t r = lattice.rank;
  RatVector coords(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto& row = lattice.basis[k];
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    Rational acc = v.at(p);
    for (std::size_t j = 0; j < k; ++j) acc -= coords[j] * lattice.basis[j][p];
    coords[k] = acc / row[p];
  }
  RatVector back(v.size());
  for (std::size_t k = 0; k < r; ++k) back = back + coords[k] * lattice.basis[k];
  if (back != v) throw VeeError(ErrorCode::InvalidArgument, "vector " + to_string(v) + " is outside the lattice span");
  return coords;
}

IntVector lattice_coordinates(const LatticeBasis& lattice, const RatVector& v) {
  RatVector q = span_coordinates(lattice, v);
  IntVector out(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k].get_den() != 1)
      throw VeeError(ErrorCode::InvalidArgument, "vector " + to_string(v) + " has non-integer lattice coordinates");
    out[k] = q[k].get_num();
  }
  return out;
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.rank != b.rank) return false;
  try {
    for (const auto& r : a.basis) lattice_coordinates(b, r);
    for (const auto& r : b.basis) lattice_coordinates(a, r);
  } catch (const VeeError&) {
    return false;
  }
  return true;
}

}  // namespace vee
