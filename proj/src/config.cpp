#include "vee/config.hpp"

#include <numeric>
#include <utility>

#include "vee/error.hpp"

namespace vee {

VConfiguration VConfiguration::build(std::size_t dim, std::vector<Entry> entries) {
  if (dim == 0) throw VeeError(ErrorCode::DimensionMismatch, "dimension must be positive");
  if (entries.empty()) throw VeeError(ErrorCode::InvalidArgument, "configuration needs at least one covector");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& e = entries[i];
    if (e.covector.dim() != dim)
      throw VeeError(ErrorCode::DimensionMismatch,
                     "covector " + std::to_string(i) + " has " + std::to_string(e.covector.dim()) +
                         " coordinates, expected " + std::to_string(dim));
    if (is_zero(e.covector.coords)) throw VeeError(ErrorCode::ZeroCovector, "covector " + std::to_string(i) + " is zero");
    if (e.mult == 0) throw VeeError(ErrorCode::ZeroMultiplicity, "covector " + std::to_string(i) + " has zero multiplicity");
    if (e.label.empty()) e.label = "a" + std::to_string(i);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& other = entries[j].covector.coords;
      if (other == e.covector.coords || other == -e.covector.coords)
        throw VeeError(ErrorCode::DuplicateCovector,
                       "covectors " + std::to_string(j) + " and " + std::to_string(i) + " coincide up to sign");
    }
  }

  VConfiguration cfg;
  cfg.dim_ = dim;
  cfg.entries_ = std::move(entries);
  cfg.gram_ = RatMatrix(dim, dim);
  for (const auto& e : cfg.entries_) {
    const auto& a = e.covector.coords;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) cfg.gram_(i, j) += e.mult * a[i] * a[j];
  }
  cfg.gram_det_ = determinant(cfg.gram_);
  if (cfg.gram_det_ != 0) cfg.gram_inverse_ = mat_inverse(cfg.gram_);

  std::vector<RatVector> rows;
  rows.reserve(cfg.entries_.size());
  for (const auto& e : cfg.entries_) rows.push_back(e.covector.coords);
  cfg.lattice_ = hnf_basis(rows);
  cfg.lattice_coords_.reserve(rows.size());
  for (const auto& r : rows) cfg.lattice_coords_.push_back(lattice_coordinates(cfg.lattice_, r));
  return cfg;
}

const RatMatrix& VConfiguration::covector_form() const {
  if (!gram_inverse_) throw VeeError(ErrorCode::DegenerateForm, "the form sum c_a a(u) a(v) is degenerate");
  return *gram_inverse_;
}

VConfiguration VConfiguration::with_multiplicities(const RatVector& mults) const {
  if (mults.size() != entries_.size()) throw VeeError(ErrorCode::DimensionMismatch, "multiplicity count");
  auto e = entries_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i].mult = mults[i];
  return build(dim_, std::move(e));
}

VConfiguration VConfiguration::with_flipped(std::size_t i) const {
  auto e = entries_;
  e.at(i).covector.coords = -e.at(i).covector.coords;
  return build(dim_, std::move(e));
}

VConfiguration VConfiguration::transformed(const RatMatrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) throw VeeError(ErrorCode::DimensionMismatch, "transform shape");
  if (determinant(m) == 0) throw VeeError(ErrorCode::SingularMatrix, "transform is not invertible");
  auto e = entries_;
  for (auto& x : e) x.covector.coords = m.apply_left(x.covector.coords);
  return build(dim_, std::move(e));
}

RatVector dual_vector(const VConfiguration& cfg, const Covector& v) {
  if (v.dim() != cfg.dim()) throw VeeError(ErrorCode::DimensionMismatch, "covector dimension");
  return cfg.covector_form().apply(v.coords);
}

Rational vee_product(const VConfiguration& cfg, const Covector& u, const Covector& v) {
  return dot(u.coords, dual_vector(cfg, v));
}

RatVector PositiveSystem::signed_covector(const VConfiguration& cfg, std::size_t i) const {
  return signs.at(i) > 0 ? cfg.covector(i) : -cfg.covector(i);
}

PositiveSystem positive_system(const VConfiguration& cfg, const std::optional<RatVector>& functional) {
  PositiveSystem ps;
  if (functional) {
    if (functional->size() != cfg.dim()) throw VeeError(ErrorCode::DimensionMismatch, "functional dimension");
    ps.functional = *functional;
  } else {
    for (long t = 1;; ++t) {
      RatVector f(cfg.dim());
      Rational p = 1;
      for (auto& x : f) {
        x = p;
        p *= t;
      }
      bool ok = true;
      for (std::size_t i = 0; i < cfg.size() && ok; ++i) ok = dot(f, cfg.covector(i)) != 0;
      if (ok) {
        ps.functional = std::move(f);
        break;
      }
    }
  }
  ps.signs.reserve(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    Rational v = dot(ps.functional, cfg.covector(i));
    if (v == 0)
      throw VeeError(ErrorCode::FunctionalVanishes,
                     "functional " + to_string(ps.functional) + " vanishes on covector " + to_string(cfg.covector(i)));
    ps.signs.push_back(v > 0 ? 1 : -1);
  }
  return ps;
}

namespace {

// d = k * a with k an integer.
bool integer_multiple(const IntVector& d, const IntVector& a, Integer* k) {
  std::size_t pivot = a.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == a.size()) return false;
  if (!mpz_divisible_p(d[pivot].get_mpz_t(), a[pivot].get_mpz_t())) return false;
  Integer q = d[pivot] / a[pivot];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (d[i] != q * a[i]) return false;
  *k = q;
  return true;
}

IntVector sub(const IntVector& a, const IntVector& b, int sign) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sign > 0 ? Integer(a[i] - b[i]) : Integer(a[i] + b[i]);
  return r;
}

}  // namespace

std::vector<AlphaSeries> alpha_series(const VConfiguration& cfg, std::size_t base) {
  if (base >= cfg.size()) throw VeeError(ErrorCode::InvalidArgument, "entry index out of range");
  const RatVector& alpha = cfg.covector(base);
  const IntVector& a = cfg.lattice_coords(base);
  std::vector<AlphaSeries> out;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (parallel(cfg.covector(i), alpha)) continue;
    const IntVector& b = cfg.lattice_coords(i);
    bool placed = false;
    for (auto& s : out) {
      const IntVector& b0 = cfg.lattice_coords(s.members.front().entry);
      // sign * beta + step * alpha = beta_0  <=>  beta_0 - sign * beta = step * alpha
      for (int sign : {1, -1}) {
        Integer step;
        if (integer_multiple(sub(b0, b, sign), a, &step)) {
          s.members.push_back({i, sign, step});
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) out.push_back({base, {{i, 1, Integer(0)}}});
  }
  return out;
}

std::vector<std::vector<std::size_t>> component_indices(const VConfiguration& cfg) {
  const RatMatrix& form = cfg.covector_form();
  const std::size_t m = cfg.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (form.bilinear(cfg.covector(i), cfg.covector(j)) != 0) parent[find(j)] = find(i);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = find(i);
    if (slot[r] == m) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

std::vector<VConfiguration> decompose_components(const VConfiguration& cfg) {
  std::vector<VConfiguration> out;
  for (const auto& group : component_indices(cfg)) {
    std::vector<RatVector> rows;
    for (auto i : group) rows.push_back(cfg.covector(i));
    LatticeBasis sub = hnf_basis(rows);
    std::vector<Entry> entries;
    for (auto i : group) {
      IntVector ic = lattice_coordinates(sub, cfg.covector(i));
      RatVector coords(ic.begin(), ic.end());
      entries.push_back({Covector{std::move(coords)}, cfg.mult(i), cfg.entry(i).label});
    }
    out.push_back(VConfiguration::build(sub.rank, std::move(entries)));
  }
  return out;
}

}  // namespace vee
