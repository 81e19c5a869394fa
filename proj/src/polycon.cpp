#include "vee/polycon.hpp"

#include <omp.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "vee/config.hpp"
#include "vee/error.hpp"
#include "vee/matrix.hpp"
#include "vee/veecheck.hpp"

namespace vee {

std::vector<const Constraint*> ConstraintSet::nontrivial() const {
  std::vector<const Constraint*> out;
  for (const auto& c : constraints)
    if (!c.poly.is_zero()) out.push_back(&c);
  return out;
}

bool ConstraintSet::satisfied_by(std::span<const Rational> mults) const {
  for (const auto& c : constraints)
    if (c.poly.evaluate(mults) != 0) return false;
  return nondegeneracy.evaluate(mults) != 0;
}

std::vector<std::string> default_symbols(std::size_t count) {
  std::vector<std::string> s;
  for (std::size_t i = 0; i < count; ++i) s.push_back("c" + std::to_string(i + 1));
  return s;
}

MultiPoly polynomial_determinant(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw VeeError(ErrorCode::InvalidArgument, "empty polynomial matrix");
  if (n == 1) return m[0][0];
  const auto& vars = m[0][0].vars();
  MultiPoly det(vars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][j] * polynomial_determinant(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

std::vector<std::vector<MultiPoly>> symbolic_gram(std::span<const RatVector> vectors, const std::vector<std::string>& symbols) {
  if (vectors.empty()) throw VeeError(ErrorCode::InvalidArgument, "no vectors");
  if (symbols.size() != vectors.size()) throw VeeError(ErrorCode::DimensionMismatch, "one symbol per vector required");
  const std::size_t n = vectors.front().size();
  std::vector<std::vector<MultiPoly>> g(n, std::vector<MultiPoly>(n, MultiPoly(symbols)));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    MultiPoly ck = MultiPoly::variable(symbols, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational w = vectors[k][i] * vectors[k][j];
        if (w != 0) g[i][j] += w * ck;
      }
  }
  return g;
}

namespace {

VConfiguration unit_configuration(std::span<const RatVector> vectors) {
  std::vector<Entry> entries;
  for (const auto& v : vectors) entries.push_back({Covector{v}, Rational(1), {}});
  return VConfiguration::build(vectors.front().size(), std::move(entries));
}

}  // namespace

ConstraintSet series_constraints(std::span<const RatVector> vectors, std::vector<std::string> symbols) {
  if (vectors.empty()) throw VeeError(ErrorCode::InvalidArgument, "no vectors");
  if (symbols.empty()) symbols = default_symbols(vectors.size());
  const VConfiguration shape = unit_configuration(vectors);
  const std::size_t n = shape.dim();
  if (shape.lattice().rank < n)
    throw VeeError(ErrorCode::SpanDeficient, "vectors span a subspace of dimension " + std::to_string(shape.lattice().rank) +
                                                 " < " + std::to_string(n));

  ConstraintSet out;
  out.vars = symbols;
  out.dim = n;
  auto g = symbolic_gram(vectors, symbols);
  out.nondegeneracy = polynomial_determinant(g);

  // adj(G)_{ij} = (-1)^{i+j} det(G without row j and column i)
  std::vector<std::vector<MultiPoly>> adj(n, std::vector<MultiPoly>(n, MultiPoly(symbols)));
  if (n == 1) {
    adj[0][0] = MultiPoly::constant(symbols, 1);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == j) continue;
          std::vector<MultiPoly> row;
          for (std::size_t c = 0; c < n; ++c)
            if (c != i) row.push_back(g[r][c]);
          minor.push_back(std::move(row));
        }
        MultiPoly d = polynomial_determinant(minor);
        adj[i][j] = (i + j) % 2 == 0 ? d : Rational(-1) * d;
      }
  }
  auto adj_pair = [&](const RatVector& a, const RatVector& b) {
    MultiPoly s(symbols);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational w = a[i] * b[j];
        if (w != 0) s += w * adj[i][j];
      }
    return s;
  };

  for (std::size_t a = 0; a < shape.size(); ++a) {
    auto series = alpha_series(shape, a);
    for (std::size_t s = 0; s < series.size(); ++s) {
      Constraint c;
      c.base = a;
      c.series_index = s;
      c.poly = MultiPoly(symbols);
      for (const auto& m : series[s].members) {
        c.members.push_back(m.entry);
        MultiPoly term = MultiPoly::variable(symbols, m.entry) * adj_pair(shape.covector(a), shape.covector(m.entry));
        if (m.sign > 0)
          c.poly += term;
        else
          c.poly -= term;
      }
      out.constraints.push_back(std::move(c));
    }
  }
  return out;
}

FamilyReport verify_family(std::span<const RatVector> vectors, const std::vector<std::string>& symbols,
                           const std::map<std::string, RationalFunction>& parametrization) {
  ConstraintSet cs = series_constraints(vectors, symbols);
  std::vector<const RationalFunction*> images;
  for (const auto& s : cs.vars) {
    auto it = parametrization.find(s);
    if (it == parametrization.end()) throw VeeError(ErrorCode::InvalidParams, "no parametrization for '" + s + "'");
    if (it->second.den.is_zero()) throw VeeError(ErrorCode::InvalidParams, "denominator of '" + s + "' is identically zero");
    images.push_back(&it->second);
  }
  const auto& params = images.front()->num.vars();
  for (const auto* im : images)
    if (im->num.vars() != params || im->den.vars() != params)
      throw VeeError(ErrorCode::InvalidParams, "parametrizations use different parameter lists");

  FamilyReport rep;
  rep.denominator_locus = MultiPoly::constant(params, 1);
  for (const auto* im : images) rep.denominator_locus = rep.denominator_locus * im->den;

  // c~_k = p_k * prod_{j != k} q_j
  std::vector<MultiPoly> cleared_images;
  for (std::size_t k = 0; k < images.size(); ++k) {
    MultiPoly t = images[k]->num;
    for (std::size_t j = 0; j < images.size(); ++j)
      if (j != k) t = t * images[j]->den;
    cleared_images.push_back(std::move(t));
  }

  rep.nondegeneracy_numerator = cs.nondegeneracy.substitute(cleared_images);
  if (rep.nondegeneracy_numerator.is_zero())
    throw VeeError(ErrorCode::DegenerateParametrization, "det G vanishes identically on the family");

  rep.pass = true;
  for (std::size_t i = 0; i < cs.constraints.size(); ++i) {
    MultiPoly v = cs.constraints[i].poly.substitute(cleared_images);
    if (!v.is_zero()) {
      rep.pass = false;
      rep.failing.push_back(i);
    }
    rep.cleared.push_back(std::move(v));
  }
  return rep;
}

bool verify_multiplicities(std::span<const RatVector> vectors, const RatVector& mults) {
  if (mults.size() != vectors.size()) return false;
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (mults[i] == 0) return false;
    entries.push_back({Covector{vectors[i]}, mults[i], {}});
  }
  auto cfg = VConfiguration::build(vectors.front().size(), std::move(entries));
  if (cfg.is_degenerate()) return false;
  return check_series_condition(cfg).pass;
}

namespace {

struct Residuals {
  std::vector<MultiPoly> polys;
  std::vector<std::vector<MultiPoly>> grads;
  MultiPoly det;
  std::vector<MultiPoly> det_grad;
  std::size_t m = 0;

  explicit Residuals(const ConstraintSet& cs) : det(cs.nondegeneracy), m(cs.vars.size()) {
    for (const auto* c : cs.nontrivial()) {
      polys.push_back(c->poly);
      std::vector<MultiPoly> g;
      for (std::size_t k = 0; k < m; ++k) g.push_back(c->poly.derivative(k));
      grads.push_back(std::move(g));
    }
    for (std::size_t k = 0; k < m; ++k) det_grad.push_back(det.derivative(k));
  }

  // r_i = p_i / det, and dr_i/dc_k for the free variables.
  bool eval(const std::vector<double>& c, const std::vector<std::size_t>& free, Eigen::VectorXd& r,
            Eigen::MatrixXd* jac) const {
    const double d = det.evaluate(std::span<const double>(c));
    if (!std::isfinite(d) || std::abs(d) < 1e-12) return false;
    r.resize(static_cast<Eigen::Index>(polys.size()));
    if (jac) jac->resize(static_cast<Eigen::Index>(polys.size()), static_cast<Eigen::Index>(free.size()));
    std::vector<double> dd(free.size());
    for (std::size_t f = 0; f < free.size(); ++f) dd[f] = det_grad[free[f]].evaluate(std::span<const double>(c));
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const double p = polys[i].evaluate(std::span<const double>(c));
      r(static_cast<Eigen::Index>(i)) = p / d;
      if (jac)
        for (std::size_t f = 0; f < free.size(); ++f) {
          const double dp = grads[i][free[f]].evaluate(std::span<const double>(c));
          (*jac)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(f)) = (dp * d - p * dd[f]) / (d * d);
        }
    }
    return true;
  }
};

// Levenberg-Marquardt over the free coordinates; returns max |r_i| at the end.
double descend(const Residuals& res, std::vector<double>& c, const std::vector<std::size_t>& free, int max_iter) {
  Eigen::VectorXd r;
  Eigen::MatrixXd j;
  if (!res.eval(c, free, r, &j)) return INFINITY;
  if (free.empty() || r.size() == 0) return r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
  double cost = r.squaredNorm();
  double mu = 1e-3;
  for (int it = 0; it < max_iter && cost > 1e-30; ++it) {
    Eigen::MatrixXd jtj = j.transpose() * j;
    Eigen::VectorXd g = j.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::MatrixXd a = jtj;
      for (Eigen::Index k = 0; k < a.rows(); ++k) a(k, k) += mu * (1.0 + jtj(k, k));
      Eigen::VectorXd step = a.ldlt().solve(-g);
      std::vector<double> trial = c;
      for (std::size_t f = 0; f < free.size(); ++f) trial[free[f]] += step(static_cast<Eigen::Index>(f));
      Eigen::VectorXd rt;
      Eigen::MatrixXd jt;
      if (res.eval(trial, free, rt, &jt) && rt.squaredNorm() < cost) {
        c = std::move(trial);
        r = std::move(rt);
        j = std::move(jt);
        cost = r.squaredNorm();
        mu = std::max(mu * 0.3, 1e-12);
        improved = true;
        break;
      }
      mu *= 10.0;
    }
    if (!improved) break;
  }
  return r.cwiseAbs().maxCoeff();
}

Rational pin_value(double x) {
  Rational q = rationalize(x, 12);
  if (q == 0) q = x < 0 ? Rational(-1, 12) : Rational(1, 12);
  return q;
}

std::optional<RatVector> run_start(std::span<const RatVector> vectors, const Residuals& res, std::size_t normalized,
                                   std::uint64_t seed, std::size_t start, const SearchOptions& opts) {
  const std::size_t m = res.m;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(start), 0x5eedu};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> init(0.25, 3.0);
  std::vector<double> c(m);
  for (auto& x : c) x = init(rng);
  c[normalized] = 1.0;
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < m; ++k)
    if (k != normalized) free.push_back(k);
  std::shuffle(free.begin(), free.end(), rng);

  RatVector pinned(m);
  std::vector<bool> is_pinned(m, false);
  pinned[normalized] = 1;
  is_pinned[normalized] = true;

  while (true) {
    double worst = descend(res, c, free, opts.max_iterations);
    if (!(worst < opts.residual_tol)) return std::nullopt;
    // Small denominators first, so a free direction is pinned rather than
    // matched by a large-denominator approximation of a random point.
    std::vector<long> ladder{12, 144};
    if (free.empty()) ladder.push_back(opts.max_den);
    for (long den : ladder) {
      RatVector candidate(m);
      for (std::size_t k = 0; k < m; ++k) candidate[k] = is_pinned[k] ? pinned[k] : rationalize(c[k], std::min(den, opts.max_den));
      if (verify_multiplicities(vectors, candidate)) return candidate;
    }
    if (free.empty()) return std::nullopt;
    std::size_t k = free.back();
    free.pop_back();
    pinned[k] = pin_value(c[k]);
    is_pinned[k] = true;
    c[k] = to_double(pinned[k]);
  }
}

}  // namespace

namespace {

std::vector<SearchResult> search(std::span<const RatVector> vectors, std::size_t normalized, const SearchOptions& opts,
                                 bool parallel) {
  ConstraintSet cs = series_constraints(vectors);
  if (normalized >= cs.vars.size()) throw VeeError(ErrorCode::InvalidArgument, "normalized index out of range");
  const Residuals res(cs);
  std::vector<std::optional<RatVector>> found(opts.starts);
  const auto count = static_cast<std::ptrdiff_t>(opts.starts);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t s = 0; s < count; ++s) {
    try {
      found[s] = run_start(vectors, res, normalized, opts.seed, static_cast<std::size_t>(s), opts);
    } catch (const VeeError&) {
      found[s].reset();
    }
  }
  std::vector<SearchResult> out;
  for (std::size_t s = 0; s < found.size(); ++s) {
    if (!found[s]) continue;
    bool dup = std::any_of(out.begin(), out.end(), [&](const SearchResult& r) { return r.mults == *found[s]; });
    if (!dup) out.push_back({*found[s], s});
  }
  return out;
}

}  // namespace

std::vector<SearchResult> find_multiplicities(std::span<const RatVector> vectors, std::size_t normalized,
                                              const SearchOptions& opts) {
  return search(vectors, normalized, opts, true);
}

std::vector<SearchResult> find_multiplicities_serial(std::span<const RatVector> vectors, std::size_t normalized,
                                                     const SearchOptions& opts) {
  return search(vectors, normalized, opts, false);
}

}  // namespace vee
