#include "vee/veecheck.hpp"

#include "vee/error.hpp"

namespace vee {

const SeriesResidual* SeriesCheckReport::first_failure() const {
  for (const auto& it : items)
    if (!it.pass) return &it;
  return nullptr;
}

SeriesCheckReport check_series_with_form(const VConfiguration& cfg, const RatMatrix& covector_form) {
  if (covector_form.rows() != cfg.dim() || covector_form.cols() != cfg.dim())
    throw VeeError(ErrorCode::DimensionMismatch, "form shape does not match configuration");
  SeriesCheckReport report;
  for (std::size_t a = 0; a < cfg.size(); ++a) {
    const RatVector alpha_form = covector_form.apply_left(cfg.covector(a));
    auto series = alpha_series(cfg, a);
    for (std::size_t s = 0; s < series.size(); ++s) {
      SeriesResidual item;
      item.base = a;
      item.series_index = s;
      for (const auto& m : series[s].members) {
        item.members.push_back(m.entry);
        Rational term = cfg.mult(m.entry) * dot(alpha_form, cfg.covector(m.entry));
        if (m.sign > 0)
          item.residual += term;
        else
          item.residual -= term;
      }
      item.pass = item.residual == 0;
      report.pass = report.pass && item.pass;
      report.items.push_back(std::move(item));
    }
  }
  return report;
}

SeriesCheckReport check_series_condition(const VConfiguration& cfg) {
  return check_series_with_form(cfg, cfg.covector_form());
}

RatVector wedge(const RatVector& a, const RatVector& b) {
  const std::size_t n = a.size();
  RatVector w;
  w.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) w.push_back(a[i] * b[j] - a[j] * b[i]);
  return w;
}

ConditionTensors condition_tensors(const VConfiguration& cfg, const RatMatrix& covector_form, const PositiveSystem& psys) {
  const std::size_t n = cfg.dim();
  const std::size_t m = n * (n - 1) / 2;
  ConditionTensors t{RatMatrix(m, m), RatMatrix(m, m)};
  std::vector<RatVector> pos;
  pos.reserve(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) pos.push_back(psys.signed_covector(cfg, i));
  // The summand is symmetric in (a, b): visit a < b once and double.
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      RatVector w = wedge(pos[a], pos[b]);
      if (is_zero(w)) continue;
      Rational cc = 2 * cfg.mult(a) * cfg.mult(b);
      Rational ccp = cc * covector_form.bilinear(pos[a], pos[b]);
      for (std::size_t i = 0; i < m; ++i) {
        if (w[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
          Rational ww = w[i] * w[j];
          t.q(i, j) += cc * ww;
          t.p(i, j) += ccp * ww;
        }
      }
    }
  return t;
}

ProportionalitySolve solve_proportionality(const ConditionTensors& t) {
  ProportionalitySolve out;
  const std::size_t m = t.p.rows();
  std::optional<Rational> ratio;
  bool any_q = false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& p = t.p(i, j);
      const Rational& q = t.q(i, j);
      if (q != 0) any_q = true;
      if (p == 0) {
        if (q != 0 && !out.witness) out.witness = TensorWitness{i, j, p, q};
        continue;
      }
      Rational r = q / p;
      if (!ratio) {
        ratio = r;
      } else if (*ratio != r && !out.witness) {
        out.witness = TensorWitness{i, j, p, q};
      }
    }
  if (out.witness) {
    out.status = LambdaStatus::NoSolution;
    return out;
  }
  if (!ratio) {
    out.status = any_q ? LambdaStatus::NoSolution : LambdaStatus::AnyLambda;
    return out;
  }
  if (*ratio == 0) {
    // Q vanishes identically while P does not: only lambda = 0 would work.
    out.status = LambdaStatus::NoSolution;
    for (std::size_t i = 0; i < m && !out.witness; ++i)
      for (std::size_t j = 0; j < m && !out.witness; ++j)
        if (t.p(i, j) != 0) out.witness = TensorWitness{i, j, t.p(i, j), t.q(i, j)};
    return out;
  }
  out.status = LambdaStatus::Value;
  out.ratio = *ratio;
  return out;
}

LambdaSolution solve_lambda_squared(const VConfiguration& cfg, const PositiveSystem& psys) {
  auto solved = solve_proportionality(condition_tensors(cfg, cfg.covector_form(), psys));
  LambdaSolution out;
  out.status = solved.status;
  out.witness = solved.witness;
  out.psys = psys;
  if (solved.status == LambdaStatus::Value) out.lambda_squared = 4 * solved.ratio;
  return out;
}

V3Report check_v3_identity(const VConfiguration& cfg) {
  const RatMatrix& form = cfg.covector_form();
  const std::size_t m = cfg.dim() * (cfg.dim() - 1) / 2;
  V3Report report;
  for (std::size_t a = 0; a < cfg.size(); ++a) {
    V3Item item;
    item.base = a;
    item.two_form.assign(m, Rational(0));
    const RatVector& alpha = cfg.covector(a);
    for (std::size_t b = 0; b < cfg.size(); ++b) {
      if (b == a) continue;
      Rational coef = cfg.mult(b) * form.bilinear(alpha, cfg.covector(b));
      if (coef == 0) continue;
      item.two_form = item.two_form + coef * wedge(alpha, cfg.covector(b));
    }
    item.pass = is_zero(item.two_form);
    report.pass = report.pass && item.pass;
    report.items.push_back(std::move(item));
  }
  return report;
}

RationalVeeReport check_rational_vee(const VConfiguration& cfg) {
  const RatMatrix& form = cfg.covector_form();
  RationalVeeReport report;
  for (std::size_t a = 0; a < cfg.size(); ++a) {
    const RatVector& alpha = cfg.covector(a);
    std::vector<bool> used(cfg.size(), false);
    for (std::size_t b = 0; b < cfg.size(); ++b) {
      if (used[b] || parallel(cfg.covector(b), alpha)) continue;
      PlaneItem item;
      item.base = a;
      item.sum.assign(cfg.dim(), Rational(0));
      for (std::size_t g = 0; g < cfg.size(); ++g) {
        RatMatrix with = RatMatrix::from_rows({alpha, cfg.covector(b), cfg.covector(g)});
        if (rank(with) != 2) continue;
        if (!parallel(cfg.covector(g), alpha)) used[g] = true;
        item.plane_members.push_back(g);
        item.sum = item.sum + (cfg.mult(g) * form.bilinear(alpha, cfg.covector(g))) * cfg.covector(g);
      }
      item.pass = parallel(item.sum, alpha);
      report.pass = report.pass && item.pass;
      report.items.push_back(std::move(item));
    }
  }
  return report;
}

FullCheck full_check(const VConfiguration& cfg, const std::optional<RatVector>& functional) {
  FullCheck out;
  if (cfg.is_degenerate()) {
    out.degenerate = true;
    return out;
  }
  out.series = check_series_condition(cfg);
  out.is_trig_vee = out.series.pass;
  out.component_count = component_indices(cfg).size();
  out.is_irreducible = out.component_count == 1;
  out.lambda = solve_lambda_squared(cfg, positive_system(cfg, functional));
  out.defines_solution = out.is_trig_vee && out.lambda.has_value();
  return out;
}

}  // namespace vee
