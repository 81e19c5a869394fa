#include "vee/sampling.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "vee/error.hpp"

namespace vee {

NumericConfig::NumericConfig(const VConfiguration& cfg) : dim(cfg.dim()) {
  covectors.reserve(cfg.size());
  mults.reserve(cfg.size());
  for (const auto& e : cfg.entries()) {
    std::vector<double> c;
    c.reserve(dim);
    for (const auto& q : e.covector.coords) c.push_back(to_double(q));
    covectors.push_back(std::move(c));
    mults.push_back(to_double(e.mult));
  }
}

Complex NumericConfig::pair(std::size_t i, const std::vector<Complex>& x) const {
  Complex s = 0.0;
  const auto& a = covectors[i];
  for (std::size_t k = 0; k < dim; ++k) s += a[k] * x[k];
  return s;
}

double point_margin(const NumericConfig& cfg, const std::vector<Complex>& x) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cfg.covectors.size(); ++i) m = std::min(m, std::abs(std::sin(cfg.pair(i, x))));
  return m;
}

EvalPoint make_point(const NumericConfig& cfg, Complex y, std::vector<Complex> x) {
  if (x.size() != cfg.dim) throw VeeError(ErrorCode::DimensionMismatch, "point dimension");
  EvalPoint p{y, std::move(x), 0.0};
  p.margin = point_margin(cfg, p.x);
  return p;
}

EvalPoint sample_point(const NumericConfig& cfg, std::uint64_t seed, std::size_t index, const SamplerOptions& opts) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(-1.0, -0.25);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int attempt = 0; attempt < opts.max_tries; ++attempt) {
    Complex y(unit(rng), unit(rng));
    std::vector<Complex> x(cfg.dim);
    for (auto& xi : x) {
      double r = re(rng);
      xi = Complex(r, im(rng));
    }
    EvalPoint p = make_point(cfg, y, std::move(x));
    if (p.margin > opts.margin_floor) return p;
  }
  throw VeeError(ErrorCode::SamplingExhausted,
                 "no point with margin > " + std::to_string(opts.margin_floor) + " in " +
                     std::to_string(opts.max_tries) + " tries");
}

}  // namespace vee
