#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "vee/config.hpp"

namespace vee {

using Complex = std::complex<double>;

/// Floating copy of a configuration for the numeric kernels.
struct NumericConfig {
  std::size_t dim = 0;
  std::vector<std::vector<double>> covectors;
  std::vector<double> mults;

  explicit NumericConfig(const VConfiguration& cfg);

  Complex pair(std::size_t i, const std::vector<Complex>& x) const;  // alpha_i(x)
};

/// (y, x_1..x_n) with margin = min_alpha |sin alpha(x)|.
struct EvalPoint {
  Complex y;
  std::vector<Complex> x;
  double margin = 0.0;
};

double point_margin(const NumericConfig& cfg, const std::vector<Complex>& x);

EvalPoint make_point(const NumericConfig& cfg, Complex y, std::vector<Complex> x);

struct SamplerOptions {
  double margin_floor = 0.1;
  int max_tries = 1000;
};

/// Point number `index` of the stream for `seed`: Re x_i uniform in [-2, 2],
/// Im x_i uniform in [-1, -1/4], y uniform in the unit square. Each index has
/// its own generator, so the stream is the same however points are scheduled.
/// Rejects points with margin <= margin_floor; throws SamplingExhausted after
/// max_tries rejections.
EvalPoint sample_point(const NumericConfig& cfg, std::uint64_t seed, std::size_t index, const SamplerOptions& opts = {});

}  // namespace vee
