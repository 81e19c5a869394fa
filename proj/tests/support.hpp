#pragma once

#include <algorithm>
#include <random>
#include <string_view>

#include "vee/catalog.hpp"
#include "vee/vee_file.hpp"

namespace vee::test {

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

inline VConfiguration from_text(std::string_view text) { return parse_config_file(text).to_config(); }

inline std::vector<RatVector> vectors_of(const VConfiguration& cfg) {
  std::vector<RatVector> out;
  for (const auto& e : cfg.entries()) out.push_back(e.covector.coords);
  return out;
}

inline RatVector mults_of(const VConfiguration& cfg) {
  RatVector out;
  for (const auto& e : cfg.entries()) out.push_back(e.mult);
  return out;
}

/// Small nonzero rational p/q with |p| <= 9, 1 <= q <= 5.
inline Rational random_rational(std::mt19937_64& rng, bool positive = true) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 5), sign(0, 1);
  Rational r = make_rational(num(rng), den(rng));
  return (!positive && sign(rng)) ? Rational(-r) : r;
}

/// Random invertible integer matrix with entries in [-3, 3].
inline RatMatrix random_gl(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-3, 3);
  while (true) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (determinant(m) != 0) return m;
  }
}

/// Catalog entries with a known lambda^2 value, at default parameters.
inline std::vector<CatalogEntry> valued_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& info : catalog_list()) {
    CatalogEntry e = catalog_get(info.name);
    if (e.expected && e.expected->lambda_kind == ExpectedLambda::Value) out.push_back(std::move(e));
  }
  return out;
}

// Random configuration: dim 2-3, at most 6 covectors, small integer coordinates.
inline VConfiguration random_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dimd(2, 3), coord(-2, 2);
  const auto n = static_cast<std::size_t>(dimd(rng));
  while (true) {
    std::uniform_int_distribution<std::size_t> count(n, 6);
    std::vector<Entry> es;
    const std::size_t m = count(rng);
    while (es.size() < m) {
      RatVector v(n);
      for (auto& x : v) x = coord(rng);
      if (is_zero(v)) continue;
      bool dup = std::any_of(es.begin(), es.end(), [&](const Entry& e) { return e.covector.coords == v || e.covector.coords == -v; });
      if (dup) continue;
      es.push_back({Covector{v}, random_rational(rng), ""});
    }
    VConfiguration cfg = VConfiguration::build(n, std::move(es));
    if (!cfg.is_degenerate()) return cfg;
  }
}

// Random rescaled GL image of a passing configuration of dim <= 3 and <= 6 covectors.
inline VConfiguration random_passing(std::mt19937_64& rng) {
  static const std::vector<std::string> names{"A2", "B2", "G2", "A3", "OrthogonalPair", "Prop3", "Prop4"};
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  const std::string& name = names[pick(rng)];
  ParamMap p;
  if (name == "B2" || name == "G2") p = {{"cs", random_rational(rng)}, {"cl", random_rational(rng)}};
  if (name == "A3") p = {{"c", random_rational(rng)}};
  if (name == "Prop3") {
    Rational c = random_rational(rng);
    p = {{"c1", c}, {"c2", c}, {"cp", random_rational(rng)}, {"cm", random_rational(rng)}};
  }
  VConfiguration cfg = catalog_get(name, p).cfg;
  return cfg.transformed(random_gl(rng, cfg.dim()));
}

}  // namespace vee::test
