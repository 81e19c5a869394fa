#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vee/config.hpp"

namespace vee {

enum class Provenance { Published, Derived, Trivial };

std::string_view to_string(Provenance p);

enum class ExpectedLambda { Value, NoSolution, Unspecified };

struct Expected {
  bool is_trig_vee = true;
  ExpectedLambda lambda_kind = ExpectedLambda::Unspecified;
  Rational lambda_squared;  // when lambda_kind == Value
  Provenance provenance = Provenance::Published;
  std::string note;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  VConfiguration cfg;
  std::optional<Expected> expected;
};

struct CatalogParam {
  std::string name;
  Rational default_value;
};

struct CatalogInfo {
  std::string name;
  std::string description;
  std::vector<CatalogParam> params;
};

using ParamMap = std::map<std::string, Rational>;

/// Stable order.
std::vector<CatalogInfo> catalog_list();

/// Unspecified params take their defaults. Throws UnknownName, InvalidParams
/// (unknown parameter, zero multiplicity, or a violated family relation).
CatalogEntry catalog_get(std::string_view name, const ParamMap& params = {});

/// A (+) B on V_A (+) V_B.
VConfiguration direct_sum(const VConfiguration& a, const VConfiguration& b);

}  // namespace vee
