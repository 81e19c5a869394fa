#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vee/config.hpp"

namespace vee {

/// A multiplicity is either a number or a symbol (written `?name`).
using Multiplicity = std::variant<Rational, std::string>;

struct FileEntry {
  RatVector coords;
  Multiplicity mult;
  std::size_t line = 0;  // 1-based source line, 0 when built in memory

  friend bool operator==(const FileEntry& a, const FileEntry& b) { return a.coords == b.coords && a.mult == b.mult; }
};

/// Parsed `.vee` text:
///
///   # comment
///   dim 2
///   vector 1 0 mult 1
///   vector 1/2 3/2 mult ?b
///   lambda2 36
struct ConfigFile {
  std::size_t dim = 0;
  std::vector<FileEntry> entries;
  std::optional<Rational> lambda2;

  bool is_symbolic() const;
  /// Symbols in order of first appearance.
  std::vector<std::string> symbols() const;
  std::vector<RatVector> vectors() const;
  /// Throws InvalidArgument when a multiplicity is symbolic.
  VConfiguration to_config() const;

  friend bool operator==(const ConfigFile& a, const ConfigFile& b) {
    return a.dim == b.dim && a.entries == b.entries && a.lambda2 == b.lambda2;
  }
};

/// Throws ParseError ("line:column: message"), DimensionMismatch, and
/// ZeroCovector / ZeroMultiplicity naming the offending line.
ConfigFile parse_config_file(std::string_view text);

ConfigFile to_config_file(const VConfiguration& cfg, std::optional<Rational> lambda2 = std::nullopt);

/// Canonical text; parse_config_file(render(f)) == f.
std::string render(const ConfigFile& file);

}  // namespace vee
