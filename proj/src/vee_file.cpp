#include "vee/vee_file.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vee/error.hpp"

namespace vee {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) {
  throw VeeError(ErrorCode::ParseError, std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}

Rational number(const Token& t, std::size_t line) {
  try {
    return parse_rational(t.text);
  } catch (const VeeError&) {
    fail(line, t.column, "expected a rational, got '" + std::string(t.text) + "'");
  }
}

bool valid_symbol(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

bool ConfigFile::is_symbolic() const {
  return std::any_of(entries.begin(), entries.end(), [](const FileEntry& e) { return std::holds_alternative<std::string>(e.mult); });
}

std::vector<std::string> ConfigFile::symbols() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (const auto* s = std::get_if<std::string>(&e.mult))
      if (std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(*s);
  return out;
}

std::vector<RatVector> ConfigFile::vectors() const {
  std::vector<RatVector> out;
  for (const auto& e : entries) out.push_back(e.coords);
  return out;
}

VConfiguration ConfigFile::to_config() const {
  std::vector<Entry> es;
  for (const auto& e : entries) {
    const auto* c = std::get_if<Rational>(&e.mult);
    if (!c) throw VeeError(ErrorCode::InvalidArgument, "symbolic multiplicity '?" + std::get<std::string>(e.mult) + "' needs a numeric value");
    es.push_back({Covector{e.coords}, *c, ""});
  }
  return VConfiguration::build(dim, std::move(es));
}

ConfigFile parse_config_file(std::string_view text) {
  ConfigFile out;
  bool have_dim = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const Token& head = toks[0];

    if (!have_dim) {
      if (head.text != "dim") fail(lineno, head.column, "expected 'dim' before anything else");
      if (toks.size() != 2) fail(lineno, head.column, "'dim' takes exactly one argument");
      Rational n = number(toks[1], lineno);
      if (n.get_den() != 1 || n <= 0) fail(lineno, toks[1].column, "dimension must be a positive integer");
      out.dim = n.get_num().get_ui();
      have_dim = true;
      continue;
    }

    if (head.text == "dim") fail(lineno, head.column, "'dim' given twice");

    if (head.text == "lambda2") {
      if (out.lambda2) fail(lineno, head.column, "'lambda2' given twice");
      if (toks.size() != 2) fail(lineno, head.column, "'lambda2' takes exactly one argument");
      out.lambda2 = number(toks[1], lineno);
      continue;
    }

    if (head.text != "vector") fail(lineno, head.column, "unknown directive '" + std::string(head.text) + "'");

    auto mult_at = std::find_if(toks.begin() + 1, toks.end(), [](const Token& t) { return t.text == "mult"; });
    if (mult_at == toks.end()) fail(lineno, line.size() + 1, "missing 'mult'");
    const std::size_t ncoords = static_cast<std::size_t>(mult_at - toks.begin()) - 1;
    if (ncoords != out.dim)
      throw VeeError(ErrorCode::DimensionMismatch, "line " + std::to_string(lineno) + ": expected " + std::to_string(out.dim) +
                                                       " coordinates, got " + std::to_string(ncoords));
    if (toks.end() - mult_at != 2)
      fail(lineno, mult_at->column, "'mult' takes exactly one argument");

    FileEntry e;
    e.line = lineno;
    for (auto it = toks.begin() + 1; it != mult_at; ++it) e.coords.push_back(number(*it, lineno));
    const Token& m = *(mult_at + 1);
    if (m.text.front() == '?') {
      if (!valid_symbol(m.text.substr(1))) fail(lineno, m.column, "bad symbol '" + std::string(m.text) + "'");
      e.mult = std::string(m.text.substr(1));
    } else {
      Rational c = number(m, lineno);
      if (c == 0) throw VeeError(ErrorCode::ZeroMultiplicity, "line " + std::to_string(lineno) + ": zero multiplicity");
      e.mult = c;
    }
    if (is_zero(e.coords)) throw VeeError(ErrorCode::ZeroCovector, "line " + std::to_string(lineno) + ": zero covector");
    out.entries.push_back(std::move(e));
  }
  if (!have_dim) fail(lineno, 1, "missing 'dim'");
  return out;
}

ConfigFile to_config_file(const VConfiguration& cfg, std::optional<Rational> lambda2) {
  ConfigFile out;
  out.dim = cfg.dim();
  for (const auto& e : cfg.entries()) out.entries.push_back({e.covector.coords, e.mult, 0});
  out.lambda2 = std::move(lambda2);
  return out;
}

std::string render(const ConfigFile& file) {
  std::ostringstream os;
  os << "dim " << file.dim << "\n";
  for (const auto& e : file.entries) {
    os << "vector";
    for (const auto& q : e.coords) os << " " << to_string(q);
    os << " mult ";
    if (const auto* s = std::get_if<std::string>(&e.mult))
      os << "?" << *s;
    else
      os << to_string(std::get<Rational>(e.mult));
    os << "\n";
  }
  if (file.lambda2) os << "lambda2 " << to_string(*file.lambda2) << "\n";
  return os.str();
}

}  // namespace vee
