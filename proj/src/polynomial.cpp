#include "vee/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "vee/error.hpp"

namespace vee {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Monomial(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
  MultiPoly p(std::move(vars));
  Monomial m(p.nvars(), 0);
  m.at(index) = 1;
  p.add_term(m, 1);
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& m = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(m.begin(), m.end(), 0u));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  const auto& m = terms_.begin()->first;
  return static_cast<int>(std::accumulate(m.begin(), m.end(), 0u)) == d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != vars_.size()) throw VeeError(ErrorCode::DimensionMismatch, "monomial arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw VeeError(ErrorCode::InvalidArgument, "polynomials over different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  MultiPoly r(a.vars_);
  Monomial m(a.nvars());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(vars_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.at(var) == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, c * static_cast<unsigned long>(m[var]));
  }
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw VeeError(ErrorCode::DimensionMismatch, "evaluation point arity");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

double MultiPoly::evaluate(std::span<const double> point) const {
  if (point.size() != vars_.size()) throw VeeError(ErrorCode::DimensionMismatch, "evaluation point arity");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= std::pow(point[i], static_cast<int>(m[i]));
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size()) throw VeeError(ErrorCode::DimensionMismatch, "substitution arity");
  if (images.empty()) return *this;
  const auto& target = images.front().vars();
  for (const auto& im : images)
    if (im.vars() != target) throw VeeError(ErrorCode::InvalidArgument, "substitution images over different variables");
  MultiPoly r(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * images[i].pow(m[i]);
    r += t;
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    bool is_const = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

RationalFunction RationalFunction::constant(std::vector<std::string> vars, const Rational& c) {
  return {MultiPoly::constant(vars, c), MultiPoly::constant(vars, 1)};
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw VeeError(ErrorCode::ParseError, msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool minus) {
    MultiPoly left = a.num * b.den;
    MultiPoly right = b.num * a.den;
    return {minus ? left - right : left + right, a.den * b.den};
  }

  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      if (accept('+'))
        r = add(r, term(), false);
      else if (accept('-'))
        r = add(r, term(), true);
      else
        return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    while (true) {
      if (accept('*')) {
        RationalFunction f = unary();
        r = {r.num * f.num, r.den * f.den};
      } else if (accept('/')) {
        RationalFunction f = unary();
        if (f.num.is_zero()) fail("division by zero");
        r = {r.num * f.den, r.den * f.num};
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) {
      RationalFunction f = unary();
      return {Rational(-1) * f.num, f.den};
    }
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return {base.num.pow(e), base.den.pow(e)};
    }
    return base;
  }

  RationalFunction primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalFunction::constant(vars_, parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown identifier '" + name + "'");
      return {MultiPoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin())), MultiPoly::constant(vars_, 1)};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, const std::vector<std::string>& vars) {
  return ExprParser(text, vars).parse();
}

std::vector<std::string> expression_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace vee
