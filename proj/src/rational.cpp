#include "vee/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "vee/error.hpp"

namespace vee {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ZeroCovector: return "ZeroCovector";
    case ErrorCode::ZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorCode::DuplicateCovector: return "DuplicateCovector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::FunctionalVanishes: return "FunctionalVanishes";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::CollinearPair: return "CollinearPair";
    case ErrorCode::NonScalarAction: return "NonScalarAction";
    case ErrorCode::SpanDeficient: return "SpanDeficient";
    case ErrorCode::DegenerateParametrization: return "DegenerateParametrization";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw VeeError(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw VeeError(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
  if (d == 0) throw VeeError(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw VeeError(ErrorCode::InvalidArgument, "cannot rationalize non-finite value");
  // Convergents h/k of the continued fraction of x.
  long double rem = x;
  Integer h_prev = 1, h = static_cast<long>(std::floor(rem));
  Integer k_prev = 0, k = 1;
  rem -= std::floor(rem);
  for (int iter = 0; iter < 64 && rem > 1e-18L; ++iter) {
    rem = 1.0L / rem;
    long double a_ld = std::floor(rem);
    if (a_ld > 1e15L) break;
    Integer a = static_cast<long>(a_ld);
    rem -= a_ld;
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_den) {
      // The best approximation may be a semiconvergent (m h + h_prev) / (m k + k_prev).
      Integer m = (Integer(max_den) - k_prev) / k;
      if (m > 0) {
        Rational semi(Integer(m * h + h_prev), Integer(m * k + k_prev));
        Rational conv(h, k);
        semi.canonicalize();
        conv.canonicalize();
        Rational target(static_cast<double>(x));
        if (abs(semi - target) < abs(conv - target)) return semi;
      }
      break;
    }
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  Rational q(h, k);
  q.canonicalize();
  return q;
}

Integer lcm_of_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

bool is_zero(const RatVector& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw VeeError(ErrorCode::DimensionMismatch, "dot of vectors with different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool parallel(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

bool multiple_of(const RatVector& d, const RatVector& a, Rational* k) {
  if (!parallel(d, a)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) {
      *k = d[i] / a[i];
      return true;
    }
  }
  return false;
}

RatVector operator-(const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

}  // namespace vee
