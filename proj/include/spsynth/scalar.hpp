#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spsynth {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 256;

inline unsigned digits_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

// Sets the working precision of Real for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
    Real::default_precision(digits_for_bits(bits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Boost reads a leading 0 as an octal prefix, so digits go through here.
inline Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer{std::string(digits)};
}

inline Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  Integer v = decimal_integer(s);
  return neg ? Integer(-v) : v;
}

inline Integer pow10(unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace detail

// Accepts "n", "n/d" and decimal notation such as "-1.25e-3"; the result is exact.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer n = detail::parse_integer(detail::trim(s.substr(0, slash)));
    Integer d = detail::parse_integer(detail::trim(s.substr(slash + 1)));
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
  }
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view es = s.substr(e + 1);
    std::string_view digits = es;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
    if (!detail::all_digits(digits) || digits.size() > 6)
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    exponent = std::stol(std::string(es));
    s = s.substr(0, e);
  }
  std::string mantissa;
  auto dot = s.find('.');
  std::string_view ip = s.substr(0, dot);
  std::string_view fp = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if ((ip.empty() && fp.empty()) || (!ip.empty() && !detail::all_digits(ip)) ||
      (!fp.empty() && !detail::all_digits(fp)))
    throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
  mantissa.append(ip).append(fp);
  exponent -= static_cast<long>(fp.size());
  Rational v{detail::decimal_integer(mantissa)};
  if (exponent > 0) v *= Rational(detail::pow10(static_cast<unsigned>(exponent)));
  if (exponent < 0) v /= Rational(detail::pow10(static_cast<unsigned>(-exponent)));
  return neg ? Rational(-v) : v;
}

// Canonical exact form "n/d", always with a slash.
inline std::string to_string(const Rational& q) {
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

inline std::string to_decimal(const Real& x, unsigned digits = 0) {
  if (digits == 0) digits = x.precision();
  return x.str(static_cast<std::streamsize>(digits));
}

inline std::string to_decimal(const Rational& q, unsigned digits = 40) {
  PrecisionScope scope(std::max(64u, digits * 4 + 16));
  return Real(q).str(static_cast<std::streamsize>(digits));
}

// Uniform helpers so generic code can work over Rational, Real, double and
// the quadratic surds defined elsewhere.
inline Real to_real(const Rational& q) { return Real(q); }
inline Real to_real(const Real& x) { return x; }
inline Real to_real(double x) { return Real(x); }

inline bool is_positive(const Rational& q) { return q > 0; }
inline bool is_positive(const Real& x) { return x > 0; }
inline bool is_positive(double x) { return x > 0; }

inline Rational abs_of(const Rational& q) { return mp::abs(q); }
inline Real abs_of(const Real& x) { return mp::abs(x); }
inline double abs_of(double x) { return std::fabs(x); }

inline std::string key_string(const Rational& q) { return to_string(q); }
inline std::string key_string(const Real& x) { return x.str(0, std::ios_base::scientific); }
inline std::string key_string(double x) { return to_decimal(Real(x), 17); }

inline std::string exact_string(const Rational& q) { return to_string(q); }

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

inline Rational reciprocal(const Rational& q) { return Rational(1) / q; }
inline Real reciprocal(const Real& x) { return Real(1) / x; }
inline double reciprocal(double x) { return 1.0 / x; }

}  // namespace spsynth
