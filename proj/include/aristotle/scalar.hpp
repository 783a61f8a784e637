#pragma once

// Numeric backends shared by every module: an exact rational type and plain
// double. Algorithms are written once against the Scalar concept below.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aristotle {

/// Exact arbitrary-precision rational. Eagerly evaluated wrapper around
/// mpq_class so that `auto` and templates never capture GMP expression
/// templates.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT(implicit)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Accepts "7", "-3/4", "0.125", "1e-3", "-2.5E+2". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpq_class& raw() const { return value_; }
  [[nodiscard]] std::string str() const { return value_.get_str(); }
  /// Nearest double (ties to even), barring subnormal results.
  [[nodiscard]] double to_double() const;
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);

/// Smallest integer n with n >= r.
long ceil_to_long(const Rational& r);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";
  static Rational parse(std::string_view s) { return Rational::parse(s); }
  static std::string to_string(const Rational& v) { return v.str(); }
  static double to_double(const Rational& v) { return v.to_double(); }
  static Rational from_double(double v) { return Rational(mpq_class(v)); }
  static Rational abs(const Rational& v) { return aristotle::abs(v); }
  /// Exact backend: the tolerance is ignored.
  static bool near_zero(const Rational& v, const Rational& /*scale*/, double /*tol*/) {
    return v.is_zero();
  }
  static bool near_equal(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }
  static long ceil(const Rational& v) { return ceil_to_long(v); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float";
  static double parse(std::string_view s);
  /// Shortest round-trip representation.
  static std::string to_string(double v);
  static double to_double(double v) { return v; }
  static double from_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
  static bool near_zero(double v, double scale, double tol) {
    return std::fabs(v) <= tol * std::fabs(scale);
  }
  /// Mixed absolute/relative test: |a-b| <= tol * max(1, |a|, |b|).
  static bool near_equal(double a, double b, double tol) {
    const double mag = std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
    return std::fabs(a - b) <= tol * mag;
  }
  static long ceil(double v);
};

template <class T>
concept Scalar = requires(T a, T b) {
  { ScalarTraits<T>::exact } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  T(1);
};

template <Scalar T>
T half() {
  return T(1) / T(2);
}

template <Scalar T>
bool is_exact_zero(const T& v) {
  return v == T(0);
}

template <Scalar T>
T max_abs(std::initializer_list<T> values) {
  T best(0);
  for (const T& v : values) {
    const T a = ScalarTraits<T>::abs(v);
    if (best < a) best = a;
  }
  return best;
}

}  // namespace aristotle
