#include "aristotle/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <system_error>

namespace aristotle {

double Rational::to_double() const {
  if (value_ == 0) return 0.0;
  mpz_class n = abs(value_.get_num());
  mpz_class d = value_.get_den();
  // Scale so the integer quotient carries 55-56 bits, then fold the remainder
  // into a sticky bit; the final integer-to-double conversion rounds once.
  const long shift = 55 - (static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)));
  if (shift > 0) {
    n <<= shift;
  } else {
    d <<= -shift;
  }
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (r != 0) q |= 1;
  const double v = std::ldexp(static_cast<double>(q.get_ui()), static_cast<int>(-shift));
  return sgn(value_) < 0 ? -v : v;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  mpq_class out;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    out = mpq_class(n, d);
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      auto exp_text = s.substr(e + 1);
      if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
      const auto* first = exp_text.data();
      const auto* last = first + exp_text.size();
      const auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (exp_text.empty() || ec != std::errc{} || ptr != last) bad_number(text);
      if (exponent > 4096 || exponent < -4096) bad_number(text);
    }
    std::string digits;
    bool seen_point = false;
    for (char c : mantissa) {
      if (c == '.') {
        if (seen_point) bad_number(text);
        seen_point = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (seen_point) --exponent;
      } else {
        bad_number(text);
      }
    }
    if (digits.empty()) bad_number(text);
    mpz_class n(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    out = exponent < 0 ? mpq_class(n, scale) : mpq_class(n * scale);
  }
  out.canonicalize();
  if (negative) out = -out;
  return Rational(out);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

long ceil_to_long(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("step count out of range");
  return q.get_si();
}

double ScalarTraits<double>::parse(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.find('/') != std::string_view::npos) {
    return Rational::parse(s).to_double();
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    bad_number(s);
  }
  return v;
}

std::string ScalarTraits<double>::to_string(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

long ScalarTraits<double>::ceil(double v) {
  // Absorbs the representation error of ratios such as 10 / 0.001.
  const double slack = 1e-9 * std::fmax(1.0, std::fabs(v));
  return static_cast<long>(std::ceil(v - slack));
}

}  // namespace aristotle
