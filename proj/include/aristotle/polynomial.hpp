#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "aristotle/scalar.hpp"

namespace aristotle {

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
 public:
  using Monomial = std::vector<std::uint8_t>;

  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;
  [[nodiscard]] std::size_t degree() const;
  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    Polynomial nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "c*x^2*t'"-style rendering with the given variable names, highest total
  /// degree last.
  [[nodiscard]] std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;  // zero coefficients never stored
};

std::size_t total_degree(const Polynomial::Monomial& m);

/// Renders a monomial, e.g. {1,0,2} with names (x, t, z) -> "x*z^2"; "1" for
/// the constant monomial.
std::string monomial_name(const Polynomial::Monomial& m, std::span<const std::string> names);

/// All exponent vectors with total degree <= degree, ordered by degree then
/// lexicographically descending.
std::vector<Polynomial::Monomial> monomials_up_to(std::size_t nvars, std::size_t degree);

/// Exact interpolation of a polynomial of total degree <= degree, using
/// Newton forward differences on the lattice {alpha : |alpha| <= degree}.
/// The result is only meaningful if f really has that degree bound; callers
/// should confirm on independent points.
Polynomial interpolate(std::size_t nvars, std::size_t degree,
                       const std::function<Rational(std::span<const Rational>)>& f);

}  // namespace aristotle
