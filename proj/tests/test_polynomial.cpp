#include <gtest/gtest.h>

#include "aristotle/lie_core.hpp"
#include "aristotle/polynomial.hpp"

using aristotle::Polynomial;
using aristotle::Rational;

TEST(Polynomial, ArithmeticAndEvaluation) {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  auto p = x * x * y + Polynomial::constant(2, Rational(3));
  p = p - y;
  const std::vector<Rational> pt = {Rational(2), Rational(1, 2)};
  EXPECT_EQ(p.evaluate(pt), Rational(2) + Rational(3) - Rational(1, 2));
  EXPECT_EQ(p.degree(), 3u);
  EXPECT_EQ(p.coefficient({2, 1}), Rational(1));
  EXPECT_EQ((p - p), Polynomial(2));
}

TEST(Polynomial, MonomialEnumeration) {
  const auto ms = aristotle::monomials_up_to(3, 2);
  EXPECT_EQ(ms.size(), 10u);  // C(5, 2)
  EXPECT_EQ(aristotle::total_degree(ms.front()), 0u);
  const std::vector<std::string> names = {"x", "t", "z"};
  EXPECT_EQ(aristotle::monomial_name({1, 0, 2}, names), "x*z^2");
  EXPECT_EQ(aristotle::monomial_name({0, 0, 0}, names), "1");
}

TEST(Polynomial, InterpolationRecoversPolynomial) {
  const auto f = [](std::span<const Rational> v) {
    return Rational(1, 2) * v[0] * v[0] * v[2] - Rational(3) * v[1] + Rational(7);
  };
  const auto p = aristotle::interpolate(3, 3, f);
  EXPECT_EQ(p.coefficient({2, 0, 1}), Rational(1, 2));
  EXPECT_EQ(p.coefficient({0, 1, 0}), Rational(-3));
  EXPECT_EQ(p.coefficient({0, 0, 0}), Rational(7));
  EXPECT_EQ(p.terms().size(), 3u);
}

TEST(Polynomial, InterpolatedGroupLawBComponent) {
  const auto b = aristotle::interpolate(10, 3, [](std::span<const Rational> v) {
    const aristotle::lie::GroupElement<Rational> g{v[0], v[1], v[2], v[3], v[4]};
    const aristotle::lie::GroupElement<Rational> h{v[5], v[6], v[7], v[8], v[9]};
    return aristotle::lie::compose(g, h).b;
  });
  using M = Polynomial::Monomial;
  EXPECT_EQ(b.coefficient(M{0, 0, 1, 0, 0, 0, 1, 0, 0, 0}), Rational(1, 2));
  EXPECT_EQ(b.coefficient(M{0, 1, 0, 0, 0, 0, 0, 1, 0, 0}), Rational(-1, 2));
  EXPECT_EQ(b.coefficient(M{1, 1, 0, 0, 0, 0, 1, 0, 0, 0}), Rational(-1, 2));
  EXPECT_EQ(b.terms().size(), 5u);
}
