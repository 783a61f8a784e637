#include <gtest/gtest.h>

#include "aristotle/lie_core.hpp"
#include "aristotle/rng.hpp"

namespace {

using namespace aristotle;
using namespace aristotle::lie;
using Q = Rational;
using A = AlgebraElement<Q>;
using G = GroupElement<Q>;

A basis_of(Basis b) { return A::basis(b); }

A element(Q p, Q e, Q f, Q l, Q y) {
  A out;
  out.coeffs = {p, e, f, l, y};
  return out;
}

G group(Q x, Q t, Q z, Q a, Q b) { return {x, t, z, a, b}; }

}  // namespace

TEST(Bracket, StructureConstants) {
  EXPECT_EQ(bracket(basis_of(Basis::P), basis_of(Basis::E)), basis_of(Basis::F));
  EXPECT_EQ(bracket(basis_of(Basis::E), basis_of(Basis::P)), -basis_of(Basis::F));
  EXPECT_EQ(bracket(basis_of(Basis::P), basis_of(Basis::F)), basis_of(Basis::Lambda));
  EXPECT_EQ(bracket(basis_of(Basis::F), basis_of(Basis::E)), basis_of(Basis::Y));
  EXPECT_EQ(bracket(basis_of(Basis::P) + basis_of(Basis::E), basis_of(Basis::F)),
            basis_of(Basis::Lambda) - basis_of(Basis::Y));
  for (auto b : kBasis) {
    EXPECT_TRUE(bracket(basis_of(Basis::Y), basis_of(b)).is_zero());
    EXPECT_TRUE(bracket(basis_of(Basis::Lambda), basis_of(b)).is_zero());
  }
}

TEST(Bracket, JacobiAndNilpotency) {
  const auto& c = aristotle_tensor<Q>();
  EXPECT_TRUE(c.is_antisymmetric());
  EXPECT_EQ(jacobi_residual(c), Q(0));
  EXPECT_EQ(nested_bracket_residual(c, 4), Q(0));
  // Length-3 words do not all vanish: [P, [P, E]] = Lambda.
  EXPECT_NE(nested_bracket_residual(c, 3), Q(0));
}

TEST(Bracket, MutatedTensorBreaksJacobi) {
  auto c = StructureTensor<Q>::aristotle();
  c.set_bracket(Basis::F, Basis::E, basis_of(Basis::F));
  EXPECT_TRUE(c.is_antisymmetric());
  EXPECT_EQ(jacobi_sum(c, Basis::P, Basis::E, Basis::F), -basis_of(Basis::Lambda));
  EXPECT_NE(jacobi_residual(c), Q(0));
}

TEST(Bracket, CommutingTripleHasZeroJacobiSum) {
  auto c = StructureTensor<Q>::aristotle();
  c.set_bracket(Basis::F, Basis::E, basis_of(Basis::F));
  EXPECT_TRUE(jacobi_sum(c, Basis::F, Basis::Lambda, Basis::Y).is_zero());
}

TEST(Adjoint, AdOfGenerators) {
  const auto adp = ad(basis_of(Basis::P));
  EXPECT_EQ(adp * basis_of(Basis::E), basis_of(Basis::F));
  EXPECT_EQ(adp * basis_of(Basis::F), basis_of(Basis::Lambda));
  EXPECT_TRUE((adp * basis_of(Basis::P)).is_zero());
  EXPECT_TRUE(ad(basis_of(Basis::Y)).is_zero());
  EXPECT_TRUE((adp * adp * adp).is_zero());
  EXPECT_FALSE((adp * adp).is_zero());
}

TEST(Adjoint, ExpOfTranslation) {
  const Q x(3, 2);
  const auto m = adjoint_of_group(group(x, 0, 0, 0, 0));
  EXPECT_EQ(m * basis_of(Basis::E),
            basis_of(Basis::E) + x * basis_of(Basis::F) + (x * x / Q(2)) * basis_of(Basis::Lambda));
  EXPECT_EQ(m * basis_of(Basis::F), basis_of(Basis::F) + x * basis_of(Basis::Lambda));
  for (auto b : {Basis::P, Basis::Lambda, Basis::Y}) EXPECT_EQ(m * basis_of(b), basis_of(b));
  EXPECT_EQ(adjoint_of_group(G::identity()), AdjointMatrix<Q>::identity());
}

TEST(Bch, KnownValues) {
  const Q x(2), t(3), z(5);
  EXPECT_EQ(bch(x * basis_of(Basis::P), A{}), x * basis_of(Basis::P));
  EXPECT_EQ(bch(t * basis_of(Basis::E), z * basis_of(Basis::F)),
            element(0, t, z, 0, -t * z / Q(2)));
  EXPECT_EQ(bch(x * basis_of(Basis::P), t * basis_of(Basis::E)),
            element(x, t, x * t / Q(2), x * x * t / Q(12), x * t * t / Q(12)));
}

TEST(Compose, KnownProducts) {
  const auto g = group(Q(1, 3), Q(-2), Q(5, 7), Q(1), Q(-4, 9));
  EXPECT_EQ(compose(g, G::identity()), g);
  EXPECT_EQ(compose(G::identity(), g), g);
  EXPECT_EQ(compose(group(1, 0, 0, 0, 0), group(0, 1, 0, 0, 0)), group(1, 1, 1, Q(1, 2), 0));
  EXPECT_EQ(compose(group(0, 1, 0, 0, 0), group(1, 0, 0, 0, 0)), group(1, 1, 0, 0, 0));
}

TEST(Compose, ClosedFormOfDerivedLaw) {
  CounterRng rng(11);
  for (int i = 0; i < 200; ++i) {
    const G g{rng.rational(), rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    const G h{rng.rational(), rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    const Q half(1, 2);
    const G want{g.x + h.x, g.t + h.t, g.zeta + h.zeta + g.x * h.t,
                 g.a + h.a + g.x * h.zeta + half * g.x * g.x * h.t,
                 g.b + h.b + half * g.zeta * h.t - half * g.t * h.zeta - half * g.x * g.t * h.t};
    ASSERT_EQ(compose(g, h), want);
  }
}

TEST(ComposePrinted, LiteralValuesAndDefect) {
  EXPECT_EQ(compose_printed(G::identity(), G::identity()), G::identity());
  EXPECT_EQ(compose_printed(group(1, 0, 0, 0, 0), group(0, 1, 0, 0, 0)),
            group(1, 1, 1, Q(1, 2), Q(1, 2)));
  const auto g1 = group(1, 0, 0, 0, 0), g2 = group(0, 0, 1, 0, 0), g3 = group(0, 1, 0, 0, 0);
  const auto left = compose_printed(compose_printed(g1, g2), g3);
  const auto right = compose_printed(g1, compose_printed(g2, g3));
  EXPECT_EQ(left, group(1, 1, 2, Q(3, 2), Q(1, 2)));
  EXPECT_EQ(right, group(1, 1, 2, Q(3, 2), Q(3, 2)));
  EXPECT_EQ(compose(compose(g1, g2), g3), compose(g1, compose(g2, g3)));
}

TEST(Inverse, KnownValues) {
  EXPECT_EQ(inverse(G::identity()), G::identity());
  EXPECT_EQ(inverse(group(Q(5, 2), 0, 0, 0, 0)), group(Q(-5, 2), 0, 0, 0, 0));
  EXPECT_EQ(inverse(group(1, 0, 1, 0, 0)), group(-1, 0, -1, 1, 0));
}

TEST(SingleExponential, KnownValuesAndRoundTrip) {
  EXPECT_TRUE(to_single_exponential(G::identity()).is_zero());
  EXPECT_EQ(to_single_exponential(group(Q(3), 0, 0, 0, 0)), Q(3) * basis_of(Basis::P));
  EXPECT_EQ(from_single_exponential(Q(3) * basis_of(Basis::P)), group(3, 0, 0, 0, 0));
  CounterRng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const G g{rng.rational(), rng.rational(), rng.rational(), rng.rational(), rng.rational()};
    ASSERT_EQ(from_single_exponential(to_single_exponential(g)), g);
  }
}

TEST(GroupProperties, RandomizedAxioms) {
  CounterRng rng(99);
  const auto draw = [&] {
    return G{rng.rational(), rng.rational(), rng.rational(), rng.rational(), rng.rational()};
  };
  for (int i = 0; i < 200; ++i) {
    const auto g = draw(), h = draw(), k = draw();
    ASSERT_EQ(compose(compose(g, h), k), compose(g, compose(h, k)));
    ASSERT_EQ(compose(g, inverse(g)), G::identity());
    ASSERT_EQ(compose(inverse(g), g), G::identity());
    ASSERT_EQ(adjoint_of_group(compose(g, h)), adjoint_of_group(g) * adjoint_of_group(h));
    const auto m = adjoint_of_group(g);
    const auto n = m - AdjointMatrix<Q>::identity();
    ASSERT_TRUE((n * n * n).is_zero());
    ASSERT_EQ(m.determinant(), Q(1));
    A a, b;
    for (auto& c : a.coeffs) c = rng.rational();
    for (auto& c : b.coeffs) c = rng.rational();
    ASSERT_EQ(bch(a, b), -bch(-b, -a));
  }
}

TEST(GroupProperties, FloatBackendAgreesWithRational) {
  const GroupElement<double> g{0.5, -1.25, 2.0, 0.75, -3.0};
  const GroupElement<double> h{1.5, 0.25, -0.5, 1.0, 2.0};
  const auto d = compose(g, h);
  const auto q = compose(G{Q(1, 2), Q(-5, 4), 2, Q(3, 4), -3}, G{Q(3, 2), Q(1, 4), Q(-1, 2), 1, 2});
  EXPECT_DOUBLE_EQ(d.b, q.b.to_double());
  EXPECT_DOUBLE_EQ(d.a, q.a.to_double());
}
