#include <gtest/gtest.h>

#include <cmath>

#include "aristotle/dynamics.hpp"
#include "aristotle/rng.hpp"

namespace {

using namespace aristotle;
using namespace aristotle::dynamics;
using Q = Rational;
using D = DualElement<Q>;

const OrbitParams<Q> kUnit{1, 1};

}  // namespace

TEST(Flows, KnownValues) {
  const D mu{0, 0, 1, 1, 1};
  EXPECT_EQ(space_flow(mu, Q(1)), (D{0, Q(3, 2), 2, 1, 1}));
  EXPECT_EQ(time_flow(mu, Q(1)), (D{Q(-1, 2), 0, 0, 1, 1}));
  EXPECT_EQ(time_flow(mu, Q(0)), mu);
  EXPECT_EQ(time_flow(time_flow(mu, Q(1, 3)), Q(2, 3)), time_flow(mu, Q(1)));
  EXPECT_EQ(space_flow(space_flow(mu, Q(-2)), Q(5)), space_flow(mu, Q(3)));
}

TEST(Flows, MatchClosedForms) {
  CounterRng rng(3);
  for (int i = 0; i < 100; ++i) {
    const D mu{rng.rational(), rng.rational(), rng.rational(), rng.nonzero_scalar<Q>(),
               rng.nonzero_scalar<Q>()};
    const OrbitParams<Q> prm{mu.k, mu.y};
    const Q t = rng.rational();
    const auto a = time_flow(mu, t);
    const auto c = time_closed_form(mu.f / mu.k, mu.p, prm, t);
    ASSERT_EQ(a.f / a.k, c.q);
    ASSERT_EQ(a.p, c.p);
    const auto b = space_flow(mu, t);
    const auto s = space_closed_form(mu.f / mu.y, mu.e, mu.f, prm, t);
    ASSERT_EQ(b.f / b.y, s.tau);
    ASSERT_EQ(b.e, s.e);
  }
}

TEST(Rhs, DerivedAndPrinted) {
  EXPECT_EQ(time_rhs(TimeState<Q>{1, 0, 2}, kUnit), (Rates<Q>{-1, -1}));
  EXPECT_EQ(time_rhs(TimeState<Q>{3, 0, 0}, OrbitParams<Q>{2, 1}).second, Q(-6));
  EXPECT_EQ(time_rhs_printed(TimeState<Q>{0, 0, 1}, kUnit).second, Q(-1));
  EXPECT_EQ(time_rhs_printed(TimeState<Q>{5, 0, 0}, kUnit), time_rhs(TimeState<Q>{5, 0, 0}, kUnit));
  EXPECT_EQ(time_rhs_printed(TimeState<Q>{1, 0, 2}, kUnit), (Rates<Q>{-1, -3}));
  EXPECT_EQ(space_rhs(SpaceState<Q>{1, 0, 2}, kUnit), (Rates<Q>{1, 1}));
  EXPECT_EQ(space_rhs_printed(SpaceState<Q>{1, 0, 2}, kUnit), (Rates<Q>{1, 3}));
  EXPECT_EQ(space_rhs(SpaceState<Q>{2, 0, 0}, OrbitParams<Q>{1, 3}).second, Q(6));
  EXPECT_EQ(space_rhs_printed(SpaceState<Q>{0, 0, 1}, kUnit).second, Q(1));
  EXPECT_EQ(space_rhs(SpaceState<Q>{0, 0, 1}, kUnit).second, Q(0));
}

TEST(Rhs, ChartUndefinedWithoutDivision) {
  EXPECT_THROW((void)time_rhs(TimeState<Q>{}, OrbitParams<Q>{0, 1}), ChartUndefined);
  EXPECT_THROW((void)space_rhs(SpaceState<Q>{}, OrbitParams<Q>{1, 0}), ChartUndefined);
  EXPECT_THROW((void)time_closed_form(Q(0), Q(0), OrbitParams<Q>{0, 1}, Q(1)), ChartUndefined);
}

TEST(Hamiltonians, KnownValues) {
  EXPECT_EQ(hamiltonian_time(Q(1), Q(1), Q(0), kUnit), Q(-1, 2));
  EXPECT_EQ(hamiltonian_time(Q(0), Q(1), Q(1), kUnit), Q(-1, 2));
  EXPECT_EQ(hamiltonian_space(Q(1), Q(1), Q(0), kUnit), Q(-1, 2));
  EXPECT_EQ(hamiltonian_space(Q(0), Q(1), Q(1), kUnit), Q(3, 2));
  EXPECT_EQ(hamiltonian_time(Q(0), Q(0), Q(7), kUnit), Q(0));
  EXPECT_EQ(hamiltonian_space(Q(0), Q(0), Q(7), kUnit), Q(0));
}

TEST(Realizations, KnownValues) {
  EXPECT_EQ(realization_time(Q(0), Q(0), Q(1), TimePoint<Q>{0, 0}, OrbitParams<Q>{1, 0}),
            (TimePoint<Q>{0, -1}));
  EXPECT_EQ(realization_space(Q(1), Q(0), Q(0), SpacePoint<Q>{0, 0}, kUnit),
            (SpacePoint<Q>{1, Q(1, 2)}));
  EXPECT_EQ(realization_time(Q(0), Q(0), Q(0), TimePoint<Q>{3, 4}, kUnit), (TimePoint<Q>{3, 4}));
  EXPECT_EQ(realization_time(Q(1), Q(0), Q(0), TimePoint<Q>{3, 4}, kUnit), (TimePoint<Q>{4, 4}));
  EXPECT_EQ(realization_space(Q(0), Q(1), Q(0), SpacePoint<Q>{3, 4}, kUnit), (SpacePoint<Q>{2, 4}));
}

TEST(ClosedForms, KnownValues) {
  EXPECT_EQ(time_closed_form(Q(0), Q(0), kUnit, Q(2)), (TimePoint<Q>{-2, 2}));
  EXPECT_EQ(time_closed_form(Q(1), Q(1), OrbitParams<Q>{1, 2}, Q(1)), (TimePoint<Q>{-1, 1}));
  EXPECT_EQ(time_closed_form(Q(3), Q(4), kUnit, Q(0)), (TimePoint<Q>{3, 4}));
  EXPECT_EQ(space_closed_form(Q(0), Q(0), Q(0), kUnit, Q(2)), (SpacePoint<Q>{2, 2}));
  EXPECT_EQ(space_closed_form(Q(0), Q(0), Q(0), OrbitParams<Q>{2, 1}, Q(1)),
            (SpacePoint<Q>{2, 1}));
  EXPECT_EQ(space_closed_form(Q(0), Q(0), Q(1), OrbitParams<Q>{2, 1}, Q(1)),
            (SpacePoint<Q>{2, 2}));
}

TEST(ScalarCoefficients, LinearInParameter) {
  const auto c = scalar_coefficients(Q(3), OrbitParams<Q>{2, 5});
  EXPECT_EQ(c.damping, Q(6));
  EXPECT_EQ(c.power, Q(15));
  const auto d = scalar_coefficients(Q(2), OrbitParams<Q>{3, 5});
  EXPECT_EQ(d.damping, Q(6));
  EXPECT_EQ(d.power, Q(10));
}

TEST(Integrator, TimePictureMatchesClosedForm) {
  const OrbitParams<double> prm{2.0, 0.5};
  const IntegratorConfig<double> cfg{1e-3, 0.0, 10.0, 11};
  const auto tr = integrate(Picture::Time, InitialState<double>{0.25, -1.0, 0.0}, prm, cfg);
  ASSERT_EQ(tr.samples.size(), 11u);
  EXPECT_EQ(tr.samples.back().param, 10.0);
  const auto exact = time_closed_form(0.25, -1.0, prm, 10.0);
  EXPECT_NEAR(tr.samples.back().state[0], exact.q, 1e-10 * std::fmax(1.0, std::fabs(exact.q)));
  EXPECT_NEAR(tr.samples.back().state[1], exact.p, 1e-10 * std::fmax(1.0, std::fabs(exact.p)));
  for (const auto& s : tr.samples) EXPECT_LE(s.drift, 1e-10);
}

TEST(Integrator, SpacePictureMatchesClosedForm) {
  const OrbitParams<double> prm{1.0, 1.0};
  const IntegratorConfig<double> cfg{1e-3, 0.0, 2.0, 3};
  const auto tr = integrate(Picture::Space, InitialState<double>{0.0, 0.0, 0.0}, prm, cfg);
  EXPECT_NEAR(tr.samples.back().state[0], 2.0, 1e-10);
  EXPECT_NEAR(tr.samples.back().state[1], 2.0, 1e-10);
}

TEST(Integrator, ExactOnRationalBackend) {
  // The rhs is polynomial of degree one in the parameter, so RK4 is exact.
  const IntegratorConfig<Q> cfg{Q(1, 4), Q(0), Q(2), 3};
  const auto tr = integrate(Picture::Time, InitialState<Q>{0, 0, 0}, kUnit, cfg);
  EXPECT_EQ(tr.samples.back().state[0], Q(-2));
  EXPECT_EQ(tr.samples.back().state[1], Q(2));
  EXPECT_EQ(tr.samples.back().drift, Q(0));
}

TEST(Integrator, ZeroLengthRangeAndValidation) {
  const IntegratorConfig<double> zero{1e-3, 1.0, 1.0, 11};
  const auto tr = integrate(Picture::Time, InitialState<double>{1, 2, 0}, OrbitParams<double>{1, 1},
                            zero);
  ASSERT_EQ(tr.samples.size(), 1u);
  EXPECT_EQ(tr.samples[0].param, 1.0);
  EXPECT_THROW((void)integrate(Picture::Time, InitialState<double>{}, OrbitParams<double>{1, 1},
                               IntegratorConfig<double>{0.0, 0.0, 1.0, 2}),
               std::invalid_argument);
  EXPECT_THROW((void)integrate(Picture::Time, InitialState<double>{}, OrbitParams<double>{1, 1},
                               IntegratorConfig<double>{1e-3, 1.0, 0.0, 2}),
               std::invalid_argument);
  EXPECT_THROW((void)integrate(Picture::Time, InitialState<double>{}, OrbitParams<double>{0, 1},
                               IntegratorConfig<double>{1e-3, 0.0, 1.0, 2}),
               ChartUndefined);
}

TEST(DualFlow, ConservesPsiWhereChartsFail) {
  const D mu{1, 2, 3, 0, 0};
  const auto tr = sample_dual_flow(Picture::Time, mu, Q(0), Q(4), 5);
  ASSERT_EQ(tr.samples.size(), 5u);
  for (const auto& s : tr.samples) EXPECT_EQ(s.drift, Q(0));
  EXPECT_EQ(tr.samples.back().state[0], Q(1) - Q(3) * Q(4));
}
