#include "aristotle/app/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <sstream>

#include "aristotle/app/io.hpp"
#include "aristotle/kernels.hpp"
#include "aristotle/rng.hpp"

namespace aristotle::app {

namespace {

using dynamics::OrbitParams;
using lie::AlgebraElement;
using lie::Basis;
using lie::GroupElement;
using orbits::DualElement;

bool mutated(const RunConfig& config, const std::string& id) {
  return std::find(config.mutations.begin(), config.mutations.end(), id) != config.mutations.end();
}

/// Collects results; each check draws from its own seeded stream.
class Suite {
 public:
  explicit Suite(const RunConfig& config) : config_(config) {}

  CounterRng stream() { return CounterRng(config_.seed + 0x51ed27ULL * ++streams_); }

  /// trial(i) returns a failure description, or empty on success.
  void run(const std::string& name, std::size_t trials,
           const std::function<std::string(std::size_t)>& trial) {
    CheckResult r{name, true, trials, {}};
    for (std::size_t i = 0; i < trials; ++i) {
      auto failure = trial(i);
      if (!failure.empty()) {
        r.passed = false;
        r.detail = "trial " + std::to_string(i) + ": " + failure;
        break;
      }
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const RunConfig& config_;
  std::uint64_t streams_ = 0;
  std::vector<CheckResult> results_;
};

template <Scalar T>
std::string fmt(const std::vector<T>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += ScalarTraits<T>::to_string(values[i]);
  }
  return out + ")";
}

template <Scalar T, std::size_t N>
std::string fmt(const std::array<T, N>& a) {
  return fmt(std::vector<T>(a.begin(), a.end()));
}

template <Scalar T>
struct Compare {
  double tol;

  bool operator()(const T& a, const T& b) const { return ScalarTraits<T>::near_equal(a, b, tol); }

  template <std::size_t N>
  bool operator()(const std::array<T, N>& a, const std::array<T, N>& b) const {
    for (std::size_t i = 0; i < N; ++i)
      if (!(*this)(a[i], b[i])) return false;
    return true;
  }

  bool operator()(const lie::AdjointMatrix<T>& a, const lie::AdjointMatrix<T>& b) const {
    return (*this)(a.m, b.m);
  }
};

template <Scalar T>
GroupElement<T> random_group(CounterRng& rng) {
  return {rng.scalar<T>(), rng.scalar<T>(), rng.scalar<T>(), rng.scalar<T>(), rng.scalar<T>()};
}

template <Scalar T>
DualElement<T> random_dual(CounterRng& rng) {
  return {rng.scalar<T>(), rng.scalar<T>(), rng.scalar<T>(), rng.scalar<T>(), rng.scalar<T>()};
}

/// Generic point whose k and y are bounded away from zero.
template <Scalar T>
DualElement<T> random_generic(CounterRng& rng) {
  auto mu = random_dual<T>(rng);
  if constexpr (ScalarTraits<T>::exact) {
    mu.k = rng.nonzero_scalar<T>();
    mu.y = rng.nonzero_scalar<T>();
  } else {
    const auto away = [&] {
      const double m = rng.uniform_real(0.5, 3.0);
      return rng.uniform_int(0, 1) ? m : -m;
    };
    mu.k = away();
    mu.y = away();
  }
  return mu;
}

template <Scalar T>
AlgebraElement<T> random_algebra(CounterRng& rng) {
  AlgebraElement<T> a;
  for (auto& c : a.coeffs) c = rng.scalar<T>();
  return a;
}

template <Scalar T>
void algebra_checks(Suite& suite, const RunConfig& config, const Compare<T>& eq) {
  auto tensor = lie::StructureTensor<T>::aristotle();
  if (mutated(config, "Eq2.4")) {
    tensor.set_bracket(Basis::F, Basis::E, AlgebraElement<T>::basis(Basis::F));
  }
  suite.run("jacobi-identity", 1, [&](std::size_t) -> std::string {
    const T r = lie::jacobi_residual(tensor);
    return eq(r, T(0)) ? "" : "residual " + ScalarTraits<T>::to_string(r);
  });
  suite.run("step3-nilpotency", 1, [&](std::size_t) -> std::string {
    const T r = lie::nested_bracket_residual(tensor, 4);
    return eq(r, T(0)) ? "" : "4-fold bracket residual " + ScalarTraits<T>::to_string(r);
  });
  auto rng = suite.stream();
  suite.run("bracket-antisymmetry", config.count, [&](std::size_t) -> std::string {
    if (!tensor.is_antisymmetric()) return "tensor not antisymmetric";
    const auto a = random_algebra<T>(rng);
    const auto b = random_algebra<T>(rng);
    return eq(lie::bracket(a, b, tensor).coeffs, (-lie::bracket(b, a, tensor)).coeffs)
               ? ""
               : "a=" + fmt(a.coeffs) + " b=" + fmt(b.coeffs);
  });
  auto rng2 = suite.stream();
  suite.run("bch-inversion", config.count, [&](std::size_t) -> std::string {
    const auto a = random_algebra<T>(rng2);
    const auto b = random_algebra<T>(rng2);
    return eq(lie::bch(a, b).coeffs, (-lie::bch(-b, -a)).coeffs)
               ? ""
               : "a=" + fmt(a.coeffs) + " b=" + fmt(b.coeffs);
  });
}

template <Scalar T>
void group_checks(Suite& suite, const RunConfig& config, const Compare<T>& eq) {
  const bool printed = mutated(config, "Eq2.6");
  const auto law = [printed](const GroupElement<T>& g, const GroupElement<T>& h) {
    return printed ? lie::compose_printed(g, h) : lie::compose(g, h);
  };
  auto rng = suite.stream();
  suite.run("compose-associativity", config.count, [&](std::size_t) -> std::string {
    const auto g1 = random_group<T>(rng);
    const auto g2 = random_group<T>(rng);
    const auto g3 = random_group<T>(rng);
    const auto left = law(law(g1, g2), g3).as_array();
    const auto right = law(g1, law(g2, g3)).as_array();
    return eq(left, right) ? "" : fmt(left) + " != " + fmt(right);
  });

  auto rng2 = suite.stream();
  suite.run("group-identity-inverse", config.count, [&](std::size_t) -> std::string {
    const auto g = random_group<T>(rng2);
    const auto id = GroupElement<T>::identity().as_array();
    const auto inv = lie::inverse(g);
    if (!eq(law(g, GroupElement<T>::identity()).as_array(), g.as_array())) return "right identity";
    if (!eq(law(GroupElement<T>::identity(), g).as_array(), g.as_array())) return "left identity";
    if (!eq(law(g, inv).as_array(), id)) return "g * g^-1 at g=" + fmt(g.as_array());
    if (!eq(law(inv, g).as_array(), id)) return "g^-1 * g at g=" + fmt(g.as_array());
    return "";
  });

  auto rng3 = suite.stream();
  suite.run("exponential-roundtrip", config.count, [&](std::size_t) -> std::string {
    const auto g = random_group<T>(rng3);
    const auto back = lie::from_single_exponential(lie::to_single_exponential(g));
    return eq(back.as_array(), g.as_array()) ? "" : "g=" + fmt(g.as_array());
  });

  auto rng4 = suite.stream();
  suite.run("quotient-law", config.count, [&](std::size_t) -> std::string {
    const auto g = random_group<T>(rng4);
    const auto h = random_group<T>(rng4);
    const auto c = law(g, h);
    const std::array<T, 3> got = {c.x, c.t, c.zeta};
    const std::array<T, 3> want = {g.x + h.x, g.t + h.t, g.zeta + h.zeta + g.x * h.t};
    return eq(got, want) ? "" : fmt(got) + " != " + fmt(want);
  });

  auto rng5 = suite.stream();
  suite.run("adjoint-homomorphism", config.count, [&](std::size_t) -> std::string {
    const auto g = random_group<T>(rng5);
    const auto h = random_group<T>(rng5);
    return eq(lie::adjoint_of_group(law(g, h)),
              lie::adjoint_of_group(g) * lie::adjoint_of_group(h))
               ? ""
               : "g=" + fmt(g.as_array()) + " h=" + fmt(h.as_array());
  });

  auto rng6 = suite.stream();
  suite.run("adjoint-unipotent", config.count, [&](std::size_t) -> std::string {
    const auto g = random_group<T>(rng6);
    const auto m = lie::adjoint_of_group(g);
    const auto n = m - lie::AdjointMatrix<T>::identity();
    if (!eq((n * n * n).m, lie::AdjointMatrix<T>{}.m)) return "(M - I)^3 != 0";
    const T det = m.determinant();
    return eq(det, T(1)) ? "" : "det " + ScalarTraits<T>::to_string(det);
  });
}

template <Scalar T>
void orbit_checks(Suite& suite, const RunConfig& config, const Compare<T>& eq) {
  auto rng = suite.stream();
  suite.run("coadjoint-left-action", config.count, [&](std::size_t) -> std::string {
    const auto g = random_group<T>(rng);
    const auto h = random_group<T>(rng);
    const auto mu = random_dual<T>(rng);
    const auto a = orbits::coadjoint(lie::compose(g, h), mu).as_array();
    const auto b = orbits::coadjoint(g, orbits::coadjoint(h, mu)).as_array();
    return eq(a, b) ? "" : fmt(a) + " != " + fmt(b);
  });

  auto rng2 = suite.stream();
  suite.run("coadjoint-center-trivial", config.count, [&](std::size_t) -> std::string {
    const auto mu = random_dual<T>(rng2);
    auto g = random_group<T>(rng2);
    const GroupElement<T> central{T(0), T(0), T(0), g.a, g.b};
    if (!eq(orbits::coadjoint(central, mu).as_array(), mu.as_array())) return "central acts";
    const auto with_center = orbits::coadjoint(g, mu).as_array();
    g.a = T(0);
    g.b = T(0);
    return eq(with_center, orbits::coadjoint(g, mu).as_array()) ? "" : "depends on (a, b)";
  });

  auto rng3 = suite.stream();
  suite.run("printed-action-law", config.count, [&](std::size_t) -> std::string {
    const auto g1 = random_group<T>(rng3);
    const auto g2 = random_group<T>(rng3);
    const auto mu = random_dual<T>(rng3);
    const auto twice = orbits::coadjoint_printed(
        g2.x, g2.t, g2.zeta, orbits::coadjoint_printed(g1.x, g1.t, g1.zeta, mu));
    const auto once = orbits::coadjoint_printed(g2.x + g1.x, g2.t + g1.t,
                                                g2.zeta + g1.zeta + g2.x * g1.t, mu);
    return eq(twice.as_array(), once.as_array()) ? "" : fmt(twice.as_array());
  });

  auto rng4 = suite.stream();
  suite.run("convention-map", config.count, [&](std::size_t) -> std::string {
    const auto g = random_group<T>(rng4);
    const auto mu = random_dual<T>(rng4);
    const auto derived = orbits::coadjoint(g, mu).as_array();
    const auto printed = orbits::coadjoint_printed(orbits::kPrintedConvention, g, mu).as_array();
    return eq(derived, printed) ? "" : fmt(derived) + " != " + fmt(printed);
  });

  auto rng5 = suite.stream();
  suite.run("invariants-preserved", config.count, [&](std::size_t) -> std::string {
    const auto g = random_group<T>(rng5);
    const auto mu = random_dual<T>(rng5);
    const auto before = orbits::invariants(mu);
    for (const auto& moved :
         {orbits::coadjoint(g, mu), orbits::coadjoint_printed(g.x, g.t, g.zeta, mu)}) {
      const auto after = orbits::invariants(moved);
      if (!eq(after.k, before.k) || !eq(after.y, before.y)) return "k or y moved";
      if (!eq(after.psi, before.psi)) return "Psi moved";
      if (before.U && (!after.U || !eq(*after.U, *before.U))) return "U moved";
      if (before.pi && (!after.pi || !eq(*after.pi, *before.pi))) return "pi moved";
    }
    return "";
  });

  auto rng6 = suite.stream();
  suite.run("U-equals-pi-v", config.count, [&](std::size_t) -> std::string {
    const auto mu = random_generic<T>(rng6);
    const auto inv = orbits::invariants(mu);
    if (!inv.U || !inv.pi || !inv.v) return "missing invariant at " + fmt(mu.as_array());
    return eq(*inv.U, *inv.pi * *inv.v) ? "" : "at " + fmt(mu.as_array());
  });

  auto rng7 = suite.stream();
  suite.run("orbit-type-constant", config.count, [&](std::size_t i) -> std::string {
    auto mu = random_dual<T>(rng7);
    // Cycle through all classes.
    if (i % 5 == 1) mu.y = T(0);
    if (i % 5 == 2) mu.k = T(0);
    if (i % 5 == 3) mu.k = mu.y = T(0);
    if (i % 5 == 4) mu.k = mu.y = mu.f = T(0);
    const auto g = random_group<T>(rng7);
    const auto moved = orbits::coadjoint(g, mu);
    if (orbits::classify(moved) != orbits::classify(mu)) return "class changed";
    return orbits::orbit_dimension(moved) == orbits::orbit_dimension(mu) ? ""
                                                                          : "dimension changed";
  });

  auto rng8 = suite.stream();
  suite.run("orbit-dimension-representatives", 5, [&](std::size_t i) -> std::string {
    auto mu = random_generic<T>(rng8);
    if (i == 1) mu.y = T(0);
    if (i == 2) mu.k = T(0);
    if (i == 3) {
      mu.k = mu.y = T(0);
      mu.f = rng8.nonzero_scalar<T>();
    }
    if (i == 4) mu = DualElement<T>{};
    const int want = i == 4 ? 0 : 2;
    const int got = orbits::orbit_dimension(mu);
    return got == want ? "" : std::string(orbits::to_string(orbits::classify(mu))) + " has dim " +
                                  std::to_string(got);
  });
}

template <Scalar T>
void dynamics_checks(Suite& suite, const RunConfig& config, const Compare<T>& eq) {
  auto rng = suite.stream();
  suite.run("time-closed-form-vs-flow", config.count, [&](std::size_t) -> std::string {
    const auto mu = random_generic<T>(rng);
    const T t = rng.scalar<T>();
    const OrbitParams<T> params{mu.k, mu.y};
    const auto flowed = dynamics::time_flow(mu, t);
    const auto closed = dynamics::time_closed_form(mu.f / mu.k, mu.p, params, t);
    return eq(std::array<T, 2>{closed.q, closed.p}, std::array<T, 2>{flowed.f / flowed.k, flowed.p})
               ? ""
               : "t=" + ScalarTraits<T>::to_string(t);
  });

  auto rng2 = suite.stream();
  suite.run("space-closed-form-vs-flow", config.count, [&](std::size_t) -> std::string {
    const auto mu = random_generic<T>(rng2);
    const T x = rng2.scalar<T>();
    const OrbitParams<T> params{mu.k, mu.y};
    const auto flowed = dynamics::space_flow(mu, x);
    const auto closed = dynamics::space_closed_form(mu.f / mu.y, mu.e, mu.f, params, x);
    return eq(std::array<T, 2>{closed.tau, closed.e},
              std::array<T, 2>{flowed.f / flowed.y, flowed.e})
               ? ""
               : "x=" + ScalarTraits<T>::to_string(x);
  });

  auto rng3 = suite.stream();
  suite.run("flow-one-parameter-law", config.count, [&](std::size_t) -> std::string {
    const auto mu = random_dual<T>(rng3);
    const T a = rng3.scalar<T>();
    const T b = rng3.scalar<T>();
    if (!eq(dynamics::time_flow(dynamics::time_flow(mu, a), b).as_array(),
            dynamics::time_flow(mu, a + b).as_array()))
      return "time flow";
    if (!eq(dynamics::space_flow(dynamics::space_flow(mu, a), b).as_array(),
            dynamics::space_flow(mu, a + b).as_array()))
      return "space flow";
    return "";
  });

  auto rng4 = suite.stream();
  suite.run("flow-conserves-U-pi", config.count, [&](std::size_t) -> std::string {
    const auto mu = random_generic<T>(rng4);
    const T s = rng4.scalar<T>();
    const auto before = orbits::invariants(mu);
    const auto after_t = orbits::invariants(dynamics::time_flow(mu, s));
    const auto after_x = orbits::invariants(dynamics::space_flow(mu, s));
    if (!eq(*after_t.U, *before.U)) return "U along time flow";
    return eq(*after_x.pi, *before.pi) ? "" : "pi along space flow";
  });

  // A quadratic's symmetric difference quotient equals its derivative
  // exactly, for any spacing.
  const bool printed_time = mutated(config, "Eq3.5b");
  const bool printed_space = mutated(config, "Eq3.13b");
  auto rng5 = suite.stream();
  suite.run("rhs-exact-derivative", config.count, [&](std::size_t) -> std::string {
    const auto mu = random_generic<T>(rng5);
    const OrbitParams<T> params{mu.k, mu.y};
    const T s = rng5.scalar<T>();
    const T q0 = mu.f / mu.k;
    const T tau0 = mu.f / mu.y;
    const T h(1);
    const T two(2);

    const auto ta = dynamics::time_closed_form(q0, mu.p, params, s + h);
    const auto tb = dynamics::time_closed_form(q0, mu.p, params, s - h);
    const auto tn = dynamics::time_closed_form(q0, mu.p, params, s);
    const dynamics::TimeState<T> ts{tn.q, tn.p, s};
    const auto tr = printed_time ? dynamics::time_rhs_printed(ts, params)
                                 : dynamics::time_rhs(ts, params);
    if (!eq(std::array<T, 2>{tr.first, tr.second},
            std::array<T, 2>{(ta.q - tb.q) / (two * h), (ta.p - tb.p) / (two * h)}))
      return "time rhs at t=" + ScalarTraits<T>::to_string(s);

    const auto sa = dynamics::space_closed_form(tau0, mu.e, mu.f, params, s + h);
    const auto sb = dynamics::space_closed_form(tau0, mu.e, mu.f, params, s - h);
    const auto sn = dynamics::space_closed_form(tau0, mu.e, mu.f, params, s);
    const dynamics::SpaceState<T> ss{sn.tau, sn.e, s};
    const auto sr = printed_space ? dynamics::space_rhs_printed(ss, params)
                                  : dynamics::space_rhs(ss, params);
    if (!eq(std::array<T, 2>{sr.first, sr.second},
            std::array<T, 2>{(sa.tau - sb.tau) / (two * h), (sa.e - sb.e) / (two * h)}))
      return "space rhs at x=" + ScalarTraits<T>::to_string(s);
    return "";
  });
}

void float_checks(Suite& suite, const RunConfig& config) {
  constexpr double kFdStep = 1e-4;
  constexpr double kFdTol = 1e-6;
  auto rng = suite.stream();
  suite.run("rhs-finite-difference", config.count, [&](std::size_t) -> std::string {
    const auto mu = random_generic<double>(rng);
    const OrbitParams<double> params{mu.k, mu.y};
    const double s = rng.uniform_real(-3.0, 3.0);
    const double q0 = mu.f / mu.k;
    const double tau0 = mu.f / mu.y;
    const auto ta = dynamics::time_closed_form(q0, mu.p, params, s + kFdStep);
    const auto tb = dynamics::time_closed_form(q0, mu.p, params, s - kFdStep);
    const auto tn = dynamics::time_closed_form(q0, mu.p, params, s);
    const auto tr = dynamics::time_rhs(dynamics::TimeState<double>{tn.q, tn.p, s}, params);
    if (std::fabs(tr.first - (ta.q - tb.q) / (2 * kFdStep)) > kFdTol ||
        std::fabs(tr.second - (ta.p - tb.p) / (2 * kFdStep)) > kFdTol)
      return "time rhs";
    const auto sa = dynamics::space_closed_form(tau0, mu.e, mu.f, params, s + kFdStep);
    const auto sb = dynamics::space_closed_form(tau0, mu.e, mu.f, params, s - kFdStep);
    const auto sn = dynamics::space_closed_form(tau0, mu.e, mu.f, params, s);
    const auto sr = dynamics::space_rhs(dynamics::SpaceState<double>{sn.tau, sn.e, s}, params);
    if (std::fabs(sr.first - (sa.tau - sb.tau) / (2 * kFdStep)) > kFdTol ||
        std::fabs(sr.second - (sa.e - sb.e) / (2 * kFdStep)) > kFdTol)
      return "space rhs";
    return "";
  });

  // Relative error |a - b| / max(1, |b|).
  constexpr double kIntegratorTol = 1e-8;
  const auto rel = [](double a, double b) { return std::fabs(a - b) / std::fmax(1.0, std::fabs(b)); };
  auto rng2 = suite.stream();
  for (const auto picture : {dynamics::Picture::Time, dynamics::Picture::Space}) {
    const std::string name =
        std::string("integrator-") + std::string(dynamics::to_string(picture));
    suite.run(name, 3, [&](std::size_t) -> std::string {
      const auto mu = random_generic<double>(rng2);
      const OrbitParams<double> params{mu.k, mu.y};
      const dynamics::InitialState<double> init =
          picture == dynamics::Picture::Time
              ? dynamics::InitialState<double>{mu.f / mu.k, mu.p, mu.e}
              : dynamics::InitialState<double>{mu.f / mu.y, mu.e, mu.p};
      const dynamics::IntegratorConfig<double> cfg{1e-3, 0.0, 10.0, 11};
      const auto num = dynamics::integrate(picture, init, params, cfg);
      const auto exact = dynamics::sample_closed_form(picture, init, params, 0.0, 10.0, 11);
      for (std::size_t i = 0; i < num.samples.size(); ++i) {
        for (std::size_t c = 0; c < 2; ++c) {
          if (rel(num.samples[i].state[c], exact.samples[i].state[c]) > kIntegratorTol)
            return "state error at sample " + std::to_string(i);
        }
        if (num.samples[i].drift > kIntegratorTol) return "drift at sample " + std::to_string(i);
      }
      return "";
    });
  }

  auto rng3 = suite.stream();
  suite.run("kernel-equivalence", 1, [&](std::size_t) -> std::string {
    kernels::DualBatch batch;
    kernels::ActionBatch action;
    for (std::size_t i = 0; i < config.count; ++i) {
      auto mu = random_dual<double>(rng3);
      if (i % 7 == 0) mu.k = 0.0;
      if (i % 11 == 0) mu.y = 0.0;
      batch.push_back(mu.p, mu.e, mu.f, mu.k, mu.y);
      action.push_back(rng3.uniform_real(-3, 3), rng3.uniform_real(-3, 3), rng3.uniform_real(-3, 3));
    }
    const auto best = kernels::best_isa();
    kernels::DualBatch a, b;
    kernels::coadjoint_printed(action, batch, a, kernels::Isa::Scalar);
    kernels::coadjoint_printed(action, batch, b, best);
    const auto same = [](const std::vector<double>& x, const std::vector<double>& y) {
      return x.size() == y.size() &&
             (x.empty() || std::memcmp(x.data(), y.data(), x.size() * sizeof(double)) == 0);
    };
    if (!same(a.p, b.p) || !same(a.e, b.e) || !same(a.f, b.f)) return "coadjoint differs";
    std::vector<double> u(batch.size()), v(batch.size());
    kernels::psi(batch, u, kernels::Isa::Scalar);
    kernels::psi(batch, v, best);
    if (!same(u, v)) return "psi differs";
    kernels::internal_energy(batch, u, kernels::Isa::Scalar);
    kernels::internal_energy(batch, v, best);
    if (!same(u, v)) return "internal energy differs";
    kernels::internal_momentum(batch, u, kernels::Isa::Scalar);
    kernels::internal_momentum(batch, v, best);
    return same(u, v) ? "" : "internal momentum differs";
  });

  // Float backend invariance through the batched kernels.
  constexpr double kFloatInvTol = 1e-12;
  auto rng4 = suite.stream();
  suite.run("float-invariants", 1, [&](std::size_t) -> std::string {
    kernels::DualBatch batch;
    kernels::ActionBatch action;
    for (std::size_t i = 0; i < config.count; ++i) {
      const auto mu = random_generic<double>(rng4);
      batch.push_back(mu.p, mu.e, mu.f, mu.k, mu.y);
      action.push_back(rng4.uniform_real(-1, 1), rng4.uniform_real(-1, 1), rng4.uniform_real(-1, 1));
    }
    kernels::DualBatch moved;
    kernels::coadjoint_printed(action, batch, moved);
    const std::size_t n = batch.size();
    std::vector<double> before(n), after(n);
    using Fn = void (*)(const kernels::DualBatch&, std::span<double>, kernels::Isa);
    const std::array<std::pair<const char*, Fn>, 3> quantities = {
        std::pair<const char*, Fn>{"Psi", &kernels::psi},
        {"U", &kernels::internal_energy},
        {"pi", &kernels::internal_momentum}};
    for (const auto& [label, fn] : quantities) {
      fn(batch, before, kernels::best_isa());
      fn(moved, after, kernels::best_isa());
      for (std::size_t i = 0; i < n; ++i) {
        if (!ScalarTraits<double>::near_equal(after[i], before[i], kFloatInvTol))
          return std::string(label) + " at point " + std::to_string(i);
      }
    }
    return "";
  });
}

template <Scalar T>
std::vector<CheckResult> checks_for(const RunConfig& config) {
  Suite suite(config);
  const Compare<T> eq{config.tol};
  algebra_checks<T>(suite, config, eq);
  group_checks<T>(suite, config, eq);
  orbit_checks<T>(suite, config, eq);
  dynamics_checks<T>(suite, config, eq);
  float_checks(suite, config);
  return suite.take();
}

}  // namespace

const std::vector<std::string>& known_mutations() {
  static const std::vector<std::string> ids = {"Eq2.4", "Eq2.6", "Eq3.5b", "Eq3.13b"};
  return ids;
}

std::vector<CheckResult> run_checks(const RunConfig& config) {
  for (const auto& m : config.mutations) {
    const auto& ids = known_mutations();
    if (std::find(ids.begin(), ids.end(), m) == ids.end()) {
      throw UsageError("unknown mutation id '" + m + "'");
    }
  }
  if (backend_or(config, Backend::Rational) == Backend::Float) return checks_for<double>(config);
  return checks_for<Rational>(config);
}

CommandResult run_verify(const RunConfig& config) {
  const auto format = format_or(config, Format::Json);
  if (format == Format::Text) throw UsageError("--format text is not available for verify");
  const auto results = run_checks(config);
  const auto failed = static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));

  CommandResult out;
  out.exit_code = failed == 0 ? kExitOk : kExitFailure;
  if (format == Format::Csv) {
    CsvWriter csv;
    csv.row({"check", "passed", "samples", "detail"});
    for (const auto& r : results) {
      csv.row({r.name, r.passed ? "true" : "false", std::to_string(r.samples), r.detail});
    }
    out.body = csv.str();
    return out;
  }
  json doc = json::object();
  doc["command"] = "verify";
  const bool rational = backend_or(config, Backend::Rational) == Backend::Rational;
  doc["backend"] = rational ? "rational" : "float";
  doc["seed"] = config.seed;
  doc["count"] = config.count;
  if (!rational) doc["tolerance"] = config.tol;
  doc["mutations"] = config.mutations;
  json checks = json::array();
  for (const auto& r : results) {
    json c = json::object();
    c["name"] = r.name;
    c["passed"] = r.passed;
    c["samples"] = r.samples;
    c["detail"] = r.detail;
    checks.push_back(std::move(c));
  }
  doc["checks"] = std::move(checks);
  doc["passed"] = failed == 0;
  doc["failed"] = failed;
  out.body = dump(doc);
  return out;
}

}  // namespace aristotle::app
