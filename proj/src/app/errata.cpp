#include <functional>
#include <sstream>

#include "aristotle/app/errata.hpp"
#include "aristotle/app/io.hpp"
#include "aristotle/rng.hpp"

namespace aristotle::app {

namespace {

using dynamics::OrbitParams;
using lie::GroupElement;
using orbits::DualElement;
using Q = Rational;
using Residual = std::vector<std::pair<std::string, Q>>;

/// One evaluated point: what was plugged in, and printed minus derived.
struct Eval {
  json sample = json::object();
  Residual residual;

  [[nodiscard]] bool agrees() const {
    for (const auto& [name, r] : residual)
      if (!r.is_zero()) return false;
    return true;
  }
};

std::string seq(const std::vector<Q>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

std::string tuple(const GroupElement<Q>& g) { return seq({g.x, g.t, g.zeta, g.a, g.b}); }
std::string tuple(const DualElement<Q>& mu) { return seq({mu.p, mu.e, mu.f, mu.k, mu.y}); }

Residual diff(const std::vector<std::string>& names, const std::vector<Q>& printed,
              const std::vector<Q>& derived) {
  Residual out;
  for (std::size_t i = 0; i < names.size(); ++i) out.emplace_back(names[i], printed[i] - derived[i]);
  return out;
}

Residual diff(const GroupElement<Q>& printed, const GroupElement<Q>& derived) {
  return diff({"x", "t", "zeta", "a", "b"}, {printed.x, printed.t, printed.zeta, printed.a, printed.b},
              {derived.x, derived.t, derived.zeta, derived.a, derived.b});
}

Residual diff(const DualElement<Q>& printed, const DualElement<Q>& derived) {
  return diff({"p", "e", "f", "k", "y"}, {printed.p, printed.e, printed.f, printed.k, printed.y},
              {derived.p, derived.e, derived.f, derived.k, derived.y});
}

/// Symmetric difference quotient with unit spacing; exact for quadratics.
Q slope(const std::function<Q(const Q&)>& fn, const Q& at) {
  return (fn(at + Q(1)) - fn(at - Q(1))) / Q(2);
}

struct Spec {
  std::string id;
  std::string printed;
  std::string derived;
  std::string note;
  std::function<Eval(CounterRng&)> random;
  std::optional<Eval> canonical;
  std::optional<Verdict> verdict;  ///< forced verdict for non-numeric defects
};

class Report {
 public:
  explicit Report(const RunConfig& config) : config_(config) {}

  void add(Spec spec) {
    CounterRng rng(config_.seed + 0x9e3779b1ULL * (findings_.size() + 1));
    ErrataFinding f;
    f.id = std::move(spec.id);
    f.printed = std::move(spec.printed);
    f.derived = std::move(spec.derived);
    f.note = std::move(spec.note);
    f.checked = config_.count;

    std::optional<Eval> first;
    std::optional<Eval> first_bad;
    for (std::size_t i = 0; i < config_.count; ++i) {
      Eval e = spec.random(rng);
      if (!e.agrees()) {
        ++f.disagreements;
        if (!first_bad) first_bad = e;
      }
      if (!first) first = std::move(e);
    }
    const Eval& shown = spec.canonical ? *spec.canonical : first_bad ? *first_bad : *first;
    f.sample = shown.sample;
    for (const auto& [name, r] : shown.residual) f.residual.emplace_back(name, r.str());
    const bool clean = f.disagreements == 0 && (!spec.canonical || spec.canonical->agrees());
    f.verdict = spec.verdict.value_or(clean ? Verdict::Confirms : Verdict::Contradicts);
    findings_.push_back(std::move(f));
  }

  std::vector<ErrataFinding> take() { return std::move(findings_); }

 private:
  const RunConfig& config_;
  std::vector<ErrataFinding> findings_;
};

GroupElement<Q> random_group(CounterRng& rng) {
  return {rng.rational(), rng.rational(), rng.rational(), rng.rational(), rng.rational()};
}

DualElement<Q> random_dual(CounterRng& rng) {
  return {rng.rational(), rng.rational(), rng.rational(), rng.rational(), rng.rational()};
}

DualElement<Q> random_generic(CounterRng& rng) {
  auto mu = random_dual(rng);
  mu.k = rng.nonzero_scalar<Q>();
  mu.y = rng.nonzero_scalar<Q>();
  return mu;
}

OrbitParams<Q> random_params(CounterRng& rng) {
  return {rng.nonzero_scalar<Q>(), rng.nonzero_scalar<Q>()};
}

/// G_1 inverse under the quotient law.
std::array<Q, 3> quotient_inverse(const Q& x, const Q& t, const Q& zeta) {
  return {-x, -t, -zeta + x * t};
}

// --- group law ---------------------------------------------------------------

void group_law(Report& report) {
  report.add({"Eq2.5-exp-xK", "g = exp(a Lambda + b Y) exp(t E + zeta F) exp(x K)",
              "g = exp(a Lambda + b Y) exp(t E + zeta F) exp(x P)",
              "K is not a generator of the algebra {P, E, F, Lambda, Y}. Reading K as P "
              "reproduces the printed x-, t-, zeta- and a-components of the product; the "
              "residuals shown are for that reading.",
              [](CounterRng& rng) {
                const auto g = random_group(rng);
                const auto h = random_group(rng);
                const auto d = lie::compose(g, h);
                const auto p = lie::compose_printed(g, h);
                return Eval{json{{"g", tuple(g)}, {"h", tuple(h)}},
                            diff({"x", "t", "zeta", "a"}, {p.x, p.t, p.zeta, p.a},
                                 {d.x, d.t, d.zeta, d.a})};
              },
              std::nullopt, Verdict::Contradicts});

  const GroupElement<Q> g1{Q(1), Q(0), Q(0), Q(0), Q(0)};
  const GroupElement<Q> g2{Q(0), Q(0), Q(1), Q(0), Q(0)};
  const GroupElement<Q> g3{Q(0), Q(1), Q(0), Q(0), Q(0)};
  const auto assoc = [](const GroupElement<Q>& a, const GroupElement<Q>& b,
                        const GroupElement<Q>& c) {
    const auto left = lie::compose_printed(lie::compose_printed(a, b), c);
    const auto right = lie::compose_printed(a, lie::compose_printed(b, c));
    return Eval{json{{"g1", tuple(a)},
                     {"g2", tuple(b)},
                     {"g3", tuple(c)},
                     {"(g1 g2) g3", tuple(left)},
                     {"g1 (g2 g3)", tuple(right)}},
                diff(left, right)};
  };
  report.add({"Eq2.6-associativity", "printed product law, (g1 g2) g3 versus g1 (g2 g3)",
              "associative: (g1 g2) g3 = g1 (g2 g3)",
              "The residual is (g1 g2) g3 - g1 (g2 g3) under the printed law; the derived law "
              "gives zero on every triple.",
              [&](CounterRng& rng) {
                const auto a = random_group(rng);
                const auto b = random_group(rng);
                return assoc(a, b, random_group(rng));
              },
              assoc(g1, g2, g3), std::nullopt});

  const auto left_identity = [](const GroupElement<Q>& g) {
    const auto got = lie::compose_printed(GroupElement<Q>::identity(), g);
    return Eval{json{{"g", tuple(g)}, {"(0, 0, 0, 0, 0) g", tuple(got)}}, diff(got, g)};
  };
  report.add({"Eq2.6-identity", "(0, 0, 0, 0, 0) g under the printed law", "(0, 0, 0, 0, 0) g = g",
              "The printed b-component gives b + zeta t for the left product with the identity, "
              "so (0, 0, 0, 0, 0) is only a right identity.",
              [=](CounterRng& rng) { return left_identity(random_group(rng)); },
              left_identity({Q(0), Q(1), Q(1), Q(0), Q(0)}), std::nullopt});

  const auto component = [](std::string id, std::string printed, std::string derived,
                            std::vector<std::string> names, std::string note) {
    const auto pick = [names](const GroupElement<Q>& g) {
      std::vector<Q> out;
      for (const auto& n : names) {
        if (n == "x") out.push_back(g.x);
        if (n == "t") out.push_back(g.t);
        if (n == "zeta") out.push_back(g.zeta);
        if (n == "a") out.push_back(g.a);
        if (n == "b") out.push_back(g.b);
      }
      return out;
    };
    return Spec{std::move(id), std::move(printed), std::move(derived), std::move(note),
                [names, pick](CounterRng& rng) {
                  const auto g = random_group(rng);
                  const auto h = random_group(rng);
                  return Eval{json{{"g", tuple(g)}, {"h", tuple(h)}},
                              diff(names, pick(lie::compose_printed(g, h)),
                                   pick(lie::compose(g, h)))};
                },
                std::nullopt, std::nullopt};
  };
  report.add(component("Eq2.6-x-t-components", "x + x', t + t'", "x + x', t + t'", {"x", "t"},
                       ""));
  report.add(component("Eq2.6-zeta-component", "zeta + zeta' + x t'", "zeta + zeta' + x t'",
                       {"zeta"}, ""));
  report.add(component("Eq2.6-a-component", "a + a' + x zeta' + x^2 t' / 2",
                       "a + a' + x zeta' + x^2 t' / 2", {"a"}, ""));
  report.add(component("Eq2.6-b-component", "b + b' + zeta' t' + x t'^2 / 2",
                       "b + b' + (zeta t' - t zeta') / 2 - x t t' / 2", {"b"},
                       "Derived by moving exp(xP) past exp(t'E + zeta'F) and merging with the "
                       "truncated BCH series; the printed component breaks associativity."));

  report.add({"Eq2.3-quotient-law", "(x + x', t + t', zeta + zeta' + x t')",
              "image of the product in the quotient by the center",
              "", [](CounterRng& rng) {
                const auto g = random_group(rng);
                const auto h = random_group(rng);
                const auto d = lie::compose(g, h);
                return Eval{json{{"g", tuple(g)}, {"h", tuple(h)}},
                            diff({"x", "t", "zeta"}, {g.x + h.x, g.t + h.t, g.zeta + h.zeta + g.x * h.t},
                                 {d.x, d.t, d.zeta})};
              },
              std::nullopt, std::nullopt});
}

// --- coadjoint action and invariants -----------------------------------------

void coadjoint(Report& report) {
  report.add({"Eq2.8-coadjoint-formula",
              "(p + f t + k (zeta - x t) + y t^2/2, e - f x + k x^2/2 - y zeta, f - k x + y t, k, y)",
              "mu o Ad(g^-1) with Ad computed from the brackets",
              "Agrees with the group element (x, t, zeta) taken as is; the central "
              "coordinates (a, b) act trivially.",
              [](CounterRng& rng) {
                const auto g = random_group(rng);
                const auto mu = random_dual(rng);
                return Eval{json{{"g", tuple(g)}, {"mu", tuple(mu)}},
                            diff(orbits::coadjoint_printed(g.x, g.t, g.zeta, mu),
                                 orbits::coadjoint(g, mu))};
              },
              std::nullopt, std::nullopt});

  report.add({"Eq2.8-action-law", "Ad*(g2) Ad*(g1) mu", "Ad*(g2 g1) mu with the quotient law",
              "The printed formula is a left action.",
              [](CounterRng& rng) {
                const auto g1 = random_group(rng);
                const auto g2 = random_group(rng);
                const auto mu = random_dual(rng);
                const auto twice = orbits::coadjoint_printed(
                    g2.x, g2.t, g2.zeta, orbits::coadjoint_printed(g1.x, g1.t, g1.zeta, mu));
                const auto once = orbits::coadjoint_printed(g2.x + g1.x, g2.t + g1.t,
                                                            g2.zeta + g1.zeta + g2.x * g1.t, mu);
                return Eval{json{{"g1", tuple(g1)}, {"g2", tuple(g2)}, {"mu", tuple(mu)}},
                            diff(twice, once)};
              },
              std::nullopt, std::nullopt});

  // Invariants under the printed action.
  const auto invariant = [](std::string id, std::string printed, bool generic,
                            std::function<Q(const DualElement<Q>&)> fn) {
    return Spec{std::move(id), printed, printed + " is constant on orbits", "",
                [generic, fn](CounterRng& rng) {
                  const auto mu = generic ? random_generic(rng) : random_dual(rng);
                  const auto g = random_group(rng);
                  const auto moved = orbits::coadjoint_printed(g.x, g.t, g.zeta, mu);
                  return Eval{json{{"g", tuple(g)}, {"mu", tuple(mu)}, {"Ad*mu", tuple(moved)}},
                              Residual{{"value", fn(moved) - fn(mu)}}};
                },
                std::nullopt, std::nullopt};
  };
  report.add(invariant("Eq2.8-invariant-k", "k", false, [](const auto& mu) { return mu.k; }));
  report.add(invariant("Eq2.8-invariant-y", "y", false, [](const auto& mu) { return mu.y; }));
  report.add(invariant("Eq2.8-invariant-Psi", "Psi = 2 k e - f^2 + 2 p y", false,
                       [](const auto& mu) { return orbits::psi(mu); }));
  report.add(invariant("Eq2.8-invariant-U", "U = e - k q^2/2 + p v", true,
                       [](const auto& mu) { return *orbits::invariants(mu).U; }));
  report.add(invariant("Eq2.8-invariant-pi", "pi = p - y tau^2/2 + e s", true,
                       [](const auto& mu) { return *orbits::invariants(mu).pi; }));

  report.add({"Eq2.8-U-equals-pi-v", "U = pi v", "U - pi v = 0 for k, y != 0", "",
              [](CounterRng& rng) {
                const auto mu = random_generic(rng);
                const auto inv = orbits::invariants(mu);
                return Eval{json{{"mu", tuple(mu)}, {"U", inv.U->str()}, {"pi", inv.pi->str()}},
                            Residual{{"U", *inv.U - *inv.pi * *inv.v}}};
              },
              std::nullopt, std::nullopt});

  report.add({"Eq2.8-orbit-dimensions", "four orbits, all two dimensional",
              "rank of the orbit tangent map is 2 on every class with (f, k, y) != 0",
              "The points k = y = f = 0 are fixed (dimension 0) and are not among the "
              "four orbit types; they are classified separately as FIXED_POINT.",
              [](CounterRng& rng) {
                auto mu = random_dual(rng);
                switch (rng.uniform_int(0, 3)) {
                  case 0: mu.k = rng.nonzero_scalar<Q>(); mu.y = rng.nonzero_scalar<Q>(); break;
                  case 1: mu.k = rng.nonzero_scalar<Q>(); mu.y = Q(0); break;
                  case 2: mu.k = Q(0); mu.y = rng.nonzero_scalar<Q>(); break;
                  default: mu.k = mu.y = Q(0); mu.f = rng.nonzero_scalar<Q>(); break;
                }
                const int dim = orbits::orbit_dimension(mu);
                return Eval{json{{"mu", tuple(mu)},
                                 {"class", std::string(orbits::to_string(orbits::classify(mu)))},
                                 {"dimension", dim}},
                            Residual{{"dimension", Q(2 - dim)}}};
              },
              std::nullopt, std::nullopt});
}

// --- time picture --------------------------------------------------------------

void time_picture(Report& report) {
  report.add({"Eq3.1-realization", "(p - f t - k zeta + y t^2/2, q + x - v t)",
              "(p, f/k) of Ad* at the quotient inverse (-x, -t, -zeta + x t)",
              "The realization is the printed coadjoint action evaluated at the inverse group "
              "element, so it composes as a right action.",
              [](CounterRng& rng) {
                const auto params = random_params(rng);
                const dynamics::TimePoint<Q> state{rng.rational(), rng.rational()};
                const Q x = rng.rational(), t = rng.rational(), zeta = rng.rational();
                const auto got = dynamics::realization_time(x, t, zeta, state, params);
                const DualElement<Q> mu{state.p, rng.rational(), params.k * state.q, params.k,
                                        params.y};
                const auto [ix, it, iz] = quotient_inverse(x, t, zeta);
                const auto moved = orbits::coadjoint_printed(ix, it, iz, mu);
                return Eval{json{{"g", seq({x, t, zeta})},
                                 {"(p, q)", seq({state.p, state.q})},
                                 {"(k, y)", seq({params.k, params.y})}},
                            diff({"p", "q"}, {got.p, got.q}, {moved.p, moved.f / moved.k})};
              },
              std::nullopt, std::nullopt});

  report.add({"Eq3.3-closed-form", "p(t) = p0 - f t + y t^2/2, q(t) = q0 - v t",
              "(p, f/k) along the coadjoint flow of exp(-tE)",
              "Also equals the realization at (0, t, 0).",
              [](CounterRng& rng) {
                const auto mu = random_generic(rng);
                const Q t = rng.rational();
                const OrbitParams<Q> params{mu.k, mu.y};
                const Q q0 = mu.f / mu.k;
                const auto closed = dynamics::time_closed_form(q0, mu.p, params, t);
                const auto flowed = dynamics::time_flow(mu, t);
                const auto real = dynamics::realization_time(Q(0), t, Q(0), dynamics::TimePoint<Q>{q0, mu.p}, params);
                return Eval{json{{"mu0", tuple(mu)}, {"t", t.str()}},
                            diff({"p", "q", "p (realization)", "q (realization)"},
                                 {closed.p, closed.q, real.p, real.q},
                                 {flowed.p, flowed.f / flowed.k, flowed.p, flowed.f / flowed.k})};
              },
              std::nullopt, std::nullopt});

  report.add({"Eq3.3-general-element", "Phi(x, t, zeta)(p0, q0) = (p(t) - k zeta, q(t) + x)",
              "the realization at (x, t, zeta) applied to (p0, q0)", "",
              [](CounterRng& rng) {
                const auto params = random_params(rng);
                const dynamics::TimePoint<Q> state{rng.rational(), rng.rational()};
                const Q x = rng.rational(), t = rng.rational(), zeta = rng.rational();
                const auto real = dynamics::realization_time(x, t, zeta, state, params);
                const auto closed = dynamics::time_closed_form(state.q, state.p, params, t);
                return Eval{json{{"g", seq({x, t, zeta})},
                                 {"(p0, q0)", seq({state.p, state.q})},
                                 {"(k, y)", seq({params.k, params.y})}},
                            diff({"p", "q"}, {closed.p - params.k * zeta, closed.q + x},
                                 {real.p, real.q})};
              },
              std::nullopt, std::nullopt});

  // Derivative of the trajectory through (q, p) at time t.
  const auto derived_time = [](const Q& q, const Q& t, const OrbitParams<Q>& params) {
    const Q q0 = q + params.y / params.k * t;
    const Q p0(0);
    const Q dq = slope([&](const Q& s) { return dynamics::time_closed_form(q0, p0, params, s).q; }, t);
    const Q dp = slope([&](const Q& s) { return dynamics::time_closed_form(q0, p0, params, s).p; }, t);
    return std::pair{dq, dp};
  };

  report.add({"Eq3.5a-rhs", "dq/dt = -v", "d/dt of q(t) = q0 - v t", "",
              [=](CounterRng& rng) {
                const auto params = random_params(rng);
                const Q q = rng.rational(), t = rng.rational();
                const auto printed = dynamics::time_rhs_printed(dynamics::TimeState<Q>{q, Q(0), t}, params);
                return Eval{json{{"q", q.str()}, {"t", t.str()}, {"k", params.k.str()},
                                 {"y", params.y.str()}},
                            Residual{{"dq/dt", printed.first - derived_time(q, t, params).first}}};
              },
              std::nullopt, std::nullopt});

  const auto rhs_eval = [=](const Q& q, const Q& t, const OrbitParams<Q>& params) {
    const auto printed = dynamics::time_rhs_printed(dynamics::TimeState<Q>{q, Q(0), t}, params);
    const auto derived = derived_time(q, t, params);
    return Eval{json{{"q", q.str()}, {"t", t.str()}, {"k", params.k.str()}, {"y", params.y.str()},
                     {"printed dp/dt", printed.second.str()}, {"derived dp/dt", derived.second.str()}},
                Residual{{"dp/dt", printed.second - derived.second}}};
  };
  report.add({"Eq3.5b-rhs", "dp/dt = -k q + c(t) dq/dt with c(t) = k t, i.e. -k q - y t",
              "dp/dt = -k q (derivative of the closed form)",
              "Residual is -y t; the printed equation contradicts the printed p(t).",
              [=](CounterRng& rng) {
                const auto params = random_params(rng);
                return rhs_eval(rng.rational(), rng.nonzero_scalar<Q>(), params);
              },
              rhs_eval(Q(0), Q(1), {Q(1), Q(1)}), std::nullopt});

  const auto hamilton_time = [=](const Q& q, const Q& p, const Q& t, const OrbitParams<Q>& params) {
    const Q dq = slope([&](const Q& s) { return dynamics::hamiltonian_time(s, q, t, params); }, p);
    const Q dp = -slope([&](const Q& s) { return dynamics::hamiltonian_time(p, s, t, params); }, q);
    const auto derived = derived_time(q, t, params);
    const auto printed = dynamics::time_rhs_printed(dynamics::TimeState<Q>{q, p, t}, params);
    return Eval{json{{"q", q.str()}, {"p", p.str()}, {"t", t.str()}, {"k", params.k.str()},
                     {"y", params.y.str()}, {"hamilton dp/dt", dp.str()},
                     {"derived dp/dt", derived.second.str()},
                     {"printed dp/dt", printed.second.str()}},
                Residual{{"dq/dt", dq - derived.first}, {"dp/dt", dp - derived.second}}};
  };
  report.add({"Eq3.6-hamilton-residual",
              "H = k q^2/2 - (p + c(t) q) v; dq/dt = dH/dp, dp/dt = -dH/dq gives -k q + y t",
              "dp/dt = -k q",
              "Hamilton's equations for the printed H match neither the printed rhs (-k q - y t) "
              "nor the flow (-k q); residual against the flow is +y t.",
              [=](CounterRng& rng) {
                const auto params = random_params(rng);
                const Q q = rng.rational(), p = rng.rational();
                return hamilton_time(q, p, rng.nonzero_scalar<Q>(), params);
              },
              hamilton_time(Q(0), Q(0), Q(1), {Q(1), Q(1)}), std::nullopt});
}

// --- space picture -------------------------------------------------------------

void space_picture(Report& report) {
  report.add({"Eq3.8-realization", "(e + f x + y (zeta - x t) + k x^2/2, tau - t + s x)",
              "(e, f/y) of Ad* at the quotient inverse (-x, -t, -zeta + x t)",
              "As for the time realization, this is a right action.",
              [](CounterRng& rng) {
                const auto params = random_params(rng);
                const dynamics::SpacePoint<Q> state{rng.rational(), rng.rational()};
                const Q x = rng.rational(), t = rng.rational(), zeta = rng.rational();
                const auto got = dynamics::realization_space(x, t, zeta, state, params);
                const DualElement<Q> mu{rng.rational(), state.e, params.y * state.tau, params.k,
                                        params.y};
                const auto [ix, it, iz] = quotient_inverse(x, t, zeta);
                const auto moved = orbits::coadjoint_printed(ix, it, iz, mu);
                return Eval{json{{"g", seq({x, t, zeta})},
                                 {"(e, tau)", seq({state.e, state.tau})},
                                 {"(k, y)", seq({params.k, params.y})}},
                            diff({"e", "tau"}, {got.e, got.tau}, {moved.e, moved.f / moved.y})};
              },
              std::nullopt, std::nullopt});

  const auto general = [](const Q& x, const Q& t, const Q& zeta, const dynamics::SpacePoint<Q>& s0,
                          const OrbitParams<Q>& params) {
    const Q f0 = params.y * s0.tau;
    const auto closed = dynamics::space_closed_form(s0.tau, s0.e, f0, params, x);
    const auto real = dynamics::realization_space(x, t, zeta, s0, params);
    return Eval{json{{"g", seq({x, t, zeta})}, {"(e0, tau0)", seq({s0.e, s0.tau})},
                     {"(k, y)", seq({params.k, params.y})},
                     {"printed e", (closed.e + params.y * zeta).str()}, {"realization e", real.e.str()}},
                diff({"e", "tau"}, {closed.e + params.y * zeta, closed.tau - t}, {real.e, real.tau})};
  };
  report.add({"Eq3.10-general-element", "Phi(x, t, zeta)(e0, tau0) = (e(x) + y zeta, tau(x) - t)",
              "the realization at (x, t, zeta) gives (e(x) + y zeta - y x t, tau(x) - t)",
              "The printed energy drops the -y x t term that the realization itself produces.",
              [=](CounterRng& rng) {
                const auto params = random_params(rng);
                const dynamics::SpacePoint<Q> s0{rng.rational(), rng.rational()};
                const Q x = rng.nonzero_scalar<Q>(), t = rng.nonzero_scalar<Q>();
                return general(x, t, rng.rational(), s0, params);
              },
              general(Q(1), Q(1), Q(0), {Q(0), Q(0)}, {Q(1), Q(1)}), std::nullopt});

  report.add({"Eq3.11-closed-form", "e(x) = e0 + f x + k x^2/2, tau(x) = tau0 + s x",
              "(e, f/y) along the coadjoint flow of exp(-xP)", "",
              [](CounterRng& rng) {
                const auto mu = random_generic(rng);
                const Q x = rng.rational();
                const OrbitParams<Q> params{mu.k, mu.y};
                const auto closed = dynamics::space_closed_form(mu.f / mu.y, mu.e, mu.f, params, x);
                const auto flowed = dynamics::space_flow(mu, x);
                return Eval{json{{"mu0", tuple(mu)}, {"x", x.str()}},
                            diff({"e", "tau"}, {closed.e, closed.tau},
                                 {flowed.e, flowed.f / flowed.y})};
              },
              std::nullopt, std::nullopt});

  report.add({"Eq3.12-vector-field-P", "d/dx + k (q + x) d/de + s d/dtau",
              "d/dx + (f0 + k x) d/de + s d/dtau along the space flow",
              "q is a time-chart symbol; it is read through f = k q, so k (q + x) = f0 + k x.",
              [](CounterRng& rng) {
                const auto mu = random_generic(rng);
                const Q x = rng.rational();
                const Q q = mu.f / mu.k;
                const Q de = slope([&](const Q& s) { return dynamics::space_flow(mu, s).e; }, x);
                const Q dtau =
                    slope([&](const Q& s) { return dynamics::space_flow(mu, s).f / mu.y; }, x);
                return Eval{json{{"mu0", tuple(mu)}, {"x", x.str()}},
                            Residual{{"d/de", mu.k * (q + x) - de}, {"d/dtau", mu.k / mu.y - dtau}}};
              },
              std::nullopt, std::nullopt});

  // Derivative of the trajectory through (tau, e) at position x.
  const auto derived_space = [](const Q& tau, const Q& x, const OrbitParams<Q>& params) {
    const Q tau0 = tau - params.k / params.y * x;
    const Q f0 = params.y * tau0;
    const auto at = [&](const Q& s) { return dynamics::space_closed_form(tau0, Q(0), f0, params, s); };
    return std::pair{slope([&](const Q& s) { return at(s).tau; }, x),
                     slope([&](const Q& s) { return at(s).e; }, x)};
  };

  report.add({"Eq3.13a-rhs", "dtau/dx = s", "d/dx of tau(x) = tau0 + s x", "",
              [=](CounterRng& rng) {
                const auto params = random_params(rng);
                const Q tau = rng.rational(), x = rng.rational();
                const auto printed = dynamics::space_rhs_printed(dynamics::SpaceState<Q>{tau, Q(0), x}, params);
                return Eval{json{{"tau", tau.str()}, {"x", x.str()}, {"k", params.k.str()},
                                 {"y", params.y.str()}},
                            Residual{{"dtau/dx", printed.first - derived_space(tau, x, params).first}}};
              },
              std::nullopt, std::nullopt});

  const auto rhs_eval = [=](const Q& tau, const Q& x, const OrbitParams<Q>& params) {
    const auto printed = dynamics::space_rhs_printed(dynamics::SpaceState<Q>{tau, Q(0), x}, params);
    const auto derived = derived_space(tau, x, params);
    return Eval{json{{"tau", tau.str()}, {"x", x.str()}, {"k", params.k.str()},
                     {"y", params.y.str()}, {"printed de/dx", printed.second.str()},
                     {"derived de/dx", derived.second.str()}},
                Residual{{"de/dx", printed.second - derived.second}}};
  };
  report.add({"Eq3.13b-rhs", "de/dx = y tau + W(x) dtau/dx with W(x) = y x, i.e. y tau + k x",
              "de/dx = y tau (derivative of the closed form)",
              "Residual is k x; the printed equation contradicts the printed e(x).",
              [=](CounterRng& rng) {
                const auto params = random_params(rng);
                return rhs_eval(rng.rational(), rng.nonzero_scalar<Q>(), params);
              },
              rhs_eval(Q(0), Q(1), {Q(1), Q(1)}), std::nullopt});

  const auto hamilton_space = [=](const Q& tau, const Q& e, const Q& x, const OrbitParams<Q>& params) {
    const Q dtau = -slope([&](const Q& s) { return dynamics::hamiltonian_space(s, tau, x, params); }, e);
    const Q de = slope([&](const Q& s) { return dynamics::hamiltonian_space(e, s, x, params); }, tau);
    const auto derived = derived_space(tau, x, params);
    const auto printed = dynamics::space_rhs_printed(dynamics::SpaceState<Q>{tau, e, x}, params);
    return Eval{json{{"tau", tau.str()}, {"e", e.str()}, {"x", x.str()}, {"k", params.k.str()},
                     {"y", params.y.str()}, {"hamilton de/dx", de.str()},
                     {"derived de/dx", derived.second.str()},
                     {"printed de/dx", printed.second.str()}},
                Residual{{"dtau/dx", dtau - derived.first}, {"de/dx", de - derived.second}}};
  };
  report.add({"Eq3.17-hamilton-residual",
              "Pi = y tau^2/2 - (e - W(x) tau) s; dtau/dx = -dPi/de, de/dx = dPi/dtau gives y tau + k x",
              "de/dx = y tau",
              "With this sign convention (the one that reproduces dtau/dx = s) Hamilton's "
              "equations for Pi reproduce the printed de/dx exactly, and both differ from the "
              "flow by k x.",
              [=](CounterRng& rng) {
                const auto params = random_params(rng);
                const Q tau = rng.rational(), e = rng.rational();
                return hamilton_space(tau, e, rng.nonzero_scalar<Q>(), params);
              },
              hamilton_space(Q(0), Q(0), Q(1), {Q(1), Q(1)}), std::nullopt});
}

// --- summary table ------------------------------------------------------------

void table(Report& report) {
  const auto tau_sign = [](const Q& tau0, const Q& x, const OrbitParams<Q>& params) {
    const Q s = params.k / params.y;
    const auto derived = dynamics::space_closed_form(tau0, Q(0), params.y * tau0, params, x);
    return Eval{json{{"tau0", tau0.str()}, {"x", x.str()}, {"k", params.k.str()},
                     {"y", params.y.str()}, {"printed tau", (tau0 - s * x).str()},
                     {"derived tau", derived.tau.str()}},
                Residual{{"tau", tau0 - s * x - derived.tau}}};
  };
  report.add({"Table-tau-sign", "tau(x) = tau0 - s x", "tau(x) = tau0 + s x",
              "The text's tau(x) = tau0 + s x is adopted; it agrees with e(x) and f = y tau.",
              [=](CounterRng& rng) {
                const auto params = random_params(rng);
                return tau_sign(rng.rational(), rng.nonzero_scalar<Q>(), params);
              },
              tau_sign(Q(0), Q(1), {Q(1), Q(1)}), std::nullopt});

  const auto yank_only = [](const DualElement<Q>& mu) {
    const auto inv = orbits::invariants(mu);
    json sample{{"mu", tuple(mu)}, {"class", std::string(orbits::to_string(orbits::classify(mu)))},
                {"U", inv.U ? json(inv.U->str()) : json(nullptr)},
                {"pi", inv.pi ? json(inv.pi->str()) : json(nullptr)}};
    return Eval{std::move(sample), {}};
  };
  report.add({"Table-O_yU-header", "O_(y,U)", "O_(y,pi)",
              "The column lists the invariant pi = p - y tau^2/2, and U is undefined when "
              "k = 0.",
              [=](CounterRng& rng) {
                auto mu = random_dual(rng);
                mu.k = Q(0);
                mu.y = rng.nonzero_scalar<Q>();
                return yank_only(mu);
              },
              yank_only({Q(1), Q(1), Q(1), Q(0), Q(1)}), Verdict::Contradicts});

  const auto yank_motion = [](const DualElement<Q>& mu, const Q& s) {
    const Q tau = mu.f / mu.y;
    const Q dp = slope([&](const Q& u) { return dynamics::time_flow(mu, u).p; }, s);
    const Q de = slope([&](const Q& u) { return dynamics::space_flow(mu, u).e; }, s);
    return Eval{json{{"mu", tuple(mu)}, {"param", s.str()}, {"printed dp/dt", (mu.y * tau).str()},
                     {"time flow dp/dt", dp.str()}, {"space flow de/dx", de.str()}},
                Residual{{"dp/dt", mu.y * tau - dp}, {"de/dx (read for dp/dt)", mu.y * tau - de}}};
  };
  report.add({"Table-O_yU-motion", "dp/dt = y tau, dq/dt = 0",
              "de/dx = y tau, dtau/dx = 0 (space flow with k = 0)",
              "Along the time flow dp/dt = -f = -y tau; the printed equation holds once read "
              "as de/dx, the space-picture equation of this column.",
              [=](CounterRng& rng) {
                auto mu = random_dual(rng);
                mu.k = Q(0);
                mu.y = rng.nonzero_scalar<Q>();
                mu.f = rng.nonzero_scalar<Q>();
                return yank_motion(mu, rng.rational());
              },
              yank_motion({Q(0), Q(0), Q(1), Q(0), Q(1)}, Q(0)), std::nullopt});

  report.add({"Table-degenerate-evolution",
              "O_(k,U): p0 - f t, q0; O_(y,U): e0 + f x, tau0; O_f: p0 - f t",
              "time flow (y = 0, and k = y = 0) and space flow (k = 0)", "",
              [](CounterRng& rng) {
                auto mu = random_dual(rng);
                const Q s = rng.rational();
                Residual r;
                json sample{{"param", s.str()}};
                switch (rng.uniform_int(0, 2)) {
                  case 0: {
                    mu.k = rng.nonzero_scalar<Q>();
                    mu.y = Q(0);
                    const auto m = dynamics::time_flow(mu, s);
                    r = diff({"p", "q"}, {mu.p - mu.f * s, mu.f / mu.k}, {m.p, m.f / m.k});
                    break;
                  }
                  case 1: {
                    mu.k = Q(0);
                    mu.y = rng.nonzero_scalar<Q>();
                    const auto m = dynamics::space_flow(mu, s);
                    r = diff({"e", "tau"}, {mu.e + mu.f * s, mu.f / mu.y}, {m.e, m.f / m.y});
                    break;
                  }
                  default: {
                    mu.k = mu.y = Q(0);
                    const auto m = dynamics::time_flow(mu, s);
                    r = diff({"p", "f"}, {mu.p - mu.f * s, mu.f}, {m.p, m.f});
                    break;
                  }
                }
                sample["mu0"] = tuple(mu);
                return Eval{std::move(sample), std::move(r)};
              },
              std::nullopt, std::nullopt});

  report.add({"Table-degenerate-invariants",
              "O_(k,U): U = e - k q^2/2; O_(y,U): pi = p - y tau^2/2",
              "U with y = 0 and pi with k = 0 from the general invariants", "",
              [](CounterRng& rng) {
                auto mu = random_dual(rng);
                if (rng.uniform_int(0, 1) == 0) {
                  mu.k = rng.nonzero_scalar<Q>();
                  mu.y = Q(0);
                  const Q q = mu.f / mu.k;
                  return Eval{json{{"mu", tuple(mu)}},
                              Residual{{"U", mu.e - mu.k * q * q / Q(2) - *orbits::invariants(mu).U}}};
                }
                mu.k = Q(0);
                mu.y = rng.nonzero_scalar<Q>();
                const Q tau = mu.f / mu.y;
                return Eval{json{{"mu", tuple(mu)}},
                            Residual{{"pi", mu.p - mu.y * tau * tau / Q(2) - *orbits::invariants(mu).pi}}};
              },
              std::nullopt, std::nullopt});

  report.add({"Table-degenerate-hamiltonians",
              "O_(k,U): H = k q^2/2; O_(y,U): Pi = y tau^2/2; O_f: H = f q",
              "Hamilton's equations against the degenerate flows",
              "dp/dt = -dH/dq and de/dx = dPi/dtau.",
              [](CounterRng& rng) {
                auto mu = random_dual(rng);
                const Q s = rng.rational();
                switch (rng.uniform_int(0, 2)) {
                  case 0: {
                    mu.k = rng.nonzero_scalar<Q>();
                    mu.y = Q(0);
                    const Q q = mu.f / mu.k;
                    const Q dp = slope([&](const Q& u) { return dynamics::time_flow(mu, u).p; }, s);
                    return Eval{json{{"mu0", tuple(mu)}, {"t", s.str()}},
                                Residual{{"dp/dt", -mu.k * q - dp}}};
                  }
                  case 1: {
                    mu.k = Q(0);
                    mu.y = rng.nonzero_scalar<Q>();
                    const Q de = slope([&](const Q& u) { return dynamics::space_flow(mu, u).e; }, s);
                    return Eval{json{{"mu0", tuple(mu)}, {"x", s.str()}},
                                Residual{{"de/dx", mu.y * (mu.f / mu.y) - de}}};
                  }
                  default: {
                    mu.k = mu.y = Q(0);
                    const Q dp = slope([&](const Q& u) { return dynamics::time_flow(mu, u).p; }, s);
                    return Eval{json{{"mu0", tuple(mu)}, {"t", s.str()}},
                                Residual{{"dp/dt", -mu.f - dp}}};
                  }
                }
              },
              std::nullopt, std::nullopt});
}

json finding_json(const ErrataFinding& f) {
  json out = json::object();
  out["id"] = f.id;
  out["verdict"] = std::string(to_string(f.verdict));
  out["printed"] = f.printed;
  out["derived"] = f.derived;
  out["sample"] = f.sample;
  json residual = json::object();
  for (const auto& [name, r] : f.residual) residual[name] = r;
  out["residual"] = std::move(residual);
  out["checked"] = f.checked;
  out["disagreements"] = f.disagreements;
  out["note"] = f.note;
  return out;
}

std::string render_text(const RunConfig& config, const std::vector<ErrataFinding>& findings) {
  std::ostringstream os;
  std::size_t contradicts = 0;
  for (const auto& f : findings) contradicts += f.verdict == Verdict::Contradicts;
  os << "Errata report: " << findings.size() << " findings, " << contradicts
     << " contradictions (seed " << config.seed << ", " << config.count
     << " random points each)\n";
  for (const auto& a : errata_assumptions()) os << "Assumption: " << a << "\n";
  for (const auto& f : findings) {
    os << "\n[" << to_string(f.verdict) << "] " << f.id << "\n";
    os << "  printed:  " << f.printed << "\n";
    os << "  derived:  " << f.derived << "\n";
    os << "  sample:  ";
    for (const auto& [key, value] : f.sample.items()) {
      os << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    os << "\n  residual:";
    if (f.residual.empty()) os << " (none)";
    for (const auto& [name, r] : f.residual) os << " " << name << "=" << r;
    os << "\n  checked:  " << f.checked << " random points, " << f.disagreements << " disagree\n";
    if (!f.note.empty()) os << "  note:     " << f.note << "\n";
  }
  return os.str();
}

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::Confirms ? "CONFIRMS" : "CONTRADICTS"; }

const std::vector<std::string>& errata_assumptions() {
  static const std::vector<std::string> items = {
      "K in exp(xK) is read as the space-translation generator P",
      "time evolution is the coadjoint flow of exp(-tE), space evolution that of exp(-xP)",
      "Hamilton's equations: dq/dt = dH/dp, dp/dt = -dH/dq; dtau/dx = -dPi/de, de/dx = dPi/dtau",
  };
  return items;
}

std::vector<ErrataFinding> errata_findings(const RunConfig& config) {
  Report report(config);
  group_law(report);
  coadjoint(report);
  time_picture(report);
  space_picture(report);
  table(report);
  return report.take();
}

CommandResult run_errata(const RunConfig& config) {
  if (backend_or(config, Backend::Rational) != Backend::Rational) {
    throw UsageError("errata is evaluated exactly; --backend float is not supported");
  }
  const auto findings = errata_findings(config);
  const auto format = format_or(config, Format::Json);
  if (format == Format::Text) return {kExitOk, render_text(config, findings)};

  if (format == Format::Csv) {
    CsvWriter csv;
    csv.row({"id", "verdict", "printed", "derived", "residual", "checked", "disagreements"});
    for (const auto& f : findings) {
      std::string residual;
      for (const auto& [name, r] : f.residual) {
        if (!residual.empty()) residual += "; ";
        residual += name + "=" + r;
      }
      csv.row({f.id, std::string(to_string(f.verdict)), f.printed, f.derived, residual,
               std::to_string(f.checked), std::to_string(f.disagreements)});
    }
    return {kExitOk, csv.str()};
  }

  json doc = json::object();
  doc["command"] = "errata";
  doc["seed"] = config.seed;
  doc["count"] = config.count;
  doc["assumptions"] = errata_assumptions();
  std::size_t contradicts = 0;
  for (const auto& f : findings) contradicts += f.verdict == Verdict::Contradicts;
  doc["summary"] = {{"findings", findings.size()},
                    {"confirms", findings.size() - contradicts},
                    {"contradicts", contradicts}};
  json arr = json::array();
  for (const auto& f : findings) arr.push_back(finding_json(f));
  doc["findings"] = std::move(arr);
  return {kExitOk, dump(doc)};
}

}  // namespace aristotle::app
