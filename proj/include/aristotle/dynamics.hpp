#pragma once

// Time evolution in the (q, p) chart and space evolution in the (tau, e)
// chart, both realized as one-parameter coadjoint flows generated by -E and
// -P respectively.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aristotle/orbits.hpp"

namespace aristotle::dynamics {

using orbits::DualElement;

/// Raised when a chart needs a division that does not exist (k = 0 for the
/// (q, p) chart, y = 0 for the (tau, e) chart). The dual-space flows are
/// total and should be used instead.
class ChartUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Picture { Time, Space };

constexpr std::string_view to_string(Picture p) { return p == Picture::Time ? "time" : "space"; }

template <Scalar T>
struct OrbitParams {
  T k{};
  T y{};

  [[nodiscard]] std::optional<T> velocity() const {
    if (k == T(0)) return std::nullopt;
    return y / k;
  }
  [[nodiscard]] std::optional<T> slowness() const {
    if (y == T(0)) return std::nullopt;
    return k / y;
  }
};

template <Scalar T>
struct TimeState {
  T q{};
  T p{};
  T t{};
};

template <Scalar T>
struct SpaceState {
  T tau{};
  T e{};
  T x{};
};

template <Scalar T>
struct TimePoint {
  T q{};
  T p{};
  friend bool operator==(const TimePoint&, const TimePoint&) = default;
};

template <Scalar T>
struct SpacePoint {
  T tau{};
  T e{};
  friend bool operator==(const SpacePoint&, const SpacePoint&) = default;
};

template <Scalar T>
struct Rates {
  T first{};   ///< dq/dt or dtau/dx
  T second{};  ///< dp/dt or de/dx
  friend bool operator==(const Rates&, const Rates&) = default;
};

template <Scalar T>
struct Coefficients {
  T damping{};  ///< c = k * param
  T power{};    ///< W = y * param
};

namespace detail {

template <Scalar T>
T require_velocity(const OrbitParams<T>& params) {
  if (params.k == T(0)) {
    throw ChartUndefined("time chart (q, p) needs k != 0; use the dual-space flow");
  }
  return params.y / params.k;
}

template <Scalar T>
T require_slowness(const OrbitParams<T>& params) {
  if (params.y == T(0)) {
    throw ChartUndefined("space chart (tau, e) needs y != 0; use the dual-space flow");
  }
  return params.k / params.y;
}

}  // namespace detail

// --- time picture ----------------------------------------------------------

template <Scalar T>
DualElement<T> time_flow(const DualElement<T>& mu0, const T& t) {
  return orbits::coadjoint_printed(T(0), -t, T(0), mu0);
}

template <Scalar T>
TimePoint<T> time_closed_form(const T& q0, const T& p0, const OrbitParams<T>& params, const T& t) {
  const T v = detail::require_velocity(params);
  return {q0 - v * t, p0 - params.k * q0 * t + params.y * t * t * half<T>()};
}

template <Scalar T>
Rates<T> time_rhs(const TimeState<T>& state, const OrbitParams<T>& params) {
  const T v = detail::require_velocity(params);
  return {-v, -params.k * state.q};
}

/// dp/dt = -k q + c(t) dq/dt with c(t) = k t, as printed.
template <Scalar T>
Rates<T> time_rhs_printed(const TimeState<T>& state, const OrbitParams<T>& params) {
  const T v = detail::require_velocity(params);
  const T c = params.k * state.t;
  return {-v, -params.k * state.q + c * (-v)};
}

template <Scalar T>
T hamiltonian_time(const T& p, const T& q, const T& t, const OrbitParams<T>& params) {
  const T v = params.k == T(0) ? T(0) : params.y / params.k;
  return half<T>() * params.k * q * q - (p + params.k * t * q) * v;
}

/// Symplectic realization on (p, q) for group parameters (x, t, zeta).
template <Scalar T>
TimePoint<T> realization_time(const T& x, const T& t, const T& zeta, const TimePoint<T>& state,
                              const OrbitParams<T>& params) {
  const T v = detail::require_velocity(params);
  const T f = params.k * state.q;
  return {state.q + x - v * t,
          state.p - f * t - params.k * zeta + params.y * t * t * half<T>()};
}

// --- space picture ---------------------------------------------------------

template <Scalar T>
DualElement<T> space_flow(const DualElement<T>& mu0, const T& x) {
  return orbits::coadjoint_printed(-x, T(0), T(0), mu0);
}

template <Scalar T>
SpacePoint<T> space_closed_form(const T& tau0, const T& e0, const T& f0,
                                const OrbitParams<T>& params, const T& x) {
  const T s = detail::require_slowness(params);
  return {tau0 + s * x, e0 + f0 * x + params.k * x * x * half<T>()};
}

template <Scalar T>
Rates<T> space_rhs(const SpaceState<T>& state, const OrbitParams<T>& params) {
  const T s = detail::require_slowness(params);
  return {s, params.y * state.tau};
}

/// de/dx = y tau + W(x) dtau/dx with W(x) = y x, as printed.
template <Scalar T>
Rates<T> space_rhs_printed(const SpaceState<T>& state, const OrbitParams<T>& params) {
  const T s = detail::require_slowness(params);
  const T w = params.y * state.x;
  return {s, params.y * state.tau + w * s};
}

template <Scalar T>
T hamiltonian_space(const T& e, const T& tau, const T& x, const OrbitParams<T>& params) {
  const T s = params.y == T(0) ? T(0) : params.k / params.y;
  return half<T>() * params.y * tau * tau - (e - params.y * x * tau) * s;
}

template <Scalar T>
SpacePoint<T> realization_space(const T& x, const T& t, const T& zeta, const SpacePoint<T>& state,
                                const OrbitParams<T>& params) {
  const T s = detail::require_slowness(params);
  const T f = params.y * state.tau;
  return {state.tau - t + s * x,
          state.e + f * x + params.y * (zeta - x * t) + params.k * x * x * half<T>()};
}

template <Scalar T>
Coefficients<T> scalar_coefficients(const T& param, const OrbitParams<T>& params) {
  return {params.k * param, params.y * param};
}

// --- chart invariants ------------------------------------------------------

/// p v - k q^2 / 2 + e0; the energy coordinate is inert in the time chart.
template <Scalar T>
T time_chart_invariant(const T& q, const T& p, const T& e0, const OrbitParams<T>& params) {
  const T v = detail::require_velocity(params);
  return p * v - params.k * q * q * half<T>() + e0;
}

/// p0 - y tau^2 / 2 + e s; momentum is inert in the space chart.
template <Scalar T>
T space_chart_invariant(const T& tau, const T& e, const T& p0, const OrbitParams<T>& params) {
  const T s = detail::require_slowness(params);
  return p0 - params.y * tau * tau * half<T>() + e * s;
}

// --- trajectories ----------------------------------------------------------

template <Scalar T>
struct IntegratorConfig {
  T step{};
  T start{};
  T end{};
  /// Output rows evenly spaced over [start, end]; 0 records every step.
  std::size_t samples = 0;

  void validate() const {
    if (!(T(0) < step)) throw std::invalid_argument("integrator step must be positive");
    if (end < start) throw std::invalid_argument("integration range is empty");
    if (samples == 1 && !(start == end)) {
      throw std::invalid_argument("at least two samples are needed for a nonzero range");
    }
  }
};

/// Initial data for a chart trajectory. Time picture: (q, p) plus the inert
/// energy e0. Space picture: (tau, e) plus the inert momentum p0.
template <Scalar T>
struct InitialState {
  T coord1{};
  T coord2{};
  T inert{};
};

template <Scalar T>
struct TrajectorySample {
  T param{};
  std::vector<T> state;
  T invariant{};
  T drift{};
};

template <Scalar T>
struct Trajectory {
  Picture picture = Picture::Time;
  OrbitParams<T> params;
  std::string method;  ///< "rk4", "closed-form" or "dual-flow"
  std::string param_name;
  std::vector<std::string> state_names;
  std::string invariant_name;
  std::vector<TrajectorySample<T>> samples;

  void push(T param, std::vector<T> state, T invariant) {
    T drift = samples.empty() ? T(0) : ScalarTraits<T>::abs(invariant - samples.front().invariant);
    samples.push_back({std::move(param), std::move(state), std::move(invariant), std::move(drift)});
  }
};

namespace detail {

template <Scalar T>
Trajectory<T> empty_trajectory(Picture picture, const OrbitParams<T>& params, std::string method) {
  Trajectory<T> tr;
  tr.picture = picture;
  tr.params = params;
  tr.method = std::move(method);
  if (picture == Picture::Time) {
    tr.param_name = "t";
    tr.state_names = {"q", "p"};
    tr.invariant_name = "U";
  } else {
    tr.param_name = "x";
    tr.state_names = {"tau", "e"};
    tr.invariant_name = "pi";
  }
  return tr;
}

template <Scalar T>
std::vector<T> output_grid(const T& start, const T& end, std::size_t samples) {
  if (start == end || samples <= 1) return {start};
  std::vector<T> grid;
  grid.reserve(samples);
  const T n(static_cast<long>(samples - 1));
  for (std::size_t i = 0; i + 1 < samples; ++i) {
    grid.push_back(start + (end - start) * T(static_cast<long>(i)) / n);
  }
  grid.push_back(end);
  return grid;
}

template <Scalar T>
Rates<T> rhs(Picture picture, const T& param, const T& c1, const OrbitParams<T>& params) {
  if (picture == Picture::Time) return time_rhs(TimeState<T>{c1, T(0), param}, params);
  return space_rhs(SpaceState<T>{c1, T(0), param}, params);
}

template <Scalar T>
T chart_invariant(Picture picture, const T& c1, const T& c2, const T& inert,
                  const OrbitParams<T>& params) {
  return picture == Picture::Time ? time_chart_invariant(c1, c2, inert, params)
                                  : space_chart_invariant(c1, c2, inert, params);
}

}  // namespace detail

/// Fixed-step classical fourth-order Runge-Kutta over the derived rhs. Each
/// output interval is split into equal steps no longer than config.step.
template <Scalar T>
Trajectory<T> integrate(Picture picture, const InitialState<T>& init, const OrbitParams<T>& params,
                        const IntegratorConfig<T>& config) {
  config.validate();
  auto tr = detail::empty_trajectory(picture, params, "rk4");
  // Fails early with ChartUndefined.
  (void)detail::chart_invariant(picture, init.coord1, init.coord2, init.inert, params);

  std::vector<T> grid;
  if (config.samples == 0) {
    const long n = std::max(1L, ScalarTraits<T>::ceil((config.end - config.start) / config.step));
    grid = config.start == config.end ? std::vector<T>{config.start}
                                      : detail::output_grid(config.start, config.end,
                                                            static_cast<std::size_t>(n + 1));
  } else {
    grid = detail::output_grid(config.start, config.end, config.samples);
  }

  T c1 = init.coord1;
  T c2 = init.coord2;
  tr.push(grid.front(), {c1, c2}, detail::chart_invariant(picture, c1, c2, init.inert, params));
  const T h2 = half<T>();
  const T sixth = T(1) / T(6);
  for (std::size_t g = 1; g < grid.size(); ++g) {
    const T span = grid[g] - grid[g - 1];
    const long steps = std::max(1L, ScalarTraits<T>::ceil(span / config.step));
    const T h = span / T(steps);
    T param = grid[g - 1];
    for (long i = 0; i < steps; ++i) {
      // The rhs depends on c1 and the parameter only.
      const auto k1 = detail::rhs(picture, param, c1, params);
      const auto k2 = detail::rhs(picture, param + h2 * h, c1 + h2 * h * k1.first, params);
      const auto k3 = detail::rhs(picture, param + h2 * h, c1 + h2 * h * k2.first, params);
      const auto k4 = detail::rhs(picture, param + h, c1 + h * k3.first, params);
      c1 += h * sixth * (k1.first + T(2) * k2.first + T(2) * k3.first + k4.first);
      c2 += h * sixth * (k1.second + T(2) * k2.second + T(2) * k3.second + k4.second);
      param = (i + 1 == steps) ? grid[g] : param + h;
    }
    tr.push(grid[g], {c1, c2}, detail::chart_invariant(picture, c1, c2, init.inert, params));
  }
  return tr;
}

template <Scalar T>
Trajectory<T> sample_closed_form(Picture picture, const InitialState<T>& init,
                                 const OrbitParams<T>& params, const T& start, const T& end,
                                 std::size_t samples) {
  if (end < start) throw std::invalid_argument("range is empty");
  auto tr = detail::empty_trajectory(picture, params, "closed-form");
  for (const T& s : detail::output_grid(start, end, samples)) {
    const T d = s - start;
    if (picture == Picture::Time) {
      const auto pt = time_closed_form(init.coord1, init.coord2, params, d);
      tr.push(s, {pt.q, pt.p}, time_chart_invariant(pt.q, pt.p, init.inert, params));
    } else {
      const T f0 = params.y * init.coord1;
      const auto pt = space_closed_form(init.coord1, init.coord2, f0, params, d);
      tr.push(s, {pt.tau, pt.e}, space_chart_invariant(pt.tau, pt.e, init.inert, params));
    }
  }
  return tr;
}

/// Samples the total dual-space flow; the tracked invariant is psi.
template <Scalar T>
Trajectory<T> sample_dual_flow(Picture picture, const DualElement<T>& mu0, const T& start,
                               const T& end, std::size_t samples) {
  if (end < start) throw std::invalid_argument("range is empty");
  Trajectory<T> tr;
  tr.picture = picture;
  tr.params = {mu0.k, mu0.y};
  tr.method = "dual-flow";
  tr.param_name = picture == Picture::Time ? "t" : "x";
  tr.state_names = {"p", "e", "f", "k", "y"};
  tr.invariant_name = "Psi";
  for (const T& s : detail::output_grid(start, end, samples)) {
    const T d = s - start;
    const auto mu = picture == Picture::Time ? time_flow(mu0, d) : space_flow(mu0, d);
    tr.push(s, {mu.p, mu.e, mu.f, mu.k, mu.y}, orbits::psi(mu));
  }
  return tr;
}

}  // namespace aristotle::dynamics
