#pragma once

// Dual space of the extended algebra, coadjoint actions, orbit invariants and
// the classification of coadjoint orbits.

#include <array>
#include <optional>
#include <string_view>

#include "aristotle/lie_core.hpp"

namespace aristotle::orbits {

inline constexpr double kDefaultClassTolerance = 1e-12;

/// A point (p, e, f, k, y) of the dual: momentum, energy, force, Hooke
/// constant, yank. Pairs with (P, E, F, Lambda, Y) in that order.
template <Scalar T>
struct DualElement {
  T p{};
  T e{};
  T f{};
  T k{};
  T y{};

  friend bool operator==(const DualElement&, const DualElement&) = default;

  [[nodiscard]] std::array<T, lie::kDim> as_array() const { return {p, e, f, k, y}; }
  static DualElement from_array(const std::array<T, lie::kDim>& v) {
    return {v[0], v[1], v[2], v[3], v[4]};
  }
  [[nodiscard]] T scale() const { return max_abs<T>({p, e, f, k, y}); }
};

enum class OrbitClass { Generic, HookeOnly, YankOnly, ForceOnly, FixedPoint };

constexpr std::string_view to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::Generic: return "GENERIC";
    case OrbitClass::HookeOnly: return "HOOKE_ONLY";
    case OrbitClass::YankOnly: return "YANK_ONLY";
    case OrbitClass::ForceOnly: return "FORCE_ONLY";
    case OrbitClass::FixedPoint: return "FIXED_POINT";
  }
  return "?";
}

/// Orbit invariants. Entries whose defining division does not exist are left
/// empty rather than zero-filled.
template <Scalar T>
struct InvariantSet {
  T k{};
  T y{};
  T psi{};
  std::optional<T> v;      ///< y / k, generic orbits only
  std::optional<T> s;      ///< k / y, generic orbits only
  std::optional<T> q;      ///< f / k
  std::optional<T> tau;    ///< f / y
  std::optional<T> U;      ///< e - k q^2 / 2 + p y / k
  std::optional<T> pi;     ///< p - y tau^2 / 2 + e k / y
  std::optional<T> force;  ///< f, echoed for force-only orbits
};

template <Scalar T>
T pair(const DualElement<T>& mu, const lie::AlgebraElement<T>& a) {
  using lie::Basis;
  return mu.p * a[Basis::P] + mu.e * a[Basis::E] + mu.f * a[Basis::F] + mu.k * a[Basis::Lambda] +
         mu.y * a[Basis::Y];
}

/// mu o Ad_M for a matrix M acting on the algebra: component j is mu(M X_j).
template <Scalar T>
DualElement<T> pull_back(const lie::AdjointMatrix<T>& m, const DualElement<T>& mu) {
  const auto in = mu.as_array();
  std::array<T, lie::kDim> out{};
  for (std::size_t j = 0; j < lie::kDim; ++j)
    for (std::size_t i = 0; i < lie::kDim; ++i) out[j] += in[i] * m(i, j);
  return DualElement<T>::from_array(out);
}

/// Coadjoint action mu -> mu o Ad_{g^-1}; a left action.
template <Scalar T>
DualElement<T> coadjoint(const lie::GroupElement<T>& g, const DualElement<T>& mu) {
  return pull_back(lie::adjoint_of_group(lie::inverse(g)), mu);
}

/// Literal transcription of the printed coadjoint formula for (x, t, zeta).
template <Scalar T>
DualElement<T> coadjoint_printed(const T& x, const T& t, const T& zeta, const DualElement<T>& mu) {
  const T h = half<T>();
  return {mu.p + mu.f * t + mu.k * (zeta - x * t) + mu.y * (t * t) * h,
          mu.e - mu.f * x + mu.k * (x * x) * h - mu.y * zeta,
          mu.f - mu.k * x + mu.y * t,
          mu.k,
          mu.y};
}

/// How coordinates (x, t, zeta) of a group element must be mapped before
/// feeding them to coadjoint_printed to reproduce coadjoint.
enum class Convention { Identity, Inverse, Negated };

constexpr std::string_view to_string(Convention c) {
  switch (c) {
    case Convention::Identity: return "identity";
    case Convention::Inverse: return "inverse";
    case Convention::Negated: return "negated";
  }
  return "?";
}

/// Determined by comparing both actions on random points; see the orbit tests.
inline constexpr Convention kPrintedConvention = Convention::Identity;

/// Quotient-group coordinates after applying a convention. The inverse uses
/// the quotient law (x, t, zeta)(x', t', zeta') = (x+x', t+t', zeta+zeta'+x t').
template <Scalar T>
std::array<T, 3> apply_convention(Convention c, const T& x, const T& t, const T& zeta) {
  switch (c) {
    case Convention::Identity: return {x, t, zeta};
    case Convention::Inverse: return {-x, -t, -zeta + x * t};
    case Convention::Negated: return {-x, -t, -zeta};
  }
  return {x, t, zeta};
}

template <Scalar T>
DualElement<T> coadjoint_printed(Convention c, const lie::GroupElement<T>& g,
                                 const DualElement<T>& mu) {
  const auto [x, t, zeta] = apply_convention(c, g.x, g.t, g.zeta);
  return coadjoint_printed(x, t, zeta, mu);
}

template <Scalar T>
T psi(const DualElement<T>& mu) {
  return T(2) * mu.k * mu.e - mu.f * mu.f + T(2) * mu.p * mu.y;
}

template <Scalar T>
OrbitClass classify(const DualElement<T>& mu, double tol = kDefaultClassTolerance) {
  const T scale = mu.scale();
  const auto zero = [&](const T& v) { return ScalarTraits<T>::near_zero(v, scale, tol); };
  const bool k0 = zero(mu.k);
  const bool y0 = zero(mu.y);
  if (!k0 && !y0) return OrbitClass::Generic;
  if (!k0) return OrbitClass::HookeOnly;
  if (!y0) return OrbitClass::YankOnly;
  if (!zero(mu.f)) return OrbitClass::ForceOnly;
  return OrbitClass::FixedPoint;
}

template <Scalar T>
InvariantSet<T> invariants(const DualElement<T>& mu, double tol = kDefaultClassTolerance) {
  const T scale = mu.scale();
  const auto zero = [&](const T& v) { return ScalarTraits<T>::near_zero(v, scale, tol); };
  const T h = half<T>();

  InvariantSet<T> out;
  out.k = mu.k;
  out.y = mu.y;
  out.psi = psi(mu);
  const bool has_k = !zero(mu.k);
  const bool has_y = !zero(mu.y);
  if (has_k && has_y) {
    out.v = mu.y / mu.k;
    out.s = mu.k / mu.y;
  }
  if (has_k) {
    const T q = mu.f / mu.k;
    out.q = q;
    out.U = mu.e - mu.k * (q * q) * h + mu.p * (mu.y / mu.k);
  }
  if (has_y) {
    const T tau = mu.f / mu.y;
    out.tau = tau;
    out.pi = mu.p - mu.y * (tau * tau) * h + mu.e * (mu.k / mu.y);
  }
  if (classify(mu, tol) == OrbitClass::ForceOnly) out.force = mu.f;
  return out;
}

/// Rows are the infinitesimal coadjoint generators d/ds Ad*_{exp(sX)} mu at
/// s = 0 for X in (P, E, F), i.e. -mu o ad(X).
template <Scalar T>
std::array<std::array<T, lie::kDim>, 3> generator_matrix(const DualElement<T>& mu) {
  std::array<std::array<T, lie::kDim>, 3> rows;
  const std::array<lie::Basis, 3> gens = {lie::Basis::P, lie::Basis::E, lie::Basis::F};
  for (std::size_t r = 0; r < 3; ++r) {
    const auto m = lie::ad(lie::AlgebraElement<T>::basis(gens[r]));
    const auto d = pull_back(m, mu);
    const auto arr = d.as_array();
    for (std::size_t c = 0; c < lie::kDim; ++c) rows[r][c] = -arr[c];
  }
  return rows;
}

/// Rank by fraction-free elimination; exact on the rational backend.
template <Scalar T, std::size_t R, std::size_t C>
int matrix_rank(std::array<std::array<T, C>, R> a, const T& scale, double tol) {
  const auto zero = [&](const T& v) { return ScalarTraits<T>::near_zero(v, scale, tol); };
  int rank = 0;
  T prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t pivot = row;
    while (pivot < R && zero(a[pivot][col])) ++pivot;
    if (pivot == R) continue;
    std::swap(a[row], a[pivot]);
    for (std::size_t i = row + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j)
        a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]) / prev;
      a[i][col] = T(0);
    }
    prev = a[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

template <Scalar T>
int orbit_dimension(const DualElement<T>& mu, double tol = kDefaultClassTolerance) {
  const T scale = mu.scale();
  // Bareiss entries grow like scale^2 after one elimination step.
  return matrix_rank(generator_matrix(mu), scale * (T(1) + scale), tol);
}

}  // namespace aristotle::orbits
