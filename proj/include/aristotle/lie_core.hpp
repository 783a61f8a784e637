#pragma once

// Lie algebra and group arithmetic for the five-dimensional step-3 nilpotent
// algebra spanned by P, E, F, Lambda, Y with
//
//   [P, E] = F,   [P, F] = Lambda,   [F, E] = Y,
//
// all other brackets of basis elements zero. Group elements use second-kind
// coordinates g = exp(a Lambda + b Y) exp(t E + zeta F) exp(x P).

#include <array>
#include <cstddef>
#include <string_view>

#include "aristotle/scalar.hpp"

namespace aristotle::lie {

inline constexpr std::size_t kDim = 5;

/// Fixed basis order used by every vector and matrix representation.
enum class Basis : std::size_t { P = 0, E = 1, F = 2, Lambda = 3, Y = 4 };

inline constexpr std::array<Basis, kDim> kBasis = {Basis::P, Basis::E, Basis::F, Basis::Lambda,
                                                   Basis::Y};

constexpr std::size_t index(Basis b) { return static_cast<std::size_t>(b); }

constexpr std::string_view basis_name(Basis b) {
  constexpr std::array<std::string_view, kDim> names = {"P", "E", "F", "Lambda", "Y"};
  return names[index(b)];
}

template <Scalar T>
struct AlgebraElement {
  std::array<T, kDim> coeffs{};

  static AlgebraElement zero() { return {}; }
  static AlgebraElement basis(Basis b, T scale = T(1)) {
    AlgebraElement out;
    out.coeffs[index(b)] = std::move(scale);
    return out;
  }

  T& operator[](Basis b) { return coeffs[index(b)]; }
  const T& operator[](Basis b) const { return coeffs[index(b)]; }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (std::size_t i = 0; i < kDim; ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    for (std::size_t i = 0; i < kDim; ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  AlgebraElement& operator*=(const T& s) {
    for (auto& c : coeffs) c *= s;
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const T& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(AlgebraElement a, const T& s) { return a *= s; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= T(-1); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : coeffs) {
      if (!(c == T(0))) return false;
    }
    return true;
  }

  /// Largest absolute coefficient.
  [[nodiscard]] T max_norm() const {
    T best(0);
    for (const auto& c : coeffs) {
      const T a = ScalarTraits<T>::abs(c);
      if (best < a) best = a;
    }
    return best;
  }
};

/// Coefficients c(i, j, m) with [X_i, X_j] = sum_m c(i, j, m) X_m.
template <Scalar T>
class StructureTensor {
 public:
  StructureTensor() = default;

  /// The bracket table of the extended Aristotle algebra.
  static StructureTensor aristotle() {
    StructureTensor c;
    c.set_bracket(Basis::P, Basis::E, AlgebraElement<T>::basis(Basis::F));
    c.set_bracket(Basis::P, Basis::F, AlgebraElement<T>::basis(Basis::Lambda));
    c.set_bracket(Basis::F, Basis::E, AlgebraElement<T>::basis(Basis::Y));
    return c;
  }

  /// Sets [i, j] = value and [j, i] = -value.
  void set_bracket(Basis i, Basis j, const AlgebraElement<T>& value) {
    for (std::size_t m = 0; m < kDim; ++m) {
      at(index(i), index(j), m) = value.coeffs[m];
      at(index(j), index(i), m) = -value.coeffs[m];
    }
  }

  const T& operator()(std::size_t i, std::size_t j, std::size_t m) const {
    return c_[(i * kDim + j) * kDim + m];
  }

  [[nodiscard]] bool is_antisymmetric() const {
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        for (std::size_t m = 0; m < kDim; ++m)
          if (!((*this)(i, j, m) == -(*this)(j, i, m))) return false;
    return true;
  }

 private:
  T& at(std::size_t i, std::size_t j, std::size_t m) { return c_[(i * kDim + j) * kDim + m]; }

  std::array<T, kDim * kDim * kDim> c_{};
};

template <Scalar T>
const StructureTensor<T>& aristotle_tensor() {
  static const StructureTensor<T> tensor = StructureTensor<T>::aristotle();
  return tensor;
}

template <Scalar T>
AlgebraElement<T> bracket(const AlgebraElement<T>& a, const AlgebraElement<T>& b,
                          const StructureTensor<T>& c) {
  AlgebraElement<T> out;
  for (std::size_t i = 0; i < kDim; ++i) {
    if (a.coeffs[i] == T(0)) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (b.coeffs[j] == T(0)) continue;
      const T w = a.coeffs[i] * b.coeffs[j];
      for (std::size_t m = 0; m < kDim; ++m) {
        if (!(c(i, j, m) == T(0))) out.coeffs[m] += w * c(i, j, m);
      }
    }
  }
  return out;
}

template <Scalar T>
AlgebraElement<T> bracket(const AlgebraElement<T>& a, const AlgebraElement<T>& b) {
  return bracket(a, b, aristotle_tensor<T>());
}

/// Cyclic sum [X_i,[X_j,X_l]] + [X_j,[X_l,X_i]] + [X_l,[X_i,X_j]].
template <Scalar T>
AlgebraElement<T> jacobi_sum(const StructureTensor<T>& c, Basis i, Basis j, Basis l) {
  const auto xi = AlgebraElement<T>::basis(i);
  const auto xj = AlgebraElement<T>::basis(j);
  const auto xl = AlgebraElement<T>::basis(l);
  return bracket(xi, bracket(xj, xl, c), c) + bracket(xj, bracket(xl, xi, c), c) +
         bracket(xl, bracket(xi, xj, c), c);
}

/// Max-norm of the cyclic sum over all basis triples; zero iff the tensor
/// defines a Lie algebra.
template <Scalar T>
T jacobi_residual(const StructureTensor<T>& c) {
  T worst(0);
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i + 1; j < kDim; ++j)
      for (std::size_t l = j + 1; l < kDim; ++l) {
        const T r = jacobi_sum(c, kBasis[i], kBasis[j], kBasis[l]).max_norm();
        if (worst < r) worst = r;
      }
  return worst;
}

/// Max-norm over all right-nested basis brackets [X_1,[X_2,...,X_n]] of the
/// given word length. Zero at length s + 1 means nilpotent of step <= s.
template <Scalar T>
T nested_bracket_residual(const StructureTensor<T>& c, std::size_t word_length) {
  T worst(0);
  std::size_t words = 1;
  for (std::size_t i = 0; i < word_length; ++i) words *= kDim;
  for (std::size_t w = 0; w < words; ++w) {
    std::size_t code = w;
    auto acc = AlgebraElement<T>::basis(kBasis[code % kDim]);
    code /= kDim;
    for (std::size_t k = 1; k < word_length; ++k) {
      acc = bracket(AlgebraElement<T>::basis(kBasis[code % kDim]), acc, c);
      code /= kDim;
    }
    const T r = acc.max_norm();
    if (worst < r) worst = r;
  }
  return worst;
}

/// 5x5 matrix acting on coefficient vectors (column convention: M * v).
template <Scalar T>
struct AdjointMatrix {
  std::array<T, kDim * kDim> m{};

  static AdjointMatrix identity() {
    AdjointMatrix out;
    for (std::size_t i = 0; i < kDim; ++i) out(i, i) = T(1);
    return out;
  }

  T& operator()(std::size_t r, std::size_t c) { return m[r * kDim + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return m[r * kDim + c]; }

  friend AdjointMatrix operator*(const AdjointMatrix& a, const AdjointMatrix& b) {
    AdjointMatrix out;
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t k = 0; k < kDim; ++k) {
        if (a(r, k) == T(0)) continue;
        for (std::size_t c = 0; c < kDim; ++c) out(r, c) += a(r, k) * b(k, c);
      }
    return out;
  }
  friend AlgebraElement<T> operator*(const AdjointMatrix& a, const AlgebraElement<T>& v) {
    AlgebraElement<T> out;
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t c = 0; c < kDim; ++c) out.coeffs[r] += a(r, c) * v.coeffs[c];
    return out;
  }
  friend AdjointMatrix operator+(AdjointMatrix a, const AdjointMatrix& b) {
    for (std::size_t i = 0; i < kDim * kDim; ++i) a.m[i] += b.m[i];
    return a;
  }
  friend AdjointMatrix operator-(AdjointMatrix a, const AdjointMatrix& b) {
    for (std::size_t i = 0; i < kDim * kDim; ++i) a.m[i] -= b.m[i];
    return a;
  }
  friend AdjointMatrix operator*(const T& s, AdjointMatrix a) {
    for (auto& v : a.m) v *= s;
    return a;
  }
  friend bool operator==(const AdjointMatrix&, const AdjointMatrix&) = default;

  [[nodiscard]] AdjointMatrix transpose() const {
    AdjointMatrix out;
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t c = 0; c < kDim; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& v : m) {
      if (!(v == T(0))) return false;
    }
    return true;
  }

  [[nodiscard]] T max_norm() const {
    T best(0);
    for (const auto& v : m) {
      const T a = ScalarTraits<T>::abs(v);
      if (best < a) best = a;
    }
    return best;
  }

  /// Bareiss fraction-free elimination with row pivoting.
  [[nodiscard]] T determinant() const {
    AdjointMatrix a = *this;
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < kDim; ++k) {
      if (a(k, k) == T(0)) {
        std::size_t p = k + 1;
        while (p < kDim && a(p, k) == T(0)) ++p;
        if (p == kDim) return T(0);
        for (std::size_t c = 0; c < kDim; ++c) std::swap(a(k, c), a(p, c));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < kDim; ++i)
        for (std::size_t j = k + 1; j < kDim; ++j)
          a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      prev = a(k, k);
    }
    const T d = a(kDim - 1, kDim - 1);
    return sign < 0 ? -d : d;
  }
};

/// Matrix of bracket(a, .): column j holds [a, X_j].
template <Scalar T>
AdjointMatrix<T> ad(const AlgebraElement<T>& a, const StructureTensor<T>& c) {
  AdjointMatrix<T> out;
  for (std::size_t j = 0; j < kDim; ++j) {
    const auto col = bracket(a, AlgebraElement<T>::basis(kBasis[j]), c);
    for (std::size_t r = 0; r < kDim; ++r) out(r, j) = col.coeffs[r];
  }
  return out;
}

template <Scalar T>
AdjointMatrix<T> ad(const AlgebraElement<T>& a) {
  return ad(a, aristotle_tensor<T>());
}

/// exp(ad a) as a terminating series; ad a is nilpotent for a nilpotent algebra.
template <Scalar T>
AdjointMatrix<T> exp_ad(const AlgebraElement<T>& a) {
  const auto x = ad(a);
  auto out = AdjointMatrix<T>::identity();
  auto term = AdjointMatrix<T>::identity();
  for (int n = 1; n <= static_cast<int>(kDim); ++n) {
    term = (T(1) / T(n)) * (term * x);
    if (term.is_zero()) break;
    out = out + term;
  }
  return out;
}

/// log(exp(a) exp(b)). The truncation after the third-order terms is exact
/// because every bracket of four generators vanishes.
template <Scalar T>
AlgebraElement<T> bch(const AlgebraElement<T>& a, const AlgebraElement<T>& b) {
  const auto ab = bracket(a, b);
  const T twelfth = T(1) / T(12);
  return a + b + half<T>() * ab + twelfth * bracket(a, ab) + twelfth * bracket(b, -ab);
}

template <Scalar T>
struct GroupElement {
  T x{};     ///< space translation (P)
  T t{};     ///< time translation (E)
  T zeta{};  ///< first extension (F)
  T a{};     ///< Lambda coordinate
  T b{};     ///< Y coordinate

  static GroupElement identity() { return {}; }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  [[nodiscard]] std::array<T, kDim> as_array() const { return {x, t, zeta, a, b}; }
  static GroupElement from_array(const std::array<T, kDim>& v) {
    return {v[0], v[1], v[2], v[3], v[4]};
  }
};

namespace detail {

template <Scalar T>
AlgebraElement<T> central_part(const GroupElement<T>& g) {
  AlgebraElement<T> c;
  c[Basis::Lambda] = g.a;
  c[Basis::Y] = g.b;
  return c;
}

template <Scalar T>
AlgebraElement<T> middle_part(const GroupElement<T>& g) {
  AlgebraElement<T> m;
  m[Basis::E] = g.t;
  m[Basis::F] = g.zeta;
  return m;
}

template <Scalar T>
AlgebraElement<T> translation_part(const GroupElement<T>& g) {
  return AlgebraElement<T>::basis(Basis::P, g.x);
}

}  // namespace detail

/// Group law derived by moving exp(x P) of the left factor past the middle
/// exponential of the right factor (conjugation), merging the two middle
/// exponentials with bch, and collecting everything central.
template <Scalar T>
GroupElement<T> compose(const GroupElement<T>& g, const GroupElement<T>& h) {
  using detail::middle_part;
  // exp(xP) exp(V) = exp(Ad_{exp(xP)} V) exp(xP)
  const auto moved = exp_ad(detail::translation_part(g)) * middle_part(h);
  AlgebraElement<T> moved_middle;
  moved_middle[Basis::E] = moved[Basis::E];
  moved_middle[Basis::F] = moved[Basis::F];

  const auto merged = bch(middle_part(g), moved_middle);

  GroupElement<T> out;
  out.x = g.x + h.x;
  out.t = merged[Basis::E];
  out.zeta = merged[Basis::F];
  out.a = g.a + h.a + moved[Basis::Lambda] + merged[Basis::Lambda];
  out.b = g.b + h.b + moved[Basis::Y] + merged[Basis::Y];
  return out;
}

/// Literal transcription of the printed multiplication law. Not associative;
/// kept only so the two laws can be compared.
template <Scalar T>
GroupElement<T> compose_printed(const GroupElement<T>& g, const GroupElement<T>& h) {
  const T one_half = half<T>();
  return {g.x + h.x,
          g.t + h.t,
          g.zeta + h.zeta + g.x * h.t,
          g.a + h.a + g.x * h.zeta + one_half * g.x * g.x * h.t,
          g.b + h.b + h.zeta * h.t + one_half * g.x * h.t * h.t};
}

/// First-kind coordinates: g = exp(A).
template <Scalar T>
AlgebraElement<T> to_single_exponential(const GroupElement<T>& g) {
  return bch(detail::central_part(g), bch(detail::middle_part(g), detail::translation_part(g)));
}

/// Inverse of to_single_exponential: peel exp(xP) off the right, then the
/// E, F exponential, leaving a central remainder.
template <Scalar T>
GroupElement<T> from_single_exponential(const AlgebraElement<T>& a) {
  GroupElement<T> g;
  g.x = a[Basis::P];
  const auto rest = bch(a, AlgebraElement<T>::basis(Basis::P, -g.x));
  g.t = rest[Basis::E];
  g.zeta = rest[Basis::F];
  const auto center = bch(-detail::middle_part(g), rest);
  g.a = center[Basis::Lambda];
  g.b = center[Basis::Y];
  return g;
}

template <Scalar T>
GroupElement<T> inverse(const GroupElement<T>& g) {
  return from_single_exponential(-to_single_exponential(g));
}

/// Ad_g as the product of the factor exponentials, in factorization order.
template <Scalar T>
AdjointMatrix<T> adjoint_of_group(const GroupElement<T>& g) {
  return exp_ad(detail::central_part(g)) * exp_ad(detail::middle_part(g)) *
         exp_ad(detail::translation_part(g));
}

}  // namespace aristotle::lie
