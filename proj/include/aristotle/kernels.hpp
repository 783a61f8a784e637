#pragma once

// Batched double-precision kernels over structure-of-arrays point sets: the
// printed coadjoint formula and the quadratic/rational invariants. A scalar
// reference path and an AVX2 path produce bit-identical results; the best
// path available on the running CPU is selected at runtime.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace aristotle::kernels {

enum class Isa { Scalar, Avx2 };

constexpr std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

/// True if the variant was compiled in and the CPU supports it.
bool is_supported(Isa isa);

/// Widest supported variant.
Isa best_isa();

struct DualBatch {
  std::vector<double> p, e, f, k, y;

  DualBatch() = default;
  explicit DualBatch(std::size_t n) : p(n), e(n), f(n), k(n), y(n) {}

  [[nodiscard]] std::size_t size() const { return p.size(); }
  void push_back(double p_, double e_, double f_, double k_, double y_) {
    p.push_back(p_);
    e.push_back(e_);
    f.push_back(f_);
    k.push_back(k_);
    y.push_back(y_);
  }
};

/// Per-point group parameters (x, t, zeta).
struct ActionBatch {
  std::vector<double> x, t, zeta;

  [[nodiscard]] std::size_t size() const { return x.size(); }
  void push_back(double x_, double t_, double zeta_) {
    x.push_back(x_);
    t.push_back(t_);
    zeta.push_back(zeta_);
  }
};

/// out[i] = printed coadjoint of in[i] by action[i]. `out` is resized.
void coadjoint_printed(const ActionBatch& action, const DualBatch& in, DualBatch& out,
                       Isa isa = best_isa());

/// 2 k e - f^2 + 2 p y.
void psi(const DualBatch& in, std::span<double> out, Isa isa = best_isa());

/// e - k q^2 / 2 + p v with q = f / k, v = y / k; NaN where k == 0.
void internal_energy(const DualBatch& in, std::span<double> out, Isa isa = best_isa());

/// p - y tau^2 / 2 + e s with tau = f / y, s = k / y; NaN where y == 0.
void internal_momentum(const DualBatch& in, std::span<double> out, Isa isa = best_isa());

}  // namespace aristotle::kernels
