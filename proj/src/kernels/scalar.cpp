#include <limits>

#include "kernels_impl.hpp"

namespace aristotle::kernels::detail::scalar {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void coadjoint_all(const double* x, const double* t, const double* zeta, DualPtrs in, DualOut out,
                   std::size_t n) {
  coadjoint(x, t, zeta, in, out, 0, n);
}
void psi_all(DualPtrs in, double* out, std::size_t n) { psi(in, out, 0, n); }
void energy_all(DualPtrs in, double* out, std::size_t n) { internal_energy(in, out, 0, n); }
void momentum_all(DualPtrs in, double* out, std::size_t n) { internal_momentum(in, out, 0, n); }

}  // namespace

void coadjoint(const double* x, const double* t, const double* zeta, DualPtrs in, DualOut out,
               std::size_t begin, std::size_t n) {
  for (std::size_t i = begin; i < n; ++i) {
    const double xt = x[i] * t[i];
    const double tt = t[i] * t[i];
    const double xx = x[i] * x[i];
    const double p = ((in.p[i] + in.f[i] * t[i]) + in.k[i] * (zeta[i] - xt)) + (in.y[i] * tt) * 0.5;
    const double e = ((in.e[i] - in.f[i] * x[i]) + (in.k[i] * xx) * 0.5) - in.y[i] * zeta[i];
    const double f = (in.f[i] - in.k[i] * x[i]) + in.y[i] * t[i];
    out.p[i] = p;
    out.e[i] = e;
    out.f[i] = f;
    out.k[i] = in.k[i];
    out.y[i] = in.y[i];
  }
}

void psi(DualPtrs in, double* out, std::size_t begin, std::size_t n) {
  for (std::size_t i = begin; i < n; ++i) {
    out[i] = ((2.0 * in.k[i]) * in.e[i] - in.f[i] * in.f[i]) + (2.0 * in.p[i]) * in.y[i];
  }
}

void internal_energy(DualPtrs in, double* out, std::size_t begin, std::size_t n) {
  for (std::size_t i = begin; i < n; ++i) {
    if (in.k[i] == 0.0) {
      out[i] = kNaN;
      continue;
    }
    const double q = in.f[i] / in.k[i];
    out[i] = (in.e[i] - (in.k[i] * (q * q)) * 0.5) + in.p[i] * (in.y[i] / in.k[i]);
  }
}

void internal_momentum(DualPtrs in, double* out, std::size_t begin, std::size_t n) {
  for (std::size_t i = begin; i < n; ++i) {
    if (in.y[i] == 0.0) {
      out[i] = kNaN;
      continue;
    }
    const double tau = in.f[i] / in.y[i];
    out[i] = (in.p[i] - (in.y[i] * (tau * tau)) * 0.5) + in.e[i] * (in.k[i] / in.y[i]);
  }
}

const KernelTable table = {coadjoint_all, psi_all, energy_all, momentum_all};

}  // namespace aristotle::kernels::detail::scalar
