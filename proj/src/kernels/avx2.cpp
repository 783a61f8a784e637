// Compiled with -mavx2 and without FMA contraction; see CMakeLists.txt.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace aristotle::kernels::detail::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d load(const double* p, std::size_t i) { return _mm256_loadu_pd(p + i); }

void coadjoint(const double* x, const double* t, const double* zeta, DualPtrs in, DualOut out,
               std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  const std::size_t rounds = n / kLanes * kLanes;
  for (std::size_t i = 0; i < rounds; i += kLanes) {
    const __m256d vx = load(x, i);
    const __m256d vt = load(t, i);
    const __m256d vz = load(zeta, i);
    const __m256d p = load(in.p, i);
    const __m256d e = load(in.e, i);
    const __m256d f = load(in.f, i);
    const __m256d k = load(in.k, i);
    const __m256d y = load(in.y, i);

    const __m256d xt = _mm256_mul_pd(vx, vt);
    const __m256d tt = _mm256_mul_pd(vt, vt);
    const __m256d xx = _mm256_mul_pd(vx, vx);

    __m256d np = _mm256_add_pd(p, _mm256_mul_pd(f, vt));
    np = _mm256_add_pd(np, _mm256_mul_pd(k, _mm256_sub_pd(vz, xt)));
    np = _mm256_add_pd(np, _mm256_mul_pd(_mm256_mul_pd(y, tt), half));

    __m256d ne = _mm256_sub_pd(e, _mm256_mul_pd(f, vx));
    ne = _mm256_add_pd(ne, _mm256_mul_pd(_mm256_mul_pd(k, xx), half));
    ne = _mm256_sub_pd(ne, _mm256_mul_pd(y, vz));

    __m256d nf = _mm256_sub_pd(f, _mm256_mul_pd(k, vx));
    nf = _mm256_add_pd(nf, _mm256_mul_pd(y, vt));

    _mm256_storeu_pd(out.p + i, np);
    _mm256_storeu_pd(out.e + i, ne);
    _mm256_storeu_pd(out.f + i, nf);
    _mm256_storeu_pd(out.k + i, k);
    _mm256_storeu_pd(out.y + i, y);
  }
  scalar::coadjoint(x, t, zeta, in, out, rounds, n);
}

void psi(DualPtrs in, double* out, std::size_t n) {
  const __m256d two = _mm256_set1_pd(2.0);
  const std::size_t rounds = n / kLanes * kLanes;
  for (std::size_t i = 0; i < rounds; i += kLanes) {
    const __m256d f = load(in.f, i);
    __m256d r = _mm256_mul_pd(_mm256_mul_pd(two, load(in.k, i)), load(in.e, i));
    r = _mm256_sub_pd(r, _mm256_mul_pd(f, f));
    r = _mm256_add_pd(r, _mm256_mul_pd(_mm256_mul_pd(two, load(in.p, i)), load(in.y, i)));
    _mm256_storeu_pd(out + i, r);
  }
  scalar::psi(in, out, rounds, n);
}

// Lanes with a zero divisor are computed anyway (inf/NaN) and then replaced.
void internal_energy(DualPtrs in, double* out, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d nan = _mm256_set1_pd(__builtin_nan(""));
  const std::size_t rounds = n / kLanes * kLanes;
  for (std::size_t i = 0; i < rounds; i += kLanes) {
    const __m256d k = load(in.k, i);
    const __m256d q = _mm256_div_pd(load(in.f, i), k);
    __m256d r = _mm256_sub_pd(load(in.e, i), _mm256_mul_pd(_mm256_mul_pd(k, _mm256_mul_pd(q, q)), half));
    r = _mm256_add_pd(r, _mm256_mul_pd(load(in.p, i), _mm256_div_pd(load(in.y, i), k)));
    const __m256d undefined = _mm256_cmp_pd(k, zero, _CMP_EQ_OQ);
    _mm256_storeu_pd(out + i, _mm256_blendv_pd(r, nan, undefined));
  }
  scalar::internal_energy(in, out, rounds, n);
}

void internal_momentum(DualPtrs in, double* out, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d nan = _mm256_set1_pd(__builtin_nan(""));
  const std::size_t rounds = n / kLanes * kLanes;
  for (std::size_t i = 0; i < rounds; i += kLanes) {
    const __m256d y = load(in.y, i);
    const __m256d tau = _mm256_div_pd(load(in.f, i), y);
    __m256d r =
        _mm256_sub_pd(load(in.p, i), _mm256_mul_pd(_mm256_mul_pd(y, _mm256_mul_pd(tau, tau)), half));
    r = _mm256_add_pd(r, _mm256_mul_pd(load(in.e, i), _mm256_div_pd(load(in.k, i), y)));
    const __m256d undefined = _mm256_cmp_pd(y, zero, _CMP_EQ_OQ);
    _mm256_storeu_pd(out + i, _mm256_blendv_pd(r, nan, undefined));
  }
  scalar::internal_momentum(in, out, rounds, n);
}

}  // namespace

const KernelTable table = {coadjoint, psi, internal_energy, internal_momentum};

}  // namespace aristotle::kernels::detail::avx2
