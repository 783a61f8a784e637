#pragma once

// Raw-pointer entry points shared by the per-ISA translation units. Every
// variant must evaluate the same operations in the same order so results are
// bit-identical; see the formulas in scalar.cpp.

#include <cstddef>

namespace aristotle::kernels::detail {

struct DualPtrs {
  const double* p;
  const double* e;
  const double* f;
  const double* k;
  const double* y;
};

struct DualOut {
  double* p;
  double* e;
  double* f;
  double* k;
  double* y;
};

struct KernelTable {
  void (*coadjoint)(const double* x, const double* t, const double* zeta, DualPtrs in, DualOut out,
                    std::size_t n);
  void (*psi)(DualPtrs in, double* out, std::size_t n);
  void (*internal_energy)(DualPtrs in, double* out, std::size_t n);
  void (*internal_momentum)(DualPtrs in, double* out, std::size_t n);
};

namespace scalar {
extern const KernelTable table;
void coadjoint(const double* x, const double* t, const double* zeta, DualPtrs in, DualOut out,
               std::size_t begin, std::size_t n);
void psi(DualPtrs in, double* out, std::size_t begin, std::size_t n);
void internal_energy(DualPtrs in, double* out, std::size_t begin, std::size_t n);
void internal_momentum(DualPtrs in, double* out, std::size_t begin, std::size_t n);
}  // namespace scalar

#if defined(ARISTOTLE_HAVE_AVX2)
namespace avx2 {
extern const KernelTable table;
}
#endif

}  // namespace aristotle::kernels::detail
