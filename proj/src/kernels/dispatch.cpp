#include <stdexcept>

#include "aristotle/kernels.hpp"
#include "kernels_impl.hpp"

namespace aristotle::kernels {

namespace {

const detail::KernelTable& table_for(Isa isa) {
  if (!is_supported(isa)) {
    throw std::invalid_argument("kernel variant not available: " + std::string(to_string(isa)));
  }
#if defined(ARISTOTLE_HAVE_AVX2)
  if (isa == Isa::Avx2) return detail::avx2::table;
#endif
  return detail::scalar::table;
}

detail::DualPtrs view(const DualBatch& b) {
  return {b.p.data(), b.e.data(), b.f.data(), b.k.data(), b.y.data()};
}

void require_size(std::size_t got, std::size_t want) {
  if (got != want) throw std::invalid_argument("batch size mismatch");
}

}  // namespace

bool is_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(ARISTOTLE_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa best = is_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  return best;
}

void coadjoint_printed(const ActionBatch& action, const DualBatch& in, DualBatch& out, Isa isa) {
  const auto n = in.size();
  require_size(action.size(), n);
  require_size(action.t.size(), n);
  require_size(action.zeta.size(), n);
  if (&out == &in) {
    const DualBatch copy = in;
    coadjoint_printed(action, copy, out, isa);
    return;
  }
  out = DualBatch(n);
  table_for(isa).coadjoint(action.x.data(), action.t.data(), action.zeta.data(), view(in),
                           {out.p.data(), out.e.data(), out.f.data(), out.k.data(), out.y.data()},
                           n);
}

void psi(const DualBatch& in, std::span<double> out, Isa isa) {
  require_size(out.size(), in.size());
  table_for(isa).psi(view(in), out.data(), in.size());
}

void internal_energy(const DualBatch& in, std::span<double> out, Isa isa) {
  require_size(out.size(), in.size());
  table_for(isa).internal_energy(view(in), out.data(), in.size());
}

void internal_momentum(const DualBatch& in, std::span<double> out, Isa isa) {
  require_size(out.size(), in.size());
  table_for(isa).internal_momentum(view(in), out.data(), in.size());
}

}  // namespace aristotle::kernels
