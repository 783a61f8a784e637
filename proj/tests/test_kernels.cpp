#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "aristotle/kernels.hpp"
#include "aristotle/orbits.hpp"
#include "aristotle/rng.hpp"

namespace {

using namespace aristotle;
using namespace aristotle::kernels;

DualBatch random_batch(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  DualBatch b;
  for (std::size_t i = 0; i < n; ++i) {
    const double k = i % 7 == 0 ? 0.0 : rng.uniform_real(-3, 3);
    const double y = i % 5 == 0 ? 0.0 : rng.uniform_real(-3, 3);
    b.push_back(rng.uniform_real(-3, 3), rng.uniform_real(-3, 3), rng.uniform_real(-3, 3), k, y);
  }
  return b;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST(Kernels, ScalarPathAlwaysSupported) {
  EXPECT_TRUE(is_supported(Isa::Scalar));
  EXPECT_TRUE(is_supported(best_isa()));
}

TEST(Kernels, ScalarMatchesTemplatedReference) {
  const auto in = random_batch(37, 1);
  CounterRng rng(2);
  ActionBatch act;
  for (std::size_t i = 0; i < in.size(); ++i)
    act.push_back(rng.uniform_real(-1, 1), rng.uniform_real(-1, 1), rng.uniform_real(-1, 1));
  DualBatch out;
  coadjoint_printed(act, in, out, Isa::Scalar);
  std::vector<double> psi_out(in.size()), u(in.size());
  psi(in, psi_out, Isa::Scalar);
  internal_energy(in, u, Isa::Scalar);
  for (std::size_t i = 0; i < in.size(); ++i) {
    const orbits::DualElement<double> mu{in.p[i], in.e[i], in.f[i], in.k[i], in.y[i]};
    const auto want = orbits::coadjoint_printed(act.x[i], act.t[i], act.zeta[i], mu);
    EXPECT_NEAR(out.p[i], want.p, 1e-12);
    EXPECT_NEAR(out.e[i], want.e, 1e-12);
    EXPECT_NEAR(out.f[i], want.f, 1e-12);
    EXPECT_NEAR(psi_out[i], orbits::psi(mu), 1e-12);
    if (in.k[i] == 0.0) {
      EXPECT_TRUE(std::isnan(u[i]));
    } else {
      EXPECT_NEAR(u[i], *orbits::invariants(mu, 0.0).U, 1e-9);
    }
  }
}

TEST(Kernels, VectorPathIsBitIdentical) {
  if (!is_supported(Isa::Avx2)) GTEST_SKIP() << "AVX2 not available";
  // Odd length exercises the tail loop.
  for (std::size_t n : {1u, 3u, 4u, 17u, 1001u}) {
    const auto in = random_batch(n, 40 + n);
    CounterRng rng(n);
    ActionBatch act;
    for (std::size_t i = 0; i < n; ++i)
      act.push_back(rng.uniform_real(-1, 1), rng.uniform_real(-1, 1), rng.uniform_real(-1, 1));
    DualBatch a, b;
    coadjoint_printed(act, in, a, Isa::Scalar);
    coadjoint_printed(act, in, b, Isa::Avx2);
    EXPECT_TRUE(same_bits(a.p, b.p) && same_bits(a.e, b.e) && same_bits(a.f, b.f) &&
                same_bits(a.k, b.k) && same_bits(a.y, b.y));
    for (auto fn : {&psi, &internal_energy, &internal_momentum}) {
      std::vector<double> s(n), v(n);
      fn(in, s, Isa::Scalar);
      fn(in, v, Isa::Avx2);
      EXPECT_TRUE(same_bits(s, v));
    }
  }
}
