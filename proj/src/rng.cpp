#include "aristotle/rng.hpp"

namespace aristotle {

namespace {

// SplitMix64 finalizer.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterRng::at(std::uint64_t index) const {
  return mix(seed_ + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

std::int64_t CounterRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

double CounterRng::uniform_real(double lo, double hi) {
  const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Rational CounterRng::rational(std::int64_t max_num, std::int64_t max_den) {
  const auto num = uniform_int(-max_num, max_num);
  const auto den = uniform_int(1, max_den);
  return Rational(static_cast<long>(num), static_cast<long>(den));
}

}  // namespace aristotle
