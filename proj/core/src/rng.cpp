#include "interlace/rng.hpp"

#include <cmath>

namespace interlace {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeedSpec SeedSpec::sub(std::uint64_t index) const {
  return SeedSpec{splitmix64(master ^ splitmix64(stream)), index};
}

RandomStream::RandomStream(SeedSpec seed)
    : engine_(splitmix64(splitmix64(seed.master) ^ splitmix64(seed.stream * kGolden + 1))) {}

double RandomStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::exponential(double rate) {
  // uniform01() < 1, so the log argument stays positive.
  return -std::log1p(-uniform01()) / rate;
}

double RandomStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  have_spare_ = true;
  return u * m;
}

}  // namespace interlace
