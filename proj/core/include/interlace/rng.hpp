#pragma once

#include <cstdint>
#include <random>

namespace interlace {

// Names one reproducible randomness stream. Identical (master, stream)
// replays bit-identically; distinct stream ids give independent streams.
struct SeedSpec {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  // Derived stream for per-slot / per-replica substreams.
  SeedSpec sub(std::uint64_t index) const;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

// Pinned generator: std::mt19937_64 keyed by a splitmix64 hash of
// (master, stream). All samplers below are hand-rolled on top of the raw
// 64-bit output so results do not depend on libstdc++ distribution
// internals.
class RandomStream {
 public:
  explicit RandomStream(SeedSpec seed);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01();

  // Exponential with the given rate (mean 1/rate).
  double exponential(double rate);

  // Standard normal via Box-Muller; second value cached.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace interlace
