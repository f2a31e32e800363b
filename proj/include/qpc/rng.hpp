// Seeded randomness. All randomness flows through explicitly passed
// generators; parallel or out-of-order execution stays reproducible
// because per-stream seeds are derived from (master_seed, stream_index)
// alone, never from call order.
#pragma once

#include <cstdint>
#include <random>

namespace qpc {

using Rng = std::mt19937_64;

// SplitMix64 step (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream seed = two SplitMix64 outputs from a state that mixes the
// master seed with the stream index.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                        std::uint64_t stream_index) {
  std::uint64_t state = master_seed ^ (0xA0761D6478BD642FULL * (stream_index + 1));
  std::uint64_t a = splitmix64(state);
  std::uint64_t b = splitmix64(state);
  return a ^ (b << 1);
}

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

inline Rng stream_rng(std::uint64_t master_seed, std::uint64_t stream_index) {
  return Rng{derive_stream_seed(master_seed, stream_index)};
}

}  // namespace qpc
