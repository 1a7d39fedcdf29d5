#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace aemod {

/// SplitMix64 step; used for seeding and for deriving independent streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// xoshiro256++ generator. All randomized components of the library draw
/// from this generator so runs are reproducible bit-for-bit across
/// platforms (std:: distributions are implementation-defined and are
/// deliberately not used).
///
/// Stream splitting: a stream is identified by (seed, stream_id); the four
/// words of state are produced by iterating SplitMix64 from
/// seed ^ (stream_id * 0x9e3779b97f4a7c15). Replication r of a simulation
/// uses stream_id r; solver start s uses stream_id s.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream_id = 0) {
    std::uint64_t sm = seed ^ (stream_id * 0x9e3779b97f4a7c15ull);
    for (auto& w : state_) w = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, bound) by rejection-free modulo of a 64-bit
  /// draw; bias is negligible for the small bounds used here.
  std::uint64_t uniform_int(std::uint64_t bound) { return next_u64() % bound; }

  /// Exponential variate with the given rate, by inversion.
  double exponential(double rate) {
    // 1 - uniform01() is in (0, 1], so the log argument never vanishes.
    return -std::log(1.0 - uniform01()) / rate;
  }

  /// Bernoulli trial with success probability prob.
  bool bernoulli(double prob) { return uniform01() < prob; }

  /// Index draw from an unnormalized weight vector (linear CDF scan).
  int categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform01() * total;
    for (int i = 0; i + 1 < static_cast<int>(weights.size()); ++i) {
      u -= weights[i];
      if (u < 0.0) return i;
    }
    return static_cast<int>(weights.size()) - 1;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4]{};
};

}  // namespace aemod
