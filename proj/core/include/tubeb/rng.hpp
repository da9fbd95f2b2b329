#pragma once

#include <cmath>
#include <cstdint>

namespace tubeb {

/**
 * Deterministic per-sample random substream.
 *
 * Sample k of a run draws from SampleStream(seed, k): an xoshiro256++ state
 * seeded through splitmix64 from (seed, k). Substreams are independent of how
 * samples are partitioned across workers, so any parallel schedule reproduces
 * the serial stream bit for bit.
 */
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    for (auto& word : s_) word = splitmix64(x);
    has_cached_normal_ = false;
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /** Uniform double in the open interval (0, 1). */
  double u01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  /** Standard normal via Box-Muller (pairs cached). */
  double normal() {
    if (has_cached_normal_) {
      has_cached_normal_ = false;
      return cached_normal_;
    }
    const double u1 = u01();
    const double u2 = u01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_normal_ = r * std::sin(a);
    has_cached_normal_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace tubeb
