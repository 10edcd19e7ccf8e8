#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace hda {

// splitmix64 (Vigna). Used both as the per-stream generator and, applied
// twice, as the stream-derivation hash, so that the substream for trial i is
// a pure function of (seed, i) and partitioning trials across workers cannot
// change any draw.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Gaussian substream: Box-Muller over splitmix64 uniforms.
class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint64_t stream_index) {
    std::uint64_t s = seed;
    (void)splitmix64_next(s);
    s ^= 0xD1B54A32D192ED03ULL * (stream_index + 1);
    (void)splitmix64_next(s);
    state_ = s;
  }

  // uniform on (0, 1]; never 0 so log() below is safe
  double uniform() {
    return (static_cast<double>(splitmix64_next(state_) >> 11) + 1.0) * 0x1.0p-53;
  }

  // standard normal
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double stddev) { return stddev * normal(); }

 private:
  std::uint64_t state_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace hda
