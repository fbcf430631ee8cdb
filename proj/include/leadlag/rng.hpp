// leadlag/rng.hpp
// Deterministic random number generation with named substreams.
//
// Every stochastic component draws from its own substream, derived from a
// user seed and a stream tag via splitmix64. Streams used by the library:
//   grid_x, grid_y   observation-time generation for each asset
//   path_b           driving Brownian path on the first asset's grid
//   path_b_fill      conditional fill-in of the driving path at other times
//   path_w           independent Brownian path of the second asset
// Changing what one stream is used for never shifts the draws of another.
#pragma once

#include <cmath>
#include <cstdint>

namespace leadlag {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Order-sensitive combine of a seed with tags/indices.
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  return splitmix64(s);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix64(mix64(a, b), c);
}

enum class Stream : std::uint64_t {
  grid_x = 0x01,
  grid_y = 0x02,
  path_b = 0x03,
  path_b_fill = 0x04,
  path_w = 0x05,
};

inline std::uint64_t substream_seed(std::uint64_t seed, Stream s) {
  return mix64(seed, static_cast<std::uint64_t>(s));
}

// xoshiro256++ seeded through splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }
  Rng(std::uint64_t seed, Stream stream) : Rng(substream_seed(seed, stream)) {}

  std::uint64_t next_u64() {
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

  // uniform on (0, 1]; never exactly 0, safe inside log()
  double uniform01() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

  // standard normal, Marsaglia polar method (no trig, same result on any libm
  // with correctly rounded sqrt)
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, q;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    const double f = std::sqrt(-2.0 * std::log(q) / q);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  double gaussian(double mean, double sd) { return mean + sd * gaussian(); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace leadlag
