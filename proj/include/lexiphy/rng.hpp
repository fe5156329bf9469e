#ifndef LEXIPHY_RNG_HPP
#define LEXIPHY_RNG_HPP

#include <cmath>
#include <cstdint>

namespace lexiphy {

// splitmix64 stream. Streams can be derived from a master seed plus two
// key words, so every (edge, meaning) pair in the simulator gets its own
// independent, schedule-free sequence.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static SplitMix64 keyed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = mix(seed + 0x9e3779b97f4a7c15ull);
    s = mix(s ^ (a + 0x9e3779b97f4a7c15ull));
    s = mix(s ^ (b + 0x9e3779b97f4a7c15ull));
    return SplitMix64(s);
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  double next_exponential(double rate) {
    return -std::log(1.0 - next_unit()) / rate;
  }

 private:
  std::uint64_t state_;
};

}  // namespace lexiphy

#endif
