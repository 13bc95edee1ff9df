#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace teamfit {

// mt19937_64 stream with hand-built uniforms. std::uniform_*_distribution is
// implementation-defined, so draws go through fixed bit manipulation to keep
// sequences identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, 1), 53 bits of precision.
  double canonical() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return draw % bound;
  }

  int below_int(int bound) {
    return static_cast<int>(below(static_cast<std::uint64_t>(bound)));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace teamfit
