#pragma once

#include <cstdint>
#include <random>

namespace cpd {

std::uint64_t splitmix64(std::uint64_t z);

// Child-seed derivation for batch runs: one independent stream per item,
// regardless of worker scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// mt19937_64 behind fixed uniform mappings, so a given seed produces the
// same draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_(); }

  // [0,1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // [0,n), rejection sampled to stay unbiased.
  std::uint64_t uniform_below(std::uint64_t n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace cpd
