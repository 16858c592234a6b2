#pragma once

#include <cstdint>
#include <string_view>

namespace qrep {

// Deterministic 64-bit generator (xoshiro256**). Streams are derived from a
// global seed plus a component name and a stream key, so adding a new
// consumer of randomness never perturbs the draws seen by another component.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Splitting rule: state is seeded from splitmix64 applied to
  // (seed ^ fnv1a64(component) ^ key). Documented in the README.
  static Rng stream(uint64_t seed, std::string_view component, uint64_t key = 0);

  uint64_t bits();

  // Uniform in [0, 1), 53-bit resolution.
  double uniform();

  // Uniform integer in [0, n), rejection-sampled so the result is unbiased
  // and identical across platforms.
  uint32_t below(uint32_t n);

 private:
  uint64_t s_[4];
};

uint64_t fnv1a64(std::string_view s);

}  // namespace qrep
