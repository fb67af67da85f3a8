#pragma once

#include <cstdint>

namespace remop {

// Deterministic xoshiro256++ generator seeded through splitmix64.
// Identical seed gives an identical stream on every platform; all
// randomized behavior in the library flows through this type.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  // Uniform double in [0, 1) with 53 bits of entropy.
  double uniform();

  // Standard normal via Box-Muller on the uniform stream.
  double normal();

  // Uniform integer in [0, n). n must be nonzero.
  uint64_t below(uint64_t n);

  // Derived generator with an independent-looking stream. Used for
  // per-task and per-epoch sub-streams.
  Rng fork(uint64_t stream) const;

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t state_[4];
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64 step, exposed because token hashing and seed derivation
// reuse it.
uint64_t splitmix64(uint64_t& state);

}  // namespace remop
