#ifndef JK_PRNG_HPP
#define JK_PRNG_HPP

/**
 * Deterministic pseudo-random number generation.
 *
 * SplitMix64 with the standard constants (Steele, Lea & Flood; the same
 * finalizer as java.util.SplittableRandom). Chosen because it is tiny,
 * well documented, and its output for a given seed is a fixed published
 * sequence — every "random" object in this library is a pure function of
 * (seed, consumption order), so runs are bit-reproducible.
 */

#include <cstdint>

namespace jk {

/** One SplitMix64 step: advances the state and returns the next output. */
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/**
 * Derives an independent stream seed from (seed, tag). Used to split one
 * user-facing seed into the per-object streams (e.g. the X and A points of
 * one random pair, or successive retry attempts) without correlating them.
 */
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t state = seed ^ (0x9E3779B97F4A7C15ULL * (tag + 1));
  return splitmix64_next(state);
}

/** Sequential SplitMix64 generator. */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : m_state(seed) {}

  std::uint64_t next() { return splitmix64_next(m_state); }

  /**
   * Uniform integer in [lo, hi], endpoints included. Exact (rejection
   * sampling, no modulo bias); draws a deterministic, seed-dependent number
   * of raw outputs.
   */
  long next_in_range(long lo, long hi) {
    if (lo > hi) {
      lo = hi;
    }
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) {  // full 64-bit range
      return static_cast<long>(next());
    }
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t draw = next();
    while (draw >= limit) {
      draw = next();
    }
    return lo + static_cast<long>(draw % span);
  }

 private:
  std::uint64_t m_state;
};

}  // namespace jk

#endif  // JK_PRNG_HPP
