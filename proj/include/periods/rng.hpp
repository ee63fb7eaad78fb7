#ifndef PERIODS_RNG_HPP
#define PERIODS_RNG_HPP

#include <cstdint>
#include <initializer_list>

namespace periods {

// SplitMix64 stream. Fully specified arithmetic, so sequences are identical
// across platforms and compilers; std::uniform_int_distribution is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Inclusive bounds. Modulo bias is irrelevant for sampling small ranges.
  int uniform_int(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

 private:
  std::uint64_t state_;
};

// Counter-based seed derivation: every (trial, attempt, stream) gets its own
// independent generator, so reports never depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = seed ^ 0xD1B54A32D192ED03ull;
  for (std::uint64_t v : path) {
    h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h *= 0xFF51AFD7ED558CCDull;
    h ^= h >> 33;
  }
  return h;
}

}  // namespace periods

#endif
