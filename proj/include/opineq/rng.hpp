#ifndef OPINEQ_RNG_HPP
#define OPINEQ_RNG_HPP

#include <cmath>
#include <cstdint>

namespace opineq {

// splitmix64 finalizer. All randomness in the tool flows through this mixer,
// so trial seeds can be derived as mix(seed, stream, index) and concurrent
// execution orders cannot change any sampled value.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Documented seed derivation: mix the base seed with a stream id (e.g. a
// family hash) and a trial index. Echoed in reports.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index) {
  return mix64(seed ^ mix64(stream * 0xD1342543DE82EF95ull + index));
}

inline std::uint64_t hash_str(const char* s) {
  std::uint64_t h = 0xCBF29CE484222325ull; // FNV-1a
  for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001B3ull;
  return h;
}

// Deterministic generator: a splitmix64 stream. Not cryptographic; plenty for
// sampling test matrices.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  // Box-Muller; implemented by hand so results do not depend on the standard
  // library's distribution internals.
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0x1.0p-60) u1 = 0x1.0p-60;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  int uniform_int(int lo, int hi) { // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

} // namespace opineq

#endif
