#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace dykonem {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// FNV-1a, mixed through splitmix so short strings spread over the full range.
inline uint64_t hash_bytes(std::string_view s, uint64_t seed = 0) {
  uint64_t h = 0xcbf29ce484222325ull ^ seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return splitmix64(h);
}

// Seed derivation for named parameter tensors, sketch pairs, etc. Stable
// across platforms and insertion order.
inline uint64_t derive_seed(uint64_t master, std::string_view tag) {
  return splitmix64(master ^ hash_bytes(tag));
}
inline uint64_t derive_seed(uint64_t master, std::string_view tag, uint64_t k) {
  return splitmix64(derive_seed(master, tag) ^ splitmix64(k));
}

// mt19937_64 with hand-rolled distributions; std:: distributions are not
// bit-portable across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n), n > 0; multiply-shift map (bias negligible for n << 2^64).
  int64_t uniform_int(int64_t n) {
    return static_cast<int64_t>(
        (static_cast<__uint128_t>(next_u64()) * static_cast<__uint128_t>(n)) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  int rademacher() { return (next_u64() >> 63) ? 1 : -1; }

  // Box-Muller.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Counter-based Rademacher entry: ±1 as a pure function of (seed, row, col).
// Lets huge projection matrices be streamed instead of materialized.
inline double rademacher_entry(uint64_t seed, int64_t row, int64_t col) {
  uint64_t h = splitmix64(seed ^ splitmix64((static_cast<uint64_t>(row) << 32) ^
                                            static_cast<uint64_t>(col)));
  return (h >> 63) ? 1.0 : -1.0;
}

}  // namespace dykonem
