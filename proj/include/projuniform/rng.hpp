#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace projuniform {

// Deterministic splitmix64 stream.  All randomness in the library flows
// through explicit RngStream values so results are reproducible and
// independent of any execution schedule.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1].
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller; one spare value is cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

namespace detail {
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t mix(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace detail

// Stream derivation: hash of (seed, purpose label, indices).  Streams for
// distinct (label, i, j, k) tuples are independent for sampling purposes,
// which makes parallel schedules irrelevant to the output values.
inline RngStream derive_stream(std::uint64_t seed, std::string_view label,
                               std::uint64_t i = 0, std::uint64_t j = 0,
                               std::uint64_t k = 0) {
  std::uint64_t h = detail::mix(seed ^ detail::fnv1a(label));
  h = detail::mix(h ^ (i + 0x9e3779b97f4a7c15ull));
  h = detail::mix(h ^ (j + 0xc2b2ae3d27d4eb4full));
  h = detail::mix(h ^ (k + 0x165667b19e3779f9ull));
  return RngStream(h);
}

}  // namespace projuniform
