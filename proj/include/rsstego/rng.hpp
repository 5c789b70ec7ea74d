#pragma once

#include <cstdint>
#include <limits>

namespace rsstego {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// SplitMix64 (Steele, Lea, Flood). Small, seedable and fully specified, so
/// golden traces reproduce bit for bit on any platform. Bounded draws use
/// rejection sampling here rather than std::uniform_int_distribution, whose
/// output is implementation-defined.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }
  constexpr result_type operator()() { return next(); }

  /// Uniform in [0, bound). bound must be nonzero.
  constexpr std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

/// Independent sub-streams of one master seed. Each consumer (data, message,
/// key positions, channel) draws from its own domain so that changing how
/// many values one consumer draws never perturbs another.
enum class StreamDomain : std::uint64_t {
  data = 1,
  message = 2,
  positions = 3,
  channel = 4,
};

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, StreamDomain domain) {
  const auto d = static_cast<std::uint64_t>(domain);
  return mix64(mix64(seed ^ (d * 0xD6E8FEB86659FD93ULL)) + index * 0x9E3779B97F4A7C15ULL);
}

constexpr SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index, StreamDomain domain) {
  return SplitMix64(derive_seed(seed, index, domain));
}

}  // namespace rsstego
