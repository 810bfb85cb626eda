#pragma once

#include <array>
#include <cstdint>

namespace scing {

/// Deterministic counter-style random stream. Independent child streams are
/// derived from (seed, tag) pairs so that parallel call sites reproduce
/// bit-identically regardless of draw order elsewhere.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Derived stream; depends only on this stream's seed and the tag,
  /// not on how much of this stream has been consumed.
  RandomStream child(std::uint64_t tag) const;

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller (cached second draw).
  double gaussian();
  /// Uniform integer in [0, n); n must be positive.
  std::int64_t uniform_int(std::int64_t n);
  bool bernoulli(double p);

  /// Serializable state: seed, counter state, spare-gaussian flag and bits.
  std::array<std::uint64_t, 4> state() const;
  static RandomStream restore(const std::array<std::uint64_t, 4>& s);

 private:
  RandomStream() = default;
  std::uint64_t seed_{0};
  std::uint64_t state_{0};
  bool has_spare_{false};
  double spare_{0.0};
};

}  // namespace scing
