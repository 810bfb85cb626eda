#include "scing/random.hpp"

#include <cmath>
#include <cstring>
#include <numbers>

#include "scing/errors.hpp"

namespace scing {

namespace {

// splitmix64 step; also used as the mixing finalizer for child derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), state_(mix64(seed ^ 0xA076'1D64'78BD'642FULL)) {}

RandomStream RandomStream::child(std::uint64_t tag) const {
  return RandomStream(mix64(seed_ ^ mix64(tag ^ 0xE703'7ED1'A0B4'28DBULL)));
}

std::uint64_t RandomStream::next_u64() {
  state_ = mix64(state_);
  return state_;
}

double RandomStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double RandomStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 kept strictly positive so log() is finite.
  double u1 = static_cast<double>((next_u64() >> 11) | 1ULL) * 0x1.0p-53;
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::int64_t RandomStream::uniform_int(std::int64_t n) {
  if (n <= 0) throw ConfigError("uniform_int: bound must be positive, got " + std::to_string(n));
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return static_cast<std::int64_t>(x % bound);
}

bool RandomStream::bernoulli(double p) { return uniform() < p; }

std::array<std::uint64_t, 4> RandomStream::state() const {
  std::uint64_t spare_bits = 0;
  std::memcpy(&spare_bits, &spare_, sizeof(double));
  return {seed_, state_, has_spare_ ? 1ULL : 0ULL, spare_bits};
}

RandomStream RandomStream::restore(const std::array<std::uint64_t, 4>& s) {
  RandomStream r;
  r.seed_ = s[0];
  r.state_ = s[1];
  r.has_spare_ = s[2] != 0;
  std::memcpy(&r.spare_, &s[3], sizeof(double));
  return r;
}

}  // namespace scing
