// SplitMix64: tiny deterministic generator with cheap named substreams.
// Verification reports must be byte-identical across runs and platforms,
// so we do not rely on std::uniform_int_distribution.
#pragma once

#include <cstdint>
#include <string_view>

namespace exalg {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough value in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Inclusive range.
  long long in_range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream per property name, so adding a property
// never perturbs the draws of earlier ones.
inline SplitMix64 stream_for(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return SplitMix64(seed ^ h);
}

}  // namespace exalg
