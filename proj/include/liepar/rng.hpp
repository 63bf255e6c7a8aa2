#ifndef LIEPAR_RNG_HPP
#define LIEPAR_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace liepar {

/// SplitMix64 generator. Hand-rolled so that report bytes are identical
/// across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi], lo <= hi.
  long uniform_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a ^ (b + 0x9E3779B97F4A7C15ULL + (a << 6) + (a >> 2));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Stream seed for one trial of one check. Trials are independent streams so
/// results do not depend on execution order.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view check_id, int n,
                                 const std::vector<int>& levi_parts, long trial) {
  std::uint64_t s = mix_seed(master, hash_string(check_id));
  s = mix_seed(s, static_cast<std::uint64_t>(n));
  for (int p : levi_parts) s = mix_seed(s, 0x1000 + static_cast<std::uint64_t>(p));
  return mix_seed(s, static_cast<std::uint64_t>(trial));
}

}  // namespace liepar

#endif
