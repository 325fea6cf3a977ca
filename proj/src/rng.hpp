#pragma once

#include <cstdint>
#include <string_view>

namespace glab {

// Splittable counter-based stream: SplitMix64 over a derived seed.
// Streams for distinct (master, tag, index) triples are independent for
// all practical purposes; replicas never share a stream.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53-bit resolution
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n), n > 0
  uint64_t next_below(uint64_t n) {
    // multiply-shift; bias < 2^-64, irrelevant at lab scale
    return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

  double next_exponential(double rate);
  double next_gaussian();  // Box-Muller, one value per call

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ull);
uint64_t fnv1a64_str(std::string_view s, uint64_t h = 0xcbf29ce484222325ull);

// derived seed = hash(master, purpose tag, replica index)
uint64_t derive_seed(uint64_t master, std::string_view tag, uint64_t index);

inline RngStream derive_stream(uint64_t master, std::string_view tag, uint64_t index) {
  return RngStream(derive_seed(master, tag, index));
}

}  // namespace glab
