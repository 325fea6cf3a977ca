#include "rng.hpp"

#include <cmath>
#include <cstring>

namespace glab {

double RngStream::next_exponential(double rate) {
  double u;
  do {
    u = next_double();
  } while (u <= 0.0);
  return -std::log(u) / rate;
}

double RngStream::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1, u2;
  do {
    u1 = next_double();
  } while (u1 <= 0.0);
  u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

uint64_t fnv1a64(const void* data, size_t len, uint64_t h) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t fnv1a64_str(std::string_view s, uint64_t h) { return fnv1a64(s.data(), s.size(), h); }

uint64_t derive_seed(uint64_t master, std::string_view tag, uint64_t index) {
  uint64_t h = fnv1a64(&master, sizeof(master));
  h = fnv1a64_str(tag, h);
  h = fnv1a64(&index, sizeof(index), h);
  // finalize so that nearby indices map to well-separated states
  uint64_t z = h + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace glab
