#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace rmx {

// Counter-based stream: output k is a SplitMix64 finalisation of key + k*gamma.
// Substreams are keyed by hashing (key, index), so sample i of a run never
// depends on how many samples other threads consumed.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream() : RngStream(0) {}
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();
  RngStream substream(std::uint64_t index) const;

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

  double uniform();  // [0, 1)
  double normal();   // N(0, 1)
  double gamma(double shape, double scale = 1.0);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x);
// Stable 64-bit FNV-1a hash, used to derive per-test seeds from names.
std::uint64_t hash_name(const char* s);

// Draws a seed from the OS entropy source.
std::uint64_t entropy_seed();

// Worker count: hardware concurrency, capped by RMX_THREADS when set.
unsigned default_threads();

}  // namespace rmx
