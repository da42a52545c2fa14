#include "rmx/rng.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace rmx {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_name(const char* s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (; *s; ++s) {
    h ^= static_cast<unsigned char>(*s);
    h *= 0x100000001b3ULL;
  }
  return h;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed + kGamma) ^ mix64(stream * kGamma + 0x632BE59BD9B4E019ULL))) {}

RngStream::result_type RngStream::operator()() { return mix64(key_ + (++counter_) * kGamma); }

RngStream RngStream::substream(std::uint64_t index) const {
  RngStream s;
  s.key_ = mix64(key_ ^ mix64((index + 1) * 0xD1B54A32D192ED03ULL));
  s.counter_ = 0;
  return s;
}

double RngStream::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double RngStream::normal() {
  std::normal_distribution<double> d;
  return d(*this);
}

double RngStream::gamma(double shape, double scale) {
  std::gamma_distribution<double> d(shape, scale);
  return d(*this);
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* cap = std::getenv("RMX_THREADS")) {
    try {
      long v = std::stol(cap);
      if (v >= 1 && static_cast<unsigned long>(v) < n) n = static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return n;
}

}  // namespace rmx
