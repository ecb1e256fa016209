#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>

#include "eigml/errors.hpp"

namespace eigml {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-sensitive key mixing for deriving independent substreams, e.g.
// mix_seed(seed, {epoch, step}). Every stochastic component in the project
// draws from a substream keyed this way, so runs are reproducible and
// resumable without serializing generator state mid-run.
inline uint64_t mix_seed(uint64_t seed, std::initializer_list<uint64_t> key) {
  uint64_t h = splitmix64(seed);
  for (uint64_t k : key) h = splitmix64(h ^ (k + 0x9e3779b97f4a7c15ULL));
  return h;
}

// mt19937_64 with pinned mappings to uniform/normal/bernoulli draws.
// std::*_distribution is implementation-defined, so we map raw bits
// ourselves; frozen test values stay valid across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {}

  uint64_t next_u64() { return engine_(); }

  // [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller, no cached spare (keeps the state serializable as the engine alone)
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // [0, n), Lemire's multiply-shift; slight bias is irrelevant for n << 2^64
  int randint(int n) {
    if (n <= 0) throw ValidationError("randint requires n > 0");
    return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                             static_cast<unsigned __int128>(n)) >>
                            64);
  }

  std::string state_string() const {
    std::ostringstream os;
    os << engine_;
    return os.str();
  }

  void set_state(const std::string& s) {
    std::istringstream is(s);
    is >> engine_;
    if (is.fail()) throw ValidationError("bad rng state string");
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eigml
