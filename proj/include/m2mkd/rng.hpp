#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace m2mkd {

// FNV-1a over raw bytes. Used for seed derivation and file/tree content hashes.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(std::string_view s);

// Deterministic sub-stream seed: mixes a base seed with a textual tag
// (e.g. "pair", index) so parallel jobs never share an RNG stream.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t index = 0);

// Self-contained splitmix64 generator. Bit-reproducible on every platform,
// unlike the std distributions whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // uniform in [0, 1)
  double uniform();

  // standard normal via Box-Muller (caches the spare value)
  double normal();

  // truncated normal: resample until |z| <= bound, then scale by stddev
  double trunc_normal(double stddev, double bound = 2.0);

  // uniform integer in [0, n), rejection-sampled (no modulo bias)
  std::size_t uniform_index(std::size_t n);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace m2mkd
