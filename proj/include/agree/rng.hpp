#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace agree {

// Finalizer step of the splitmix64 generator, used to expand one master seed
// into well-separated stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for stream `stream` of a run keyed by `master`. Fixed for all time:
// fixtures and null distributions depend on this exact mapping.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

/// Portable deterministic random source: a std::mt19937_64 engine (whose
/// output sequence is fixed by the standard) with locally defined sampling
/// helpers, so results are bit-identical across platforms and library
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1), 53 random bits.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound); unbiased via rejection. bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t excess = (0 - bound) % bound;  // 2^64 mod bound
    const std::uint64_t accept_limit = 0 - excess;     // multiple of bound
    std::uint64_t x = engine_();
    while (accept_limit != 0 && x >= accept_limit) x = engine_();
    return x % bound;
  }

  // Fisher-Yates over n slots addressed through swap(i, j).
  template <typename SwapFn>
  void shuffle(std::size_t n, SwapFn&& swap) {
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      if (j != i - 1) swap(i - 1, j);
    }
  }

  // Index into a discrete distribution given its cumulative weights
  // (nondecreasing, last entry ~1). Ties resolve to the first bucket whose
  // cumulative weight exceeds the draw.
  int pick(const Eigen::VectorXd& cumulative) {
    const double u = next_unit();
    for (Eigen::Index i = 0; i < cumulative.size(); ++i) {
      if (u < cumulative[i]) return static_cast<int>(i);
    }
    return static_cast<int>(cumulative.size()) - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace agree
