#ifndef ASVARLAB_RNG_HPP
#define ASVARLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace asvarlab {

// Stream derivation scheme: every consumer of randomness owns a stream
// derived from (root seed, component tag) via splitmix64 mixing.  Runners
// that must stay coupled across algorithm variants (e.g. the IS0 and ISJ
// base chains) share a tag.
namespace stream_tag {
inline constexpr std::uint64_t init = 1;
inline constexpr std::uint64_t base_chain = 2;
inline constexpr std::uint64_t v_draws = 3;
inline constexpr std::uint64_t generic = 4;
}  // namespace stream_tag

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class RngStream {
 public:
  RngStream(std::uint64_t root_seed, std::uint64_t tag)
      : gen_(splitmix64(root_seed ^ splitmix64(tag))) {}

  // Uniform on [0,1) with 53 random bits; avoids the libstdc++-specific
  // behaviour of uniform_real_distribution so paths are reproducible by
  // construction.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Inverse-CDF draw from an unnormalized nonnegative weight vector.
  int categorical(const Eigen::VectorXd& weights) {
    const double total = weights.sum();
    if (!(total > 0.0)) throw std::runtime_error("categorical: zero total mass");
    double u = uniform() * total;
    for (int i = 0; i < weights.size(); ++i) {
      u -= weights[i];
      if (u < 0.0) return i;
    }
    return static_cast<int>(weights.size()) - 1;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace asvarlab

#endif
