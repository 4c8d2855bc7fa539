#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace nlmf {

// splitmix64 finalizer, used to decorrelate derived seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class StreamTag : std::uint64_t { Input = 1, Noise = 2 };

// Seed of the (run, node, stream) substream of a master seed. Substreams
// depend only on these indices, never on scheduling, so parallel Monte Carlo
// runs reproduce the serial results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t run,
                                 std::uint64_t node, StreamTag tag) {
  std::uint64_t s = mix64(master);
  s = mix64(s ^ run);
  s = mix64(s ^ node);
  s = mix64(s ^ static_cast<std::uint64_t>(tag));
  return s;
}

// mt19937_64 with explicit uniform and Gaussian draws. std::normal_distribution
// is implementation-defined, so Gaussian variates come from Box-Muller on raw
// 53-bit uniforms; a fixed seed gives the same sequence everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // [0, 1)
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace nlmf
