#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qacc {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Absolute tolerance for algebraic identities (unitarity, trace preservation, ...).
inline constexpr double kTolAlg = 1e-10;
// Tolerance for Monte Carlo-facing comparisons, where sampling error dominates.
inline constexpr double kTolMC = 1e-6;

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline int log2_exact(int n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("dimension is not a power of two");
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random stream. Child streams derived from the *seed* (not the
// mutable state), so derivation order never depends on how much was consumed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

  uint64_t seed() const { return seed_; }
  uint64_t next() { return eng_(); }

  // Uniform integer in [0, n).
  int uniform_int(int n) {
    if (n <= 0) throw std::invalid_argument("uniform_int: n must be positive");
    uint64_t bound = ~uint64_t(0) - ~uint64_t(0) % uint64_t(n);
    uint64_t v;
    do {
      v = next();
    } while (v >= bound);
    return int(v % uint64_t(n));
  }

  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() & 1) != 0; }

  double normal() {
    // Box-Muller; spare value cached.
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 <= 1e-300) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

  Rng derive(uint64_t tag) const { return Rng(splitmix64(seed_ ^ (0xa5a5a5a5a5a5a5a5ULL + tag * 0x9e3779b97f4a7c15ULL))); }

 private:
  uint64_t seed_;
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qacc
