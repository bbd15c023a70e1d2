#ifndef ORBITKIT_RNG_HPP
#define ORBITKIT_RNG_HPP

#include <cstdint>
#include <random>

namespace orbitkit {

/// Deterministic uniform sampling on top of mt19937_64. std::uniform_*
/// distributions are not pinned down by the standard, so byte-identical
/// reruns draw directly from the engine instead.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  /// Uniform double in [lo, hi) with 53-bit resolution.
  double real(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  std::uint64_t raw() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

} // namespace orbitkit

#endif
