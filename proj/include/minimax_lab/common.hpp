#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace minimax_lab {

/// Bad arguments or inconsistent data (wrong length, unknown input point, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation would enumerate more items than the configured budget allows.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum number of items any exhaustive enumeration may visit (datasets,
/// hypercube corners, tabular class members). Defaults to 1e6; the
/// MINIMAX_LAB_BUDGET environment variable overrides it.
std::uint64_t enumeration_budget();

/// Programmatic override; pass nullopt to fall back to the environment/default.
void set_enumeration_budget(std::optional<std::uint64_t> value);

/// Hard cap on domain sizes for shattering searches (subset enumeration is
/// exponential in the domain size).
inline constexpr std::size_t kMaxShatterDomain = 12;

/// Hard cap on the number of variable nodes for exhaustive 2^l inference.
inline constexpr int kMaxEnumerationNodes = 12;

/// Deterministic RNG. Mappings to doubles/integers are spelled out by hand so
/// streams do not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace minimax_lab
