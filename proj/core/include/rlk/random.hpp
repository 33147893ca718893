#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rlk/field.hpp"

namespace rlk {

/// Deterministic sampler for polynomial-identity testing. Same seed, same stream.
/// Rational draws have numerator and denominator bounded by `height`.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  static constexpr unsigned kDefaultHeight = 100;

  Value value(const FieldSpec& spec, unsigned height = kDefaultHeight);
  Value nonzero(const FieldSpec& spec, unsigned height = kDefaultHeight);

  /// Draws a value outside `excluded`. Throws ExhaustedField when the excluded
  /// set covers all of F_p.
  Value outside(const FieldSpec& spec, const std::vector<Value>& excluded,
                unsigned height = kDefaultHeight);

  std::uint64_t uniform(std::uint64_t bound);  // in [0, bound)
  bool coin() { return uniform(2) == 1; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rlk
