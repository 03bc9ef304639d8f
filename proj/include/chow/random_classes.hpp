#pragma once

#include <cstdint>
#include <random>

#include "chow/chow_class.hpp"
#include "chow/pushforward.hpp"
#include "chow/tower.hpp"

namespace chow {

/// Seeded generator of small random towers and classes for property checks.
class ClassGenerator {
 public:
  explicit ClassGenerator(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);

  /// Formal base of dimension <= max_base_dim with divisor "L", then one
  /// bundle of rank 1..max_rank with exponents in [-max_exp, max_exp]. With
  /// `nonzero`, at least one exponent is nonzero.
  TowerPtr random_bundle(int max_base_dim, int max_rank, int max_exp, bool nonzero = true);

  /// Sum of up to `max_terms` random monomials with coefficients in
  /// [-max_coeff, max_coeff]; parameters are mixed in when declared.
  ChowClass random_class(const TowerPtr& tower, int max_terms = 4, int max_coeff = 3);
  /// random_class with its degree-0 part forced to a nonzero integer.
  ChowClass random_unit(const TowerPtr& tower);
  /// sum beta_i zeta^i for i <= degree with random base coefficients.
  ZetaPolynomial random_zeta_polynomial(const TowerPtr& bundle, int degree);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace chow
