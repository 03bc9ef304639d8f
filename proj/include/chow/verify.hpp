#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chow/chow_class.hpp"
#include "chow/pushforward.hpp"

namespace chow {

struct VerifyReport {
  std::string suite;
  int checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void check(bool passed, const std::string& what);
  void merge(const VerifyReport& other);
};

/// Closed form against the Segre-class oracle on `cases` random bundles
/// (base dim <= 3, rank <= 4, |a_i| <= 4), each on an unreduced zeta
/// polynomial and on its normal form.
VerifyReport verify_oracle(std::uint64_t seed, int cases,
                           IndexConvention convention = IndexConvention::Proof);

/// Oracle on [0, a, b] with a, b symbolic, instantiated afterwards, against
/// the closed form on the instantiated bundle. The first case uses (2, 3).
VerifyReport verify_symbolic_consistency(std::uint64_t seed, int cases);

/// c(E) s(E) = 1, the bundle relation, projection formula, twist invariance
/// and parser round-trip.
VerifyReport verify_properties(std::uint64_t seed);

/// Every golden value: the E8 example, divisor relations, integrands,
/// plane-curve data, fourfold tables and the K3 check.
VerifyReport verify_tables();

/// One plane-curve column: (a, b, d, e) as expressions in f and the
/// multiplier m of f L / (1 + f L) c(B).
struct PlaneCurveColumn {
  std::string a, b, d, e;
  int m;
};
const std::vector<PlaneCurveColumn>& plane_curve_columns();

/// phi_* c(Y_w) minus m f L / (1 + f L) c(B) on a formal threefold.
ChowClass plane_curve_column_residual(const PlaneCurveColumn& column);

/// Euler characteristic of the E8 fibration over P^1 with L = O(2), by
/// integration and by pushing down through the oracle only.
ParamPoly k3_euler_integrated();
ParamPoly k3_euler_oracle();

std::string format(const ZetaPolynomial& f);

}  // namespace chow
