#pragma once

#include <vector>

#include "chow/chow_class.hpp"
#include "chow/param_poly.hpp"
#include "chow/rational.hpp"
#include "chow/tower.hpp"

namespace chow {

/// c(E) = prod (1 + d_i L)^k_i over the distinct nonzero exponents d_i.
struct BundleFactorization {
  struct Factor {
    ParamPoly exponent;
    int multiplicity = 0;
  };
  std::vector<Factor> factors;
  int zero_count = 0;
  int rank = 0;
  /// All exponents are parameter-free.
  bool numeric = true;

  /// The closed form needs numeric exponents and at least one nonzero one.
  bool closed_form_applicable() const { return numeric && !factors.empty(); }
};

BundleFactorization factorize_bundle(const Tower& bundle);

/// Coefficients q_ij with 1/prod(1 + d_i t)^k_i = sum q_ij / (1 + d_i t)^j.
struct PartialFraction {
  struct Entry {
    Rational exponent;  // d_i
    int power = 1;      // j
    Rational coefficient;
  };
  std::vector<Entry> entries;
};

/// Solves for the q_ij by exact elimination on series coefficients. Throws
/// InapplicableError for symbolic or empty factorizations.
PartialFraction partial_fractions(const BundleFactorization& f);

/// Series coefficients of prod (1 + d_i t)^-k_i and of the decomposition, up
/// to t^order inclusive; used to check the decomposition.
std::vector<Rational> inverse_chern_series(const BundleFactorization& f, int order);
std::vector<Rational> partial_fraction_series(const PartialFraction& pf, int order);

/// Segre classes s_0..s_order of E, as classes on the base.
std::vector<ChowClass> segre_classes(const Tower& bundle, int order);

/// A polynomial sum beta_i zeta^i in the hyperplane class of a bundle level
/// with coefficients on the base. Unlike ChowClass it is not reduced by the
/// bundle relation, only truncated by total degree, so it models the ring
/// A(B)[zeta] the representatives f_C live in.
class ZetaPolynomial {
 public:
  ZetaPolynomial() = default;
  ZetaPolynomial(TowerPtr bundle, std::vector<ChowClass> coefficients);

  static ZetaPolynomial constant(TowerPtr bundle, const ChowClass& base_class);
  static ZetaPolynomial zeta(TowerPtr bundle);

  const TowerPtr& bundle() const { return bundle_; }
  const std::vector<ChowClass>& coefficients() const { return coeffs_; }
  /// beta_i, zero past the stored length.
  ChowClass coefficient(std::size_t i) const;
  /// Number of stored coefficients (highest zeta power plus one).
  std::size_t size() const { return coeffs_.size(); }

  ZetaPolynomial operator-() const;
  ZetaPolynomial& operator+=(const ZetaPolynomial& rhs);
  ZetaPolynomial& operator-=(const ZetaPolynomial& rhs);
  friend ZetaPolynomial operator+(ZetaPolynomial a, const ZetaPolynomial& b) { return a += b; }
  friend ZetaPolynomial operator-(ZetaPolynomial a, const ZetaPolynomial& b) { return a -= b; }
  friend ZetaPolynomial operator*(const ZetaPolynomial& a, const ZetaPolynomial& b);
  friend ZetaPolynomial operator*(const ZetaPolynomial& a, const ParamPoly& s);
  friend bool operator==(const ZetaPolynomial& a, const ZetaPolynomial& b);
  ZetaPolynomial pow(unsigned exponent) const;

  ZetaPolynomial derivative() const;
  /// Divides by zeta^k; the caller guarantees beta_0..beta_{k-1} are zero.
  ZetaPolynomial shift_down(std::size_t k) const;
  /// Keeps beta_i for i >= k.
  ZetaPolynomial tail(std::size_t k) const;

  /// Substitutes a base class for zeta.
  ChowClass evaluate_at(const ChowClass& value) const;
  /// The class this polynomial represents on the bundle (normal form).
  ChowClass to_class() const;

 private:
  void trim();

  TowerPtr bundle_;
  std::vector<ChowClass> coeffs_;
};

ZetaPolynomial invert_unit(const ZetaPolynomial& x);

/// beta_i read off the normal form of x; at most rank coefficients.
ZetaPolynomial to_zeta_polynomial(const ChowClass& x);

/// Segre-class route: pi_*(sum beta_i zeta^i) = sum beta_i s_{i - fiber_dim}.
ChowClass pushforward_oracle(const ZetaPolynomial& f);
ChowClass pushforward_oracle(const ChowClass& x);

/// Where the division by a power of zeta happens when forming f_{C_j}.
enum class IndexConvention {
  /// Subtract beta_i zeta^i for i < fiber_dim and divide by zeta^(fiber_dim - j + 1).
  Proof,
  /// Divide by zeta^(fiber_dim - j) instead; kept only as a negative-test hook.
  OffByOne,
};

/// Partial-fraction route: sum_ij q_ij / (j-1)! d^(j-1)/dzeta^(j-1) f_{C_j}
/// evaluated at zeta = -d_i L. Throws InapplicableError when the bundle is
/// trivial or has symbolic exponents.
ChowClass pushforward_closed(const ZetaPolynomial& f,
                             IndexConvention convention = IndexConvention::Proof);
ChowClass pushforward_closed(const ChowClass& x,
                             IndexConvention convention = IndexConvention::Proof);

/// Closed form when applicable, Segre route otherwise.
ChowClass pushforward(const ChowClass& x);
ChowClass pushforward(const ZetaPolynomial& f);

/// Pushes forward level by level down to the root.
ChowClass push_to_root(const ChowClass& x);

/// Degree of a class on a point-rooted tower. Throws UserError when the root
/// has positive dimension.
ParamPoly integrate(const ChowClass& x);

}  // namespace chow
