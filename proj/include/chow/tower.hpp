#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chow/chow_class.hpp"
#include "chow/param_poly.hpp"

namespace chow {

struct GradedSymbol {
  std::string name;
  int degree = 1;
  int level = 0;
};

/// An ambient space: a formal base carrying abstract Chern classes, or the
/// projectivization P(L^a1 + ... + L^ar) of lines over another tower.
///
/// Symbols are indexed base-first so that a class on an ancestor is a valid
/// class here after padding its exponent vectors with zeros. Parameters are
/// declared on the root and shared by the whole tower.
class Tower {
 public:
  static TowerPtr make_point(std::vector<std::string> params = {});
  /// Base of dimension `dim` with symbols c1..c_dim (degree i) and the given
  /// extra degree-1 divisor symbols. No relations other than truncation.
  static TowerPtr make_formal_base(int dim, std::vector<std::string> divisors = {},
                                   std::vector<std::string> params = {});
  /// P(E) with E = sum of line^a_i; `line` must be of pure degree 1 on `base`
  /// (or an ancestor of it). The new hyperplane class gets `zeta_name`, or
  /// "z<level>" when empty.
  static TowerPtr make_projective_bundle(const TowerPtr& base, const ChowClass& line,
                                         std::vector<ParamPoly> exponents,
                                         std::string zeta_name = {});

  int dim() const { return dim_; }
  int level() const { return level_; }
  bool is_bundle() const { return base_ != nullptr; }
  const TowerPtr& base() const { return base_; }
  const Tower& root() const;

  const std::vector<GradedSymbol>& symbols() const { return symbols_; }
  std::optional<std::size_t> symbol_index(std::string_view name) const;
  const std::vector<std::string>& params() const { return params_; }
  std::optional<std::size_t> param_index(std::string_view name) const;

  /// True if `other` is this tower or lies above it.
  bool is_ancestor_of(const Tower& other) const;
  /// Dimension of the tower at level `level` (0 = root).
  int level_dim(int level) const { return level_dims_.at(static_cast<std::size_t>(level)); }
  int monomial_degree(const Monomial& m) const;
  /// A monomial vanishes when its part over some level exceeds that level's
  /// dimension.
  bool vanishes(const Monomial& m) const;

  // Bundle levels only.
  int rank() const { return static_cast<int>(exponents_.size()); }
  int fiber_dim() const { return rank() - 1; }
  std::size_t zeta_index() const { return symbols_.size() - 1; }
  const std::string& zeta_name() const { return symbols_.back().name; }
  const std::vector<ParamPoly>& exponents() const { return exponents_; }
  /// c1 of the line bundle, on the base.
  const ChowClass& line_class() const { return line_; }
  /// c(E) = prod(1 + a_i L), on the base.
  const ChowClass& bundle_chern() const { return bundle_chern_; }

  /// Reduces by the bundle relations at every level and truncates.
  ClassTerms normalize(ClassTerms terms) const;

 private:
  Tower() = default;

  ClassTerms reduce_levels(ClassTerms terms, const Tower* start) const;
  void build_reduction_table();

  TowerPtr base_;
  int dim_ = 0;
  int level_ = 0;
  std::vector<GradedSymbol> symbols_;
  std::vector<std::string> params_;
  std::vector<int> level_dims_;
  std::vector<std::size_t> level_end_;  // symbols with level <= j

  std::vector<ParamPoly> exponents_;
  ChowClass line_;
  ChowClass bundle_chern_;
  // Normal forms of zeta^e for rank <= e <= dim, as terms on this tower.
  std::vector<ClassTerms> zeta_powers_;
};

}  // namespace chow
