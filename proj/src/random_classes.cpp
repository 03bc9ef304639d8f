#include "chow/random_classes.hpp"

#include <string>

namespace chow {

int ClassGenerator::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

TowerPtr ClassGenerator::random_bundle(int max_base_dim, int max_rank, int max_exp, bool nonzero) {
  const TowerPtr base = Tower::make_formal_base(uniform(0, max_base_dim), {"L"});
  const int rank = uniform(1, max_rank);
  std::vector<ParamPoly> exps;
  bool any = false;
  for (int i = 0; i < rank; ++i) {
    const int a = uniform(-max_exp, max_exp);
    any = any || a != 0;
    exps.emplace_back(a);
  }
  if (nonzero && !any) exps[static_cast<std::size_t>(uniform(0, rank - 1))] = ParamPoly(uniform(1, max_exp));
  return Tower::make_projective_bundle(base, ChowClass::symbol(base, "L"), std::move(exps), "H");
}

ChowClass ClassGenerator::random_class(const TowerPtr& tower, int max_terms, int max_coeff) {
  const std::size_t nsym = tower->symbols().size();
  ClassTerms terms;
  const int count = uniform(0, max_terms);
  for (int k = 0; k < count; ++k) {
    Monomial m(nsym, 0);
    for (std::size_t i = 0; i < nsym; ++i) m[i] = uniform(0, 2);
    int c = uniform(-max_coeff, max_coeff);
    if (c == 0) c = 1;
    ParamPoly coeff(c);
    if (!tower->params().empty() && uniform(0, 2) == 0)
      coeff *= ParamPoly::variable(static_cast<std::size_t>(uniform(0, static_cast<int>(tower->params().size()) - 1)));
    terms[m] += coeff;
  }
  return ChowClass::from_terms(tower, std::move(terms));
}

ChowClass ClassGenerator::random_unit(const TowerPtr& tower) {
  ChowClass x = random_class(tower);
  int u = uniform(-3, 3);
  if (u == 0) u = 1;
  return x - ChowClass(tower, x.constant_term()) + ChowClass(tower, u);
}

ZetaPolynomial ClassGenerator::random_zeta_polynomial(const TowerPtr& bundle, int degree) {
  std::vector<ChowClass> coeffs;
  for (int i = 0; i <= degree; ++i) coeffs.push_back(random_class(bundle->base(), 3, 4));
  return ZetaPolynomial(bundle, std::move(coeffs));
}

}  // namespace chow
