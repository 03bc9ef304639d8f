#include <gtest/gtest.h>

#include "chow/chow_class.hpp"
#include "chow/error.hpp"
#include "chow/expr.hpp"
#include "chow/random_classes.hpp"
#include "chow/tower.hpp"

using namespace chow;

namespace {

TowerPtr plane() {
  const TowerPtr pt = Tower::make_point({"n"});
  return Tower::make_projective_bundle(pt, ChowClass(pt, 0), {0, 0, 0}, "h");
}

// S = P(O + O(n)) over P^2.
TowerPtr surface_bundle() {
  const TowerPtr p2 = plane();
  return Tower::make_projective_bundle(p2, ChowClass::symbol(p2, "h"), {0, ParamPoly::variable(0)}, "K");
}

TowerPtr e8_ambient() {
  const TowerPtr b = Tower::make_formal_base(3, {"L"});
  return Tower::make_projective_bundle(b, ChowClass::symbol(b, "L"), {0, 2, 3}, "H");
}

}  // namespace

TEST(Tower, Dimensions) {
  EXPECT_EQ(Tower::make_formal_base(0)->dim(), 0);
  EXPECT_EQ(plane()->dim(), 2);
  EXPECT_EQ(surface_bundle()->dim(), 3);
  EXPECT_EQ(e8_ambient()->dim(), 5);
  EXPECT_EQ(e8_ambient()->fiber_dim(), 2);
}

TEST(Tower, LineMustHaveDegreeOne) {
  const TowerPtr b = Tower::make_formal_base(3, {"L"});
  EXPECT_THROW(Tower::make_projective_bundle(b, eval("L^2", b), {0, 1}), DegreeError);
}

TEST(ChowRing, FormalBaseTruncates) {
  const TowerPtr b = Tower::make_formal_base(3);
  EXPECT_TRUE(eval("c1*c3", b).is_zero());
  EXPECT_EQ(format(eval("1+c1+c2+c3", b)), "1 + c1 + c2 + c3");
  EXPECT_EQ(format(eval("1 + L", Tower::make_formal_base(0, {"L"}))), "1");
}

TEST(ChowRing, PlaneRelation) {
  const TowerPtr p2 = plane();
  EXPECT_TRUE(eval("h^3", p2).is_zero());
  EXPECT_EQ(format(total_chern(p2)), "1 + 3*h + 3*h^2");
}

TEST(ChowRing, SurfaceRelation) {
  const TowerPtr s = surface_bundle();
  EXPECT_EQ(format(eval("K*K", s)), "-n*h*K");
  EXPECT_EQ(format(grade(total_chern(s), 1)), "(3 + n)*h + 2*K");
  EXPECT_EQ(format(grade(total_chern(s), 2)), "(3 + 3*n)*h^2 + 6*h*K");
}

TEST(ChowRing, E8Numerator) {
  const TowerPtr t = e8_ambient();
  const ChowClass lhs = eval("(1+H)*(1+2*L+H)*(1+3*L+H)", t);
  ChowClass rhs = ChowClass(t, 1);
  for (const char* f : {"1+H", "1+2*L+H", "1+3*L+H"}) rhs = mul(rhs, eval(f, t));
  EXPECT_EQ(lhs, rhs);
  // H^3 = -5 L H^2 - 6 L^2 H.
  EXPECT_EQ(eval("H^3", t), eval("-5*L*H^2 - 6*L^2*H", t));
}

TEST(ChowRing, InvertUnit) {
  const TowerPtr b = Tower::make_formal_base(3, {"L"});
  EXPECT_EQ(format(invert_unit(eval("1+6*L", b))), "1 - 6*L + 36*L^2 - 216*L^3");
  EXPECT_EQ(format(invert_unit(eval("(1+2*L)*(1+3*L)", b))), "1 - 5*L + 19*L^2 - 65*L^3");
  EXPECT_EQ(format(invert_unit(ChowClass(b, 1))), "1");
  EXPECT_THROW(invert_unit(eval("L", b)), NonUnitError);
  const TowerPtr p = Tower::make_formal_base(2, {"L"}, {"t"});
  EXPECT_THROW(invert_unit(eval("t + L", p)), NonUnitError);
}

TEST(ChowRing, GradeAndSubstitute) {
  const TowerPtr p2 = plane();
  EXPECT_EQ(format(grade(eval("1+3*h+3*h^2", p2), 2)), "3*h^2");
  EXPECT_TRUE(grade(eval("1+h", p2), 3).is_zero());
  const TowerPtr b = Tower::make_formal_base(3, {"L"});
  const ChowClass x = eval("1 + 2*L + L^2 + c1*L", b);
  EXPECT_EQ(substitute(x, "L", ChowClass(b, 0)), ChowClass(b, 1));
  EXPECT_EQ(format(substitute(x, "L", eval("c1", b))), "1 + 2*c1 + 2*c1^2");
  EXPECT_THROW(substitute(x, "L", eval("c2", b)), DegreeError);
  const TowerPtr t = e8_ambient();
  // H := -2L applied to L^2 + H.
  EXPECT_EQ(format(substitute(eval("L^2 + H", t), "H", eval("-2*L", t))), "-2*L + L^2");
}

TEST(ChowRing, TowerMismatch) {
  const TowerPtr a = Tower::make_formal_base(2, {"L"});
  const TowerPtr b = Tower::make_formal_base(2, {"L"});
  EXPECT_THROW(eval("L", a) * eval("L", b), TowerMismatchError);
}

class RingProperties : public ::testing::TestWithParam<int> {};

TEST_P(RingProperties, Axioms) {
  ClassGenerator gen(static_cast<std::uint64_t>(GetParam()));
  for (int i = 0; i < 20; ++i) {
    const TowerPtr t = gen.random_bundle(3, 4, 4, false);
    const ChowClass x = gen.random_class(t), y = gen.random_class(t), z = gen.random_class(t);
    EXPECT_EQ(x * (y * z), (x * y) * z);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
    // Normal form is idempotent.
    EXPECT_EQ(ChowClass::from_terms(t, x.terms()), x);
    const ChowClass xy = x * y;
    for (const auto& [m, c] : xy.terms()) {
      EXPECT_LE(t->monomial_degree(m), t->dim());
      EXPECT_LT(m[t->zeta_index()], t->rank());
    }
  }
}

TEST_P(RingProperties, InverseOfRandomUnits) {
  ClassGenerator gen(1000 + static_cast<std::uint64_t>(GetParam()));
  const TowerPtr t = gen.random_bundle(3, 3, 3, false);
  for (int i = 0; i < 100; ++i) {
    const ChowClass u = gen.random_unit(t);
    EXPECT_EQ(u * invert_unit(u), ChowClass(t, 1)) << format(u);
  }
}

TEST_P(RingProperties, RelationVanishes) {
  ClassGenerator gen(2000 + static_cast<std::uint64_t>(GetParam()));
  for (int i = 0; i < 20; ++i) {
    const TowerPtr t = gen.random_bundle(3, 4, 4, false);
    const ChowClass z = ChowClass::symbol(t, t->zeta_index());
    ChowClass rel(t, 0);
    for (int k = 0; k <= t->rank(); ++k)
      rel += pullback(grade(t->bundle_chern(), k), t) * z.pow(static_cast<unsigned>(t->rank() - k));
    EXPECT_TRUE(rel.is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingProperties, ::testing::Values(1, 2, 3, 4, 5));
