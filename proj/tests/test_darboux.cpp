#include <gtest/gtest.h>

#include "support.hpp"

using namespace vessiot;
using namespace vessiot::testing;

namespace {

const GQ i = GQ::i();
const RatFunc t = RatFunc::t();

SpherePoint<GQ> p0() { return {GQ::from_fractions(2, 3), GQ::from_fractions(2, 3), GQ::from_fractions(1, 3)}; }

RiccatiCoeffs<RatFunc> coeffs(GQ q0, GQ q1, GQ q2) { return {RatFunc(q0), RatFunc(q1), RatFunc(q2)}; }

Matrix<GQ> sl2_of(const Matrix<GQ>& skew_m) {
  return so3_algebra_to_sl2_generic(skew_m(0, 1), skew_m(0, 2), skew_m(1, 2));
}

Matrix<GQ> combine(const std::array<Matrix<GQ>, 3>& basis, const GQ& a, const GQ& b, const GQ& c) {
  return a * basis[0] + b * basis[1] + c * basis[2];
}

}  // namespace

TEST(So3Riccati, Examples) {
  EXPECT_EQ(so3_to_riccati({RatFunc(1), RatFunc(), RatFunc()}), coeffs(0, -i, 0));
  EXPECT_EQ(so3_to_riccati({RatFunc(), RatFunc(), RatFunc()}), coeffs(0, 0, 0));
  const GQ h = GQ::from_fractions(-1, 2);
  EXPECT_EQ(so3_to_riccati({RatFunc(), RatFunc(1), RatFunc()}), coeffs(h, 0, h));
  const auto q = so3_to_riccati({RatFunc(1), t, RatFunc()});
  EXPECT_EQ(q.q0, -t / RatFunc(2));
  EXPECT_EQ(q.q2, -t / RatFunc(2));
}

TEST(So3Field, MatrixIsSkew) {
  const SO3Field f{t, RatFunc(2), t * t};
  EXPECT_TRUE(is_in_subalgebra(f.matrix(), shape::SkewSymmetric{}));
  const SO3Field g = SO3Field::from_matrix(f.matrix());
  EXPECT_EQ(g.a, f.a);
  EXPECT_EQ(g.b, f.b);
  EXPECT_EQ(g.c, f.c);
}

TEST(Symmetric, CoordinatesExamples) {
  const auto [x, y] = symmetric_coords(p0());
  EXPECT_EQ(x, GQ(1) + i);
  EXPECT_EQ(y, GQ::from_fractions(-1, 2) * (GQ(1) + i));
  EXPECT_EQ(sphere_from_symmetric(x, y), p0());
  try {
    (void)symmetric_x(SpherePoint<GQ>(GQ(0), GQ(0), GQ(1)));
    FAIL() << "expected ChartDenominatorVanishes";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ChartDenominatorVanishes);
  }
  try {
    (void)sphere_from_symmetric(x, x);
    FAIL() << "expected DiagonalPoint";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DiagonalPoint);
  }
  EXPECT_THROW((void)SpherePoint<GQ>(GQ(1), GQ(1), GQ(0)), Error);
}

TEST(Symmetric, SphereIdentityIsPolynomialIdentity) { EXPECT_TRUE(sphere_identity_residual().is_zero()); }

TEST(Symmetric, RoundTripRandomized) {
  Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    const SpherePoint<GQ> p = random_sphere_point(rng);
    const auto [x, y] = symmetric_coords(p);
    EXPECT_EQ(sphere_from_symmetric(x, y), p);
  }
}

TEST(Symmetric, PrintedYFormulaDoesNotInvert) {
  const SpherePoint<GQ> p = p0();
  const GQ y_shown = classical::symmetric_y_display(p);
  EXPECT_NE(y_shown, symmetric_y(p));
  EXPECT_FALSE(sphere_from_symmetric(symmetric_x(p), y_shown) == p);
}

TEST(Pushforward, Examples) {
  EXPECT_TRUE(so3_pushforward_check({RatFunc(1), t, RatFunc()}, p0(), GQ(1)));
  const PushforwardReport zero = so3_pushforward({RatFunc(), RatFunc(), RatFunc()}, p0(), GQ(3));
  EXPECT_TRUE(zero.agree);
  EXPECT_TRUE(zero.chain_rule.is_zero());
}

TEST(Pushforward, Randomized) {
  Rng rng(62);
  int done = 0;
  while (done < 100) {
    const SO3Field f{random_ratfunc(rng, 1), random_ratfunc(rng, 1), random_ratfunc(rng, 1)};
    const SpherePoint<GQ> p = random_sphere_point(rng);
    const GQ t0 = random_gq(rng);
    try {
      EXPECT_TRUE(so3_pushforward_check(f, p, t0));
      ++done;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::PoleAtPoint);
    }
  }
}

TEST(Rotation, MoebiusMatchesConjugationOracle) {
  Rng rng(63);
  for (int axis = 0; axis < 3; ++axis)
    for (int k = 0; k < 30; ++k) {
      const GQ lam = random_nonzero_gq(rng);
      const SpherePoint<GQ> p = random_sphere_point(rng);
      try {
        EXPECT_EQ(rotation_to_moebius(axis, lam).apply(symmetric_x(p)), rotate_x(axis, lam, p)) << "axis " << axis;
      } catch (const Error& e) {
        EXPECT_TRUE(e.code() == ErrorCode::ChartDenominatorVanishes || e.code() == ErrorCode::PoleAtPoint);
      }
    }
}

TEST(Rotation, Examples) {
  const Moebius two = rotation_to_moebius(1, GQ(2));
  EXPECT_TRUE(equivalent(two, {Matrix<GQ>{{GQ(2), GQ()}, {GQ(), GQ(1)}}}));
  EXPECT_EQ(two.apply(GQ(5)), GQ(10));
  for (int axis = 0; axis < 3; ++axis)
    EXPECT_TRUE(equivalent(rotation_to_moebius(axis, GQ(1)), {Matrix<GQ>::identity(2)}));
  EXPECT_TRUE(equivalent(rotation_to_moebius(0, GQ(3)), {Matrix<GQ>{{GQ(2), GQ(1)}, {GQ(1), GQ(2)}}}));
  EXPECT_THROW((void)rotation_to_moebius(0, GQ(0)), Error);
  EXPECT_THROW((void)rotation_to_moebius(3, GQ(2)), Error);
}

TEST(Rotation, PrintedFormulas) {
  Rng rng(64);
  for (int k = 0; k < 10; ++k) {
    const GQ lam = random_nonzero_gq(rng);
    EXPECT_TRUE(equivalent(classical::rotation_display(0, lam), rotation_to_moebius(0, lam)));
    EXPECT_TRUE(equivalent(classical::rotation_display(1, lam), rotation_to_moebius(1, lam)));
  }
  // The third printed formula disagrees with the oracle.
  const GQ lam(2);
  EXPECT_FALSE(equivalent(classical::rotation_display(2, lam), rotation_to_moebius(2, lam)));
  const SpherePoint<GQ> p = p0();
  EXPECT_NE(classical::rotation_display(2, lam).apply(symmetric_x(p)), rotate_x(2, lam, p));
}

TEST(Rotation, OneParameterSubgroupLaw) {
  Rng rng(65);
  for (int axis = 0; axis < 3; ++axis)
    for (int k = 0; k < 20; ++k) {
      const GQ l = random_nonzero_gq(rng), mu = random_nonzero_gq(rng);
      EXPECT_TRUE(equivalent(rotation_to_moebius(axis, l) * rotation_to_moebius(axis, mu),
                             rotation_to_moebius(axis, l * mu)));
    }
}

// d/de at e = 0 along lambda = 1 + i e. For M(e) = c I + e M' + ..., the
// action on x moves by (m01' + (m00' - m11') x - m10' x^2) / c.
TEST(Rotation, GeneratorsMatchRiccati) {
  const RatFunc lam = RatFunc(1) + RatFunc(i) * t;
  const std::array<RiccatiCoeffs<GQ>, 3> expected{
      RiccatiCoeffs<GQ>{i / GQ(2), GQ(), -i / GQ(2)}, RiccatiCoeffs<GQ>{GQ(), i, GQ()},
      RiccatiCoeffs<GQ>{GQ::from_fractions(1, 2), GQ(), GQ::from_fractions(1, 2)}};
  for (int axis = 0; axis < 3; ++axis) {
    const MatK mob = rotation_moebius_generic(axis, lam);
    const GQ c = mob(0, 0).eval(GQ(0));
    const Matrix<GQ> dm = derive(mob).map([](const RatFunc& r) { return r.eval(GQ(0)); });
    const RiccatiCoeffs<GQ> q = sl2_to_riccati(dm);
    const RiccatiCoeffs<GQ> scaled{q.q0 / c, q.q1 / c, q.q2 / c};
    EXPECT_EQ(scaled, expected[axis]) << "axis " << axis;

    // The same generator through the rotation matrix and the Riccati map.
    const MatK gen = derive(rotation_matrix_generic(axis, lam)).map([](const RatFunc& r) { return RatFunc(r.eval(GQ(0))); });
    const RiccatiCoeffs<RatFunc> via = so3_to_riccati(SO3Field::from_matrix(gen));
    EXPECT_EQ(via, (RiccatiCoeffs<RatFunc>{RatFunc(scaled.q0), RatFunc(scaled.q1), RatFunc(scaled.q2)}));
  }
}

TEST(Sl2, BracketPreservationOnBasis) {
  const std::array<Matrix<GQ>, 3> basis{skew(1, 0, 0), skew(0, 1, 0), skew(0, 0, 1)};
  for (const auto& x : basis)
    for (const auto& y : basis) EXPECT_EQ(sl2_of(lie_bracket(x, y)), lie_bracket(sl2_of(x), sl2_of(y)));
}

TEST(Sl2, ImagesAreTraceFree) {
  Rng rng(66);
  for (int k = 0; k < 20; ++k) {
    const SO3Field f{random_ratfunc(rng), random_ratfunc(rng), random_ratfunc(rng)};
    EXPECT_TRUE(trace(so3_algebra_to_sl2(f)).is_zero());
  }
  EXPECT_TRUE(so3_algebra_to_sl2({RatFunc(), RatFunc(), RatFunc()}).is_zero());
}

TEST(Sl2, CompositionWithRiccatiIsIdentity) {
  Rng rng(67);
  for (int k = 0; k < 50; ++k) {
    const SO3Field f{random_ratfunc(rng), random_ratfunc(rng), random_ratfunc(rng)};
    EXPECT_EQ(sl2_to_riccati(so3_algebra_to_sl2(f)), so3_to_riccati(f));
  }
}

// The printed basis table is also a homomorphism, but it induces the Riccati
// equation of (-a, -b, c) rather than (a, b, c).
TEST(Sl2, PrintedTableFlipsTwoSigns) {
  const auto shown = classical::sl2_table_display();
  const std::array<Matrix<GQ>, 3> basis{skew(1, 0, 0), skew(0, 1, 0), skew(0, 0, 1)};
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      const Matrix<GQ> br = lie_bracket(basis[a], basis[b]);
      EXPECT_EQ(combine(shown, br(0, 1), br(0, 2), br(1, 2)), lie_bracket(shown[a], shown[b]));
    }
  Rng rng(68);
  for (int k = 0; k < 10; ++k) {
    const GQ a = random_gq(rng), b = random_gq(rng), c = random_gq(rng);
    const RiccatiCoeffs<GQ> got = sl2_to_riccati(combine(shown, a, b, c));
    const auto want = so3_to_riccati({RatFunc(-a), RatFunc(-b), RatFunc(c)});
    EXPECT_EQ(got.q0, want.q0.constant_value());
    EXPECT_EQ(got.q1, want.q1.constant_value());
    EXPECT_EQ(got.q2, want.q2.constant_value());
  }
  EXPECT_NE(shown[0], sl2_of(skew(1, 0, 0)));
}
