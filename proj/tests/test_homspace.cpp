#include <gtest/gtest.h>

#include "support.hpp"

using namespace vessiot;
using namespace vessiot::testing;

namespace {

const RatFunc t = RatFunc::t();

MatK m(const char* s) { return parse_matrix(s); }
AutomorphicField field(const char* s) { return AutomorphicField(m(s)); }

PlaneCoords plane(std::size_t n, const char* s) {
  MatK l = m(s);
  return PlaneCoords(n, l.cols(), l);
}

PlaneCoords plane_from(const MatK& tau, std::size_t mm) { return plucker_coords(first_columns(tau, mm), mm); }

// Coefficient of a monomial in the unknowns, as a polynomial in the a_ij.
MPoly<GQ> coeff(const MPoly<MPoly<GQ>>& p, Monomial mono) { return p.coefficient(mono); }

}  // namespace

TEST(Riccati, OrdinaryRank2) {
  const auto sys = riccati_polynomials(symbolic_field(2), 1);
  ASSERT_EQ(sys.rhs.size(), 1U);
  EXPECT_EQ(sys.rhs[0], classical::ordinary_riccati_rank2()[0]);
  EXPECT_EQ(format_canonical(sys, symbolic_field_names(2)), "λ̇ = a21 + (-a11 + a22)*λ - a12*λ^2\n");
}

TEST(Riccati, ProjectivePlaneMatchesExceptMissingFactor) {
  const auto sys = riccati_polynomials(symbolic_field(3), 1);
  const auto shown = classical::projective_riccati_rank3_lines();
  EXPECT_EQ(sys.rhs[0], shown[0]);
  // Every term of the y line agrees except where (a33 - a11) loses its factor y.
  const MPoly<GQ> a11 = MPoly<GQ>::variable(0), a33 = MPoly<GQ>::variable(8);
  const auto diff = shown[1] - sys.rhs[1];
  EXPECT_EQ(coeff(diff, {}), a33 - a11);
  EXPECT_EQ(coeff(diff, {0, 1}), a11 - a33);
  EXPECT_EQ(diff.term_count(), 2U);
}

TEST(Riccati, DualPlaneDisplayHasSignErrors) {
  const auto sys = riccati_polynomials(symbolic_field(3), 2);
  const auto shown = classical::projective_riccati_rank3_planes();
  const MPoly<GQ> a12 = MPoly<GQ>::variable(1), a21 = MPoly<GQ>::variable(3);
  EXPECT_EQ(coeff(sys.rhs[0], {0, 1}), -a21);
  EXPECT_EQ(coeff(shown[0], {0, 1}), a21);
  EXPECT_EQ(coeff(sys.rhs[1], {1}), -a12);
  EXPECT_EQ(coeff(shown[1], {1}), a12);
  EXPECT_EQ((shown[0] - sys.rhs[0]).term_count(), 1U);
  EXPECT_EQ((shown[1] - sys.rhs[1]).term_count(), 1U);
  // The witness settles it: only the generated system holds.
  const auto audit = classical::audit_riccati_rank3(2, classical::default_witness_rank3());
  EXPECT_TRUE(audit.generated_satisfied);
  EXPECT_FALSE(audit.displayed_residuals[0].is_zero());
}

TEST(Riccati, RhsExamples) {
  const RiccatiSystem sys = riccati_generate(field("[0,0;1,0]"), 1);
  EXPECT_EQ(riccati_rhs(sys, plane(2, "[0]")), m("[1]"));
  EXPECT_EQ(riccati_rhs(sys, plane(2, "[t^2+i]")), m("[1]"));
  const RiccatiSystem zero = riccati_generate(AutomorphicField::zero(3), 1);
  EXPECT_TRUE(riccati_rhs(zero, plane(3, "[t;1/t]")).is_zero());
  const RiccatiSystem s3 = riccati_generate(field("[1,2,3;4,5,6;7,8,9]"), 1);
  EXPECT_EQ(riccati_rhs(s3, plane(3, "[0;0]")), m("[4;7]"));
  EXPECT_THROW((void)riccati_generate(AutomorphicField::zero(3), 3), Error);
  EXPECT_EQ(format_canonical(riccati_polynomials(MatK(2, 2), 1)), "λ̇ = 0\n");
}

TEST(Riccati, CheckSolution) {
  const RiccatiSystem sys = riccati_generate(field("[0,0;1,0]"), 1);
  EXPECT_TRUE(riccati_check_solution(sys, plane(2, "[t]")));
  EXPECT_FALSE(riccati_check_solution(sys, plane(2, "[t^2]")));
  EXPECT_TRUE(riccati_check_solution(riccati_generate(AutomorphicField::zero(3), 2), plane(3, "[1,i]")));
  EXPECT_THROW((void)riccati_check_solution(sys, plane(3, "[t;t]")), Error);
}

TEST(Plucker, Examples) {
  EXPECT_TRUE(plucker_coords(m("[1,0;0,1;0,0]"), 2).matrix().is_zero());
  EXPECT_EQ(plucker_coords(m("[1;t]"), 1).matrix(), m("[t]"));
  try {
    (void)plucker_coords(m("[0;1]"), 1);
    FAIL() << "expected ChartMinorVanishes";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ChartMinorVanishes);
  }
}

TEST(Plucker, ChartInvarianceRandomized) {
  Rng rng(51);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
    const std::size_t mm = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n) - 1));
    const MatK x = first_columns(random_generic_tau(rng, n, 2), mm);
    const MatK c = random_invertible(rng, mm, 1);
    EXPECT_EQ(plucker_coords(x * c, mm), plucker_coords(x, mm));
  }
}

TEST(Flag, CoordsExamples) {
  EXPECT_EQ(flag_coords(m("[1,t;0,3]")), FlagCoords::identity(2));
  EXPECT_EQ(flag_coords(m("[1,0;t,1]")).matrix()(1, 0), t);
  Rng rng(52);
  for (int k = 0; k < 10; ++k) {
    const MatK tau = random_generic_tau(rng, 3, 2);
    MatK u = random_poly_matrix(rng, 3, 1);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < i; ++j) u(i, j) = RatFunc();
      if (u(i, i).is_zero()) u(i, i) = RatFunc(1);
    }
    EXPECT_EQ(flag_coords(tau * u), flag_coords(tau));
  }
  EXPECT_THROW((void)FlagCoords(m("[1,1;0,1]")), Error);
}

TEST(Flag, Rank3AgreesExceptThirdLine) {
  const auto sys = flag_polynomials(symbolic_field(3));
  const auto shown = classical::flag_rank3();
  EXPECT_EQ(sys.rhs[0], shown[0]);
  EXPECT_EQ(sys.rhs[1], shown[1]);
  const MPoly<GQ> a12 = MPoly<GQ>::variable(1), a13 = MPoly<GQ>::variable(2);
  // x = 0, y = 1, z = 2
  EXPECT_EQ(coeff(sys.rhs[2], {1, 0, 1}), a12);
  EXPECT_EQ(coeff(sys.rhs[2], {1, 0, 2}), a13);
  EXPECT_EQ(coeff(shown[2], {0, 1, 1}), a12 - a13);
  EXPECT_EQ(coeff(shown[2], {0, 1, 2}), a13);
  const auto audit = classical::audit_flag_rank3(classical::default_witness_rank3());
  EXPECT_EQ(audit.differences.size(), 4U);
  for (const auto& d : audit.differences) EXPECT_EQ(d.equation, 2U);
  EXPECT_TRUE(audit.generated_satisfied);
  EXPECT_TRUE(audit.displayed_residuals[0].is_zero());
  EXPECT_TRUE(audit.displayed_residuals[1].is_zero());
  EXPECT_FALSE(audit.displayed_residuals[2].is_zero());
}

TEST(Flag, TripleSumAgreesUpToRank3Only) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto a = symbolic_field(n);
    const auto l = flag_unknown_matrix<MPoly<GQ>>(n);
    const auto ours = flag_rhs_generic(a.map([](const MPoly<GQ>& c) { return MPoly<MPoly<GQ>>(c); }), l);
    const auto sum = classical::flag_triple_sum(a.map([](const MPoly<GQ>& c) { return MPoly<MPoly<GQ>>(c); }), l);
    if (n <= 3) {
      EXPECT_EQ(ours, sum) << "n = " << n;
    } else {
      EXPECT_NE(ours, sum);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (!(i == 3 && j == 2)) {
            EXPECT_EQ(ours(i, j), sum(i, j)) << i << "," << j;
          }
      EXPECT_NE(ours(3, 2), sum(3, 2));
    }
  }
}

TEST(Flag, RhsExamples) {
  const FlagSystem upper = flag_generate(field("[1,t,2;0,t^2,3;0,0,i]"));
  EXPECT_TRUE(flag_rhs(upper, FlagCoords::identity(3)).is_zero());
  const FlagSystem zero = flag_generate(AutomorphicField::zero(3));
  EXPECT_TRUE(flag_rhs(zero, FlagCoords(m("[1,0,0;t,1,0;2,t^2,1]"))).is_zero());
  EXPECT_TRUE(flag_check_solution(zero, FlagCoords(m("[1,0,0;3,1,0;2,i,1]"))));
  EXPECT_THROW((void)flag_rhs(zero, FlagCoords::identity(2)), Error);
}

TEST(Flag, FundamentalSolutionOracle) {
  Rng rng(53);
  for (int k = 0; k < 12; ++k) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
    const MatK tau = random_generic_tau(rng, n, 2);
    const AutomorphicField a = log_deriv(GroupElement(tau));
    const FlagCoords l = flag_coords(tau);
    EXPECT_TRUE(flag_check_solution(flag_generate(a), l));
    MatK bad = l.matrix();
    bad(n - 1, 0) += RatFunc(1) + t;
    EXPECT_FALSE(flag_check_solution(flag_generate(a), FlagCoords(bad)));
    for (std::size_t mm = 1; mm < n; ++mm) {
      const PlaneCoords p = plucker_coords(first_columns(tau, mm), mm);
      EXPECT_TRUE(riccati_check_solution(riccati_generate(a, mm), p));
      EXPECT_EQ(flag_to_grassmann(l, mm), p);
    }
  }
}

TEST(Flag, ToGrassmannExamples) {
  const FlagCoords l(m("[1,0,0;t,1,0;2,t^2,1]"));
  EXPECT_EQ(flag_to_grassmann(l, 1).matrix(), m("[t;2]"));
  EXPECT_TRUE(flag_to_grassmann(FlagCoords::identity(4), 2).matrix().is_zero());
  EXPECT_THROW((void)flag_to_grassmann(l, 3), Error);
  // The verbatim sum cancels the leading term for m = 1.
  EXPECT_TRUE(classical::flag_to_grassmann_display(l, 1).is_zero());
  EXPECT_NE(classical::flag_to_grassmann_display(l, 1), flag_to_grassmann(l, 1).matrix());
}

TEST(Reduce, PlaneExamples) {
  const Reduction r = reduce_by_plane(field("[0,0;1,0]"), plane(2, "[t]"));
  EXPECT_TRUE(r.solution);
  EXPECT_FALSE(r.diagnostic.has_value());
  EXPECT_EQ(r.tau.matrix(), m("[1,0;-t,1]"));
  EXPECT_EQ(r.b, AutomorphicField::zero(2));

  const AutomorphicField a = field("[1,t,2;0,t,3;0,0,t^2]");
  const Reduction same = reduce_by_plane(a, plane(3, "[0;0]"));
  EXPECT_EQ(same.tau.matrix(), MatK::identity(3));
  EXPECT_EQ(same.b, a);

  const Reduction bad = reduce_by_plane(field("[0,0;1,0]"), plane(2, "[t^2]"));
  EXPECT_FALSE(bad.solution);
  ASSERT_TRUE(bad.diagnostic.has_value());
  EXPECT_EQ(bad.diagnostic->rfind("NotASolution", 0), 0U);
  EXPECT_FALSE(is_in_subalgebra(bad.b, shape::BlockUpper{1}));
}

TEST(Reduce, FlagExamples) {
  const AutomorphicField up = field("[1,t;0,t^2]");
  const Reduction r = reduce_by_flag(up, FlagCoords::identity(2));
  EXPECT_EQ(r.b, up);
  Rng rng(54);
  for (int k = 0; k < 8; ++k) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
    const MatK tau = random_generic_tau(rng, n, 2);
    const AutomorphicField a = log_deriv(GroupElement(tau));
    const FlagCoords l = flag_coords(tau);
    const Reduction f = reduce_by_flag(a, l);
    EXPECT_TRUE(f.solution);
    EXPECT_TRUE(is_upper_triangular(f.b.matrix()));
    for (std::size_t mm = 1; mm < n; ++mm) {
      const Reduction p = reduce_by_plane(a, plane_from(tau, mm));
      EXPECT_TRUE(is_in_subalgebra(p.b, shape::BlockUpper{mm}));
    }
    if (n == 2) {
      const Reduction p = reduce_by_plane(a, flag_to_grassmann(l, 1));
      EXPECT_EQ(p.b, f.b);
      EXPECT_EQ(p.tau.matrix(), f.tau.matrix());
    }
  }
}

TEST(Permute, BasisChangeRepairsChart) {
  // tau has a vanishing first minor; swapping the basis makes the chart defined.
  const MatK tau = m("[0,1;1,t]");
  EXPECT_THROW((void)flag_coords(tau), PrincipalMinorVanishes);
  const std::vector<std::size_t> p{2, 1};
  const MatK a = log_deriv(GroupElement(tau)).matrix();
  const MatK tau_p = permute_rows(tau, p);
  const MatK a_p = permute_basis(a, p);
  EXPECT_EQ(log_deriv(GroupElement(tau_p)).matrix(), a_p);
  EXPECT_TRUE(flag_check_solution(flag_generate(AutomorphicField(a_p)), flag_coords(tau_p)));
  EXPECT_THROW((void)permute_basis(a, {1, 1}), Error);
  EXPECT_THROW((void)permute_basis(a, {1}), Error);
}
