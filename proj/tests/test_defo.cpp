#include <gtest/gtest.h>

#include "corpus.hpp"
#include "dgla_corpus.hpp"
#include "lie2/defo.hpp"
#include "lie2/skew.hpp"
#include "testing.hpp"

namespace lie2 {
namespace {

using testing::Rng;

/// g in degree 0 acting on M in degree -1, d = 0.
GradedL3Algebra lie_with_module(const RepresentationFD& r) {
  const std::size_t n = r.g.dim, m = r.dim_m;
  GradedL3Algebra L(-1, {m, n});
  for_each_tuple({n, n, n}, [&](std::span<const std::size_t> t) { L.l2(m + t[0], m + t[1], m + t[2]) = r.g.c(t[0], t[1], t[2]); });
  for_each_tuple({m, n, m}, [&](std::span<const std::size_t> t) {
    L.l2(t[0], m + t[1], t[2]) = r.rho(t[0], t[1], t[2]);
    L.l2(t[0], t[2], m + t[1]) = -r.rho(t[0], t[1], t[2]);
  });
  return L;
}

// l1[x,y] = [l1 x,y] + (-1)^|x| [x,l1 y], l1^2 = 0, antisymmetry and
// [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
bool textbook_dgla(const GradedL3Algebra& L) {
  const std::size_t N = L.total();
  auto deg = [&](std::size_t i) { return L.degree_of(i); };
  auto sgn = [](int k) { return Rat(k % 2 == 0 ? 1 : -1); };
  bool ok = true;
  for (std::size_t i = 0; i < N; ++i) {
    ok = ok && is_zero(L.d(L.d(L.e(i))));
    for (std::size_t j = 0; j < N; ++j) {
      const Vector x = L.e(i), y = L.e(j);
      ok = ok && is_zero(L.d(L.b2(x, y)) - L.b2(L.d(x), y) - sgn(deg(i)) * L.b2(x, L.d(y)));
      ok = ok && is_zero(L.b2(x, y) + sgn(deg(i) * deg(j)) * L.b2(y, x));
      for (std::size_t k = 0; k < N && ok; ++k) {
        const Vector z = L.e(k);
        ok = ok && is_zero(L.b2(x, L.b2(y, z)) - L.b2(L.b2(x, y), z) - sgn(deg(i) * deg(j)) * L.b2(y, L.b2(x, z)));
      }
      if (!ok) return false;
    }
  }
  return ok;
}

TEST(CheckGraded, LieAlgebraWithModulePasses) {
  for (const auto& [name, r] : corpus::modules()) EXPECT_TRUE(check_graded(lie_with_module(r)).passed()) << name;
}

TEST(CheckGraded, DifferentialAloneNeedsOnlySquareZero) {
  GradedL3Algebra L(-1, {1, 2, 1});
  L.l1(1, 0) = 1;
  L.l1(3, 2) = 5;
  EXPECT_TRUE(check_graded(L).passed());
  L.l1(3, 1) = 1;
  const CheckReport r = check_graded(L);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failed_equations(), std::vector<std::string>{"jacobi1"});
}

TEST(CheckGraded, SignFlippedBracketFails) {
  GradedL3Algebra L = lie_with_module(corpus::sl2_standard());
  L.l2(0, 1, 2) = -L.l2(0, 1, 2);
  const CheckReport r = check_graded(L);
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.count("antisym2"), 0u);
}

TEST(CheckGraded, OutOfDegreeEntryFails) {
  GradedL3Algebra L = lie_with_module(corpus::sl2_standard());
  L.l2(0, 2, 3) = 1;  // g x g -> M
  L.l2(0, 3, 2) = -1;
  EXPECT_GT(check_graded(L).count("l2_degree"), 0u);
}

TEST(CheckGraded, AgreesWithTextbookDglaAxioms) {
  Rng rng(601);
  const auto fixtures = corpus::dgla_fixtures();
  for (const auto& [name, L, gamma] : fixtures) {
    EXPECT_TRUE(textbook_dgla(L)) << name;
    EXPECT_TRUE(check_graded(L).passed()) << name;
  }
  // antisymmetric, degree-preserving perturbations of a small fixture
  const GradedL3Algebra base = lie_with_module(corpus::sl2_standard());
  int failing = 0;
  for (int n = 0; n < 30; ++n) {
    GradedL3Algebra L = base;
    const std::size_t k = rng() % 5, i = rng() % 5, j = rng() % 5;
    const int dk = L.degree_of(k), di = L.degree_of(i), dj = L.degree_of(j);
    if (dk != di + dj || i == j) continue;
    L.l2(k, i, j) += 1;
    L.l2(k, j, i) -= Rat(di * dj % 2 == 0 ? 1 : -1);
    const bool textbook = textbook_dgla(L);
    EXPECT_EQ(check_graded(L).passed(), textbook);
    failing += !textbook;
  }
  EXPECT_GT(failing, 0);
}

TEST(CheckGraded, StringAlgebra) {
  EXPECT_TRUE(check_graded(string_linf(corpus::sl2(), corpus::sl2_killing())).passed());
  EXPECT_TRUE(check_graded(string_linf(corpus::so3(), corpus::so3_form(), frac(-7, 3))).passed());
  GradedL3Algebra bad = string_linf(corpus::sl2(), corpus::sl2_killing());
  bad.l3(0, 1, 2, 3) += 1;
  const CheckReport r = check_graded(bad);
  EXPECT_GT(r.count("antisym3_12") + r.count("antisym3_23"), 0u);
  GradedL3Algebra wrong_degree = string_linf(corpus::sl2(), corpus::sl2_killing());
  wrong_degree.l3(1, 1, 2, 3) = 1;
  EXPECT_GT(check_graded(wrong_degree).count("l3_degree"), 0u);
}

TEST(CheckGraded, FixturesAndExteriorAlgebrasPass) {
  EXPECT_TRUE(corpus::four_generator_algebra(true).algebra.check().passed());
  EXPECT_TRUE(corpus::four_generator_algebra(false).algebra.check().passed());
  EXPECT_TRUE(corpus::three_generator_algebra().algebra.check().passed());
  for (const auto& [name, L, gamma] : corpus::linf_fixtures()) {
    EXPECT_FALSE(L.is_dgla()) << name;
    EXPECT_TRUE(check_graded(L).passed()) << name;
  }
}

TEST(ExteriorAlgebra, RejectsDerivationThatLeavesTheQuotient) {
  // v e1 = 0 but d/dv would send it to e1
  ExteriorAlgebra A = exterior_algebra({-1, -1, 1, 1}, {0b0110});
  const std::size_t n = A.algebra.dim();
  EXPECT_THROW(set_derivation(A, {Vector(n), unit_vector(n, A.index_of(0)), Vector(n), Vector(n)}), MathError);
}

TEST(MaurerCartan, TrivialCases) {
  for (const auto& [name, L, gamma] : corpus::dgla_fixtures()) {
    EXPECT_TRUE(is_zero(mc_residual(L, Vector(L.dim(1))))) << name;
    EXPECT_EQ(mc_residual(L, gamma).size(), L.dim(2)) << name;
  }
  GradedL3Algebra ab(0, {1, 2, 1});
  ab.l1(3, 1) = 2;
  ab.l1(3, 2) = -1;
  EXPECT_EQ(mc_residual(ab, {Vector{3, 5}}), (Vector{1}));
  EXPECT_THROW(mc_residual(ab, Vector{1}), ShapeError);
}

TEST(MaurerCartan, DesignedElementsSolveTheEquation) {
  for (const auto& [name, L, gamma] : corpus::dgla_fixtures()) {
    EXPECT_FALSE(is_zero(gamma)) << name;
    EXPECT_TRUE(is_zero(mc_residual(L, gamma))) << name;
  }
  for (const auto& [name, L, gamma] : corpus::linf_fixtures()) EXPECT_TRUE(is_zero(mc_residual(L, gamma))) << name;
}

TEST(MaurerCartan, NoncommutingPairIsNotMaurerCartan) {
  // x e1 + y e2 has residual [x,y] e1 e2 when delta = 0
  const GradedL3Algebra g = lie_as_graded(corpus::so3());
  const ExteriorAlgebra A = corpus::four_generator_algebra(false);
  const GradedL3Algebra L = tensor_product(g, A.algebra);
  const Vector gamma = corpus::gamma_of(g, A, {{unit_vector(3, 0), 4}, {unit_vector(3, 1), 8}});
  const Vector expected =
      L.component(2, tensor_element(g, A.algebra, unit_vector(3, 2), unit_vector(A.algebra.dim(), A.index_of(12))));
  EXPECT_EQ(mc_residual(L, gamma), expected);
  EXPECT_THROW(twist(L, gamma), MathError);
}

TEST(Twist, ZeroElementChangesNothing) {
  for (const auto& [name, L, gamma] : corpus::dgla_fixtures()) EXPECT_EQ(twist(L, Vector(L.dim(1))), L) << name;
  for (const auto& [name, L, gamma] : corpus::linf_fixtures()) EXPECT_EQ(twist(L, Vector(L.dim(1))), L) << name;
}

TEST(Twist, DglaDifferentialIsShiftedAndSquaresToZero) {
  for (const auto& [name, L, gamma] : corpus::dgla_fixtures()) {
    const GradedL3Algebra t = twist(L, gamma);
    const Vector g = L.embed(1, gamma);
    Matrix expected = L.l1;
    for (std::size_t i = 0; i < L.total(); ++i) {
      const Vector col = L.b2(g, L.e(i));
      for (std::size_t k = 0; k < L.total(); ++k) expected(k, i) += col[k];
    }
    EXPECT_EQ(t.l1, expected) << name;
    EXPECT_NE(t.l1, L.l1) << name;
    EXPECT_TRUE((t.l1 * t.l1).is_zero()) << name;
    EXPECT_EQ(t.l2, L.l2) << name;
    EXPECT_TRUE(check_graded(t).passed()) << name;
  }
}

TEST(Twist, TernaryBracketFixturesStayValid) {
  for (const auto& [name, L, gamma] : corpus::linf_fixtures()) {
    const GradedL3Algebra t = twist(L, gamma);
    EXPECT_TRUE(check_graded(t).passed()) << name;
    EXPECT_EQ(t.l3, L.l3) << name;
    if (!is_zero(gamma)) { EXPECT_NE(t.l2, L.l2) << name; }
  }
}

TEST(SymmetryAction, VanishesExactlyOnTheKernel) {
  for (const auto& [name, L, gamma] : corpus::dgla_fixtures()) {
    EXPECT_TRUE(is_zero(symmetry_action_residual(L, gamma, Vector(L.dim(0))))) << name;
    const SymmetryAlgebra s = symmetry_algebra(L, gamma);
    for (std::size_t k = 0; k < s.kernel.dim(); ++k) EXPECT_TRUE(is_zero(symmetry_action_residual(L, gamma, s.kernel.vector(k)))) << name;
    for (std::size_t i = 0; i < L.dim(0); ++i) {
      const Vector x = unit_vector(L.dim(0), i);
      EXPECT_EQ(is_zero(symmetry_action_residual(L, gamma, x)), membership(s.kernel, x).member) << name;
    }
  }
  GradedL3Algebra ab(0, {1, 2});
  ab.l1(1, 0) = 3;
  ab.l1(2, 0) = 4;
  EXPECT_EQ(symmetry_action_residual(ab, Vector(2), Vector{2}), (Vector{6, 8}));
}

TEST(InnerSymmetriesN2, LieAlgebraActingOnModule) {
  for (const auto& [name, r] : corpus::modules()) {
    const EL2Algebra e = inner_symmetries_n2(lie_with_module(r), Vector{});
    EXPECT_TRUE(check_el2(e).passed()) << name;
    EXPECT_TRUE(is_strict(e)) << name;
    EXPECT_TRUE(e.d().is_zero()) << name;
    EXPECT_EQ(e.b00, r.g.c) << name;
    EXPECT_EQ(e.b01, r.rho) << name;
  }
}

TEST(InnerSymmetriesN2, DifferentialGivesStrictCrossedModule) {
  const ExteriorAlgebra A = corpus::three_generator_algebra();
  for (const auto& g : {corpus::sl2(), corpus::nonabelian2()}) {
    const GradedL3Algebra base = lie_as_graded(g);
    // x e1 + y e2 - [x,y] u e1 e2 with u, e1, e2 = bits 1, 2, 4
    const Vector x = unit_vector(g.dim, 0), y = unit_vector(g.dim, 1);
    const GradedL3Algebra L = tensor_product(base, A.algebra);
    const Vector gamma = corpus::gamma_of(base, A, {{x, 2}, {y, 4}, {-g.bracket(x, y), 7}});
    ASSERT_TRUE(is_mc(L, gamma));
    const EL2Algebra e = inner_symmetries_n2(L, gamma);
    EXPECT_FALSE(e.d().is_zero());
    EXPECT_TRUE(check_el2(e).passed());
    EXPECT_TRUE(is_strict(e));
    EXPECT_TRUE(crossed_module_report(e.bracket()).passed());
  }
}

TEST(InnerSymmetriesN2, TernaryBracketGivesSemistrictWithJacobiator) {
  for (const auto& [name, L, gamma] : corpus::linf_fixtures()) {
    const EL2Algebra e = inner_symmetries_n2(L, gamma);
    EXPECT_TRUE(check_el2(e).passed()) << name;
    EXPECT_TRUE(is_semistrict(e)) << name;
    // with gamma = h (e1 + e2) the kernel is h plus central elements, where l3 vanishes
    if (is_zero(gamma)) { EXPECT_FALSE(e.jac.is_zero()) << name; }
  }
}

TEST(InnerSymmetriesN2, RejectsBadInput) {
  const auto fixtures = corpus::dgla_fixtures();
  EXPECT_THROW(inner_symmetries_n2(fixtures[0].L, fixtures[0].gamma), ShapeError);
  const auto linf = corpus::linf_fixtures();
  const auto& s = linf[0];
  Vector bad = s.gamma;
  bad[0] += 1;
  if (!is_mc(s.L, bad)) { EXPECT_THROW(inner_symmetries_n2(s.L, bad), MathError); }
}

TEST(InnerSymmetriesN3, AbelianDglaIsZero) {
  GradedL3Algebra L(-2, {2, 3, 1});
  const InnerSymmetries3 s = inner_symmetries_n3(L, Vector{});
  EXPECT_TRUE(check_el2(s.algebra).passed());
  EXPECT_TRUE(s.algebra.b00.is_zero() && s.algebra.alt.is_zero());
  EXPECT_TRUE(check_morphism(s.partial).passed());
  EXPECT_TRUE(symmetry_action_report(s).passed());
}

TEST(InnerSymmetriesN3, QuadraticDglaRecoversQuadraticAlgebra) {
  for (const auto& [name, g, k] : corpus::quadratic_lie_algebras()) {
    const InnerSymmetries3 s = inner_symmetries_n3(quadratic_dgla(g, k), Vector{});
    EXPECT_EQ(s.algebra, from_quadratic_lie(g, k)) << name;
    EXPECT_TRUE(check_morphism(s.partial).passed()) << name;
    EXPECT_TRUE(symmetry_action_report(s).passed()) << name;
  }
}

TEST(InnerSymmetriesN3, DesignedFixturesSatisfyEveryIdentity) {
  for (const auto& [name, L, gamma] : corpus::dgla_fixtures()) {
    const InnerSymmetries3 s = inner_symmetries_n3(L, gamma);
    EXPECT_TRUE(check_el2(s.algebra).passed()) << name;
    EXPECT_TRUE(is_hemistrict(s.algebra)) << name;
    EXPECT_FALSE(s.algebra.alt.is_zero()) << name;
    EXPECT_TRUE(check_morphism(s.partial).passed()) << name;
    EXPECT_TRUE(symmetry_action_report(s).passed()) << name;
    const EL2Algebra ss = skew_symmetrize(s.algebra);
    EXPECT_TRUE(check_el2(ss).passed()) << name;
    EXPECT_TRUE(is_semistrict(ss)) << name;
  }
}

TEST(InnerSymmetriesN3, TwistingChangesTheStructure) {
  for (const auto& [name, L, gamma] : corpus::dgla_fixtures()) {
    const InnerSymmetries3 twisted = inner_symmetries_n3(L, gamma), plain = inner_symmetries_n3(L, Vector(L.dim(1)));
    EXPECT_FALSE(twisted.algebra == plain.algebra && twisted.kernel == plain.kernel) << name;
  }
}

TEST(InnerSymmetriesN3, CorruptedActionIsDetected) {
  const auto f = corpus::dgla_fixtures()[0];
  InnerSymmetries3 s = inner_symmetries_n3(f.L, f.gamma);
  ASSERT_FALSE(s.action0.empty());
  s.action0[0](0, 0) += 1;
  EXPECT_FALSE(symmetry_action_report(s).passed());
}

TEST(InnerSymmetriesN3, RejectsBadInput) {
  EXPECT_THROW(inner_symmetries_n3(corpus::linf_fixtures()[0].L, corpus::linf_fixtures()[0].gamma), MathError);
  const GradedL3Algebra g = lie_as_graded(corpus::so3());
  const ExteriorAlgebra A = corpus::four_generator_algebra(false);
  const GradedL3Algebra L = tensor_product(g, A.algebra);
  EXPECT_THROW(inner_symmetries_n3(L, corpus::gamma_of(g, A, {{unit_vector(3, 0), 4}, {unit_vector(3, 1), 8}})), MathError);
}

}  // namespace
}  // namespace lie2
