#include <gtest/gtest.h>

#include "test_support.hpp"
#include "weyr/error.hpp"

using namespace weyr;
using namespace weyr::testing;

TEST(Perturbation, Apply) {
  std::mt19937_64 rng(40);
  const OperatorPencil p(random_int_matrix(rng, 3, 3), random_int_matrix(rng, 3, 3));
  EXPECT_EQ(apply_perturbation(p, PerturbationSpec::make_type_v(Vector(3), Vector(3), Vector(3))), p);

  const OperatorPencil z(Matrix::zero(2, 2), Matrix::zero(2, 2));
  const OperatorPencil u = apply_perturbation(z, PerturbationSpec::make_type_u(e(2, 0), e(2, 0), e(2, 1)));
  EXPECT_EQ(u.e(), (Matrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(u.a(), (Matrix{{0, 1}, {0, 0}}));

  const OperatorPencil j(Matrix::identity(2), jordan(2));
  const OperatorPencil j2 = apply_perturbation(j, PerturbationSpec::make_type_u(e(2, 0), Vector(2), e(2, 0)));
  EXPECT_EQ(j2.e(), Matrix::identity(2));
  EXPECT_EQ(j2.a(), (Matrix{{1, 1}, {0, 0}}));

  EXPECT_THROW(apply_perturbation(j, PerturbationSpec::make_type_u(e(3, 0), Vector(2), e(2, 0))), DimensionError);
  PerturbationSpec broken = PerturbationSpec::make_type_v(e(2, 0), e(2, 1), e(2, 0));
  broken.w_func = e(2, 0);
  EXPECT_THROW(broken.validate(2), PreconditionError);
}

TEST(Perturbation, MatchesPencilIdentityPointwise) {
  // λÊ - Â must equal λE - A + λ u v' - w v' (type v) or + λ u v' - u w' (type u).
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const OperatorPencil p(random_int_matrix(rng, n, n), random_int_matrix(rng, n, n));
    const Vector u = random_int_vector(rng, n), v = random_int_vector(rng, n), w = random_int_vector(rng, n);
    const Q lam(static_cast<long>(rng() % 7) - 3);
    const Matrix uv = Matrix::column(u) * Matrix::column(v).transpose();
    const Matrix wv = Matrix::column(w) * Matrix::column(v).transpose();
    const Matrix uw = Matrix::column(u) * Matrix::column(w).transpose();
    const OperatorPencil pv = apply_perturbation(p, PerturbationSpec::make_type_v(u, w, v));
    EXPECT_EQ(lam * pv.e() - pv.a(), lam * p.e() - p.a() + lam * uv - wv);
    const OperatorPencil pu = apply_perturbation(p, PerturbationSpec::make_type_u(u, v, w));
    EXPECT_EQ(lam * pu.e() - pu.a(), lam * p.e() - p.a() + lam * uv - uw);
  }
}

TEST(Distance, Examples) {
  std::mt19937_64 rng(42);
  const LinearRelation l = LinearRelation::from_graph(random_int_matrix(rng, 3, 3));
  EXPECT_EQ(relation_distance(l, l), 0u);
  EXPECT_EQ(relation_distance(LinearRelation::from_graph(Matrix::zero(2, 2)),
                              LinearRelation::from_graph(Matrix{{1, 0}, {0, 0}})),
            1u);
  EXPECT_THROW(relation_distance(l, LinearRelation::identity(2)), DimensionError);
}

TEST(Distance, OffSideExample) {
  const OperatorPencil z(Matrix::zero(2, 2), Matrix::zero(2, 2));
  const PerturbationSpec su = PerturbationSpec::make_type_u(e(2, 0), e(2, 0), e(2, 1));
  const PerturbationSpec sv = PerturbationSpec::make_type_v(e(2, 0), e(2, 1), e(2, 0));

  const LinearRelation range_side = range_representation(apply_perturbation(z, su));
  EXPECT_EQ(range_side.span(), span_of(4, {e(4, 0), e(4, 2)}));
  EXPECT_EQ(range_side.dim(), 2u);
  const LinearRelation kernel_side = kernel_representation(apply_perturbation(z, sv));
  EXPECT_EQ(kernel_side.span(), span_of(4, {e(4, 1), e(4, 3)}));
  EXPECT_TRUE(kernel_representation(z).span().is_full());

  EXPECT_EQ(off_side_distance(z, su), 2u);
  EXPECT_EQ(off_side_distance(z, sv), 2u);
  EXPECT_EQ(relation_distance(kernel_representation(z), kernel_side), 2u);
  const DistanceCheck mu = check_one_dimensional(z, su);
  EXPECT_EQ(mu.distance, 1u);
  EXPECT_TRUE(mu.pass);
  EXPECT_LE(check_one_dimensional(z, sv).distance, 1u);
}

TEST(Distance, MatchingSideBoundOnRandomPencils) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const OperatorPencil p(random_int_matrix(rng, n, n, 1, 0.6), random_int_matrix(rng, n, n, 1, 0.6));
    const Vector u = random_int_vector(rng, n), v = random_int_vector(rng, n), w = random_int_vector(rng, n);
    const auto dv = check_one_dimensional(p, PerturbationSpec::make_type_v(u, w, v));
    const auto du = check_one_dimensional(p, PerturbationSpec::make_type_u(u, v, w));
    EXPECT_TRUE(dv.pass) << dv.distance;
    EXPECT_TRUE(du.pass) << du.distance;
    EXPECT_EQ(check_one_dimensional(p, PerturbationSpec::make_type_u(Vector(n), Vector(n), Vector(n))).distance, 0u);
  }
}

TEST(WeyrDelta, Examples) {
  const OperatorPencil j(Matrix::identity(2), jordan(2));
  const TrialResult same = weyr_delta_check(j, j);
  EXPECT_TRUE(same.passed());
  EXPECT_FALSE(same.nonzero_delta);

  const OperatorPencil jp(Matrix::identity(2), Matrix{{1, 1}, {0, 0}});
  const TrialResult r = weyr_delta_check(j, jp, {ExtendedScalar(Q(0))});
  ASSERT_EQ(r.tables.size(), 1u);
  EXPECT_EQ(r.tables[0].base.indices, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(r.tables[0].perturbed.indices, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(r.nonzero_delta);
  EXPECT_TRUE(r.passed());

  const OperatorPencil j3(Matrix::identity(3), jordan(3));
  const OperatorPencil j3p = apply_perturbation(j3, PerturbationSpec::make_type_u(e(3, 0), Vector(3), e(3, 2)));
  EXPECT_TRUE(weyr_delta_check(j3, j3p).passed());

  const OperatorPencil z(Matrix::zero(2, 2), Matrix::zero(2, 2));
  EXPECT_THROW(weyr_delta_check(z, j), PreconditionError);
}

TEST(WeyrDelta, DetectsArtificialViolation) {
  // Not a rank-one perturbation: diag(J2, J2) vs 0 at λ = 0 changes w1 by 2.
  Matrix a(4, 4);
  a(0, 1) = Q(1);
  a(2, 3) = Q(1);
  const OperatorPencil base(Matrix::identity(4), a);
  const OperatorPencil other(Matrix::identity(4), Matrix::zero(4, 4));
  const TrialResult r = weyr_delta_check(base, other);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.violations.front().check, "weyr_index");
  EXPECT_EQ(r.violations.front().k, 1u);
}

TEST(WeyrDelta, IrrationalEigenvaluesAreChecked) {
  // Base: λ² - 2 eigenvalues with one chain each; perturbed shares them.
  const OperatorPencil p(Matrix::identity(2), Matrix{{0, 2}, {1, 0}});
  const TrialResult same = weyr_delta_check(p, p);
  EXPECT_TRUE(same.passed());
  EXPECT_EQ(same.unchecked_irrational, 2u);
  // A pencil with √2 of geometric multiplicity 2 compared against one without it is flagged.
  Matrix a(4, 4);
  a(0, 1) = Q(2);
  a(1, 0) = Q(1);
  a(2, 3) = Q(2);
  a(3, 2) = Q(1);
  const OperatorPencil twice(Matrix::identity(4), a);
  const TrialResult r = weyr_delta_check(OperatorPencil(Matrix::identity(4), Matrix::zero(4, 4)), twice);
  EXPECT_FALSE(r.passed());
}

TEST(WeyrDelta, RandomRankOnePerturbationsRespectBounds) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 60; ++t) {
    const CanonicalSpec spec = random_canonical_spec(rng, 5);
    const std::size_t n = spec.dimension();
    const OperatorPencil base =
        apply_equivalence(from_canonical(spec), random_unimodular(n, 2, rng), random_unimodular(n, 2, rng));
    const Vector u = random_int_vector(rng, n), v = random_int_vector(rng, n), w = random_int_vector(rng, n);
    for (const auto& s : {PerturbationSpec::make_type_u(u, v, w), PerturbationSpec::make_type_v(u, w, v)}) {
      const OperatorPencil pert = apply_perturbation(base, s);
      if (!is_regular(pert)) continue;
      const TrialResult r = weyr_delta_check(base, pert);
      EXPECT_TRUE(r.passed()) << spec.to_string();
      for (const auto& c : r.tables)
        for (std::size_t k = 1; k <= 7; ++k) {
          EXPECT_LE(std::labs(static_cast<long>(c.base.w(k)) - static_cast<long>(c.perturbed.w(k))), 1);
          EXPECT_LE(std::labs(static_cast<long>(c.base.root_dim(k)) - static_cast<long>(c.perturbed.root_dim(k))),
                    static_cast<long>(k));
        }
    }
  }
}
