#include <gtest/gtest.h>

#include "test_support.hpp"
#include "weyr/error.hpp"

using namespace weyr;
using namespace weyr::testing;

namespace {

using Pair = std::pair<Vector, Vector>;

LinearRelation rel(std::size_t n, std::vector<Pair> pairs) { return LinearRelation::from_span(n, n, pairs); }

LinearRelation random_relation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < rng() % (2 * n + 1); ++i) vs.push_back(random_int_vector(rng, 2 * n, 1));
  return {n, n, Subspace::span(2 * n, vs)};
}

}  // namespace

TEST(Relation, Construction) {
  EXPECT_EQ(LinearRelation::from_graph(Matrix::identity(2)), LinearRelation::identity(2));
  const LinearRelation shuffled = rel(2, {{e(2, 1), e(2, 1)}, {Vector{Q(1), Q(1)}, Vector{Q(1), Q(1)}},
                                          {e(2, 0), e(2, 0)}, {Vector{Q(2), Q(0)}, Vector{Q(2), Q(0)}}});
  EXPECT_EQ(shuffled, LinearRelation::identity(2));
  EXPECT_EQ(LinearRelation::from_graph(jordan(2)).dim(), 2u);
  EXPECT_THROW(LinearRelation(2, 2, Subspace::full(3)), DimensionError);
}

TEST(Relation, SumExamples) {
  std::mt19937_64 rng(20);
  const Matrix m1 = random_int_matrix(rng, 3, 3), m2 = random_int_matrix(rng, 3, 3);
  EXPECT_EQ(op_sum(LinearRelation::from_graph(m1), LinearRelation::from_graph(m2)), LinearRelation::from_graph(m1 + m2));
  const LinearRelation l = LinearRelation::from_graph(m1);
  EXPECT_EQ(op_sum(l, LinearRelation::from_graph(Matrix::zero(3, 3))), l);
  const LinearRelation s = op_sum(LinearRelation::identity(1), inverse(LinearRelation::from_graph(Matrix::zero(1, 1))));
  EXPECT_EQ(s, rel(1, {{Vector{Q(0)}, Vector{Q(1)}}}));
}

TEST(Relation, SumUsesSecondComponentOfEachTerm) {
  // l = {(x, 0)}, m = {(x, x)} on F¹: sum must be the identity, not zero.
  const LinearRelation l = LinearRelation::from_graph(Matrix::zero(1, 1));
  const LinearRelation m = LinearRelation::identity(1);
  EXPECT_EQ(op_sum(l, m), LinearRelation::identity(1));
}

TEST(Relation, ComposeAndInverse) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix a = random_int_matrix(rng, n, n), b = random_int_matrix(rng, n, n);
    EXPECT_EQ(compose(LinearRelation::from_graph(a), LinearRelation::from_graph(b)), LinearRelation::from_graph(a * b));
    const LinearRelation l = random_relation(rng, n);
    EXPECT_EQ(compose(LinearRelation::identity(n), l), l);
    EXPECT_EQ(compose(l, LinearRelation::identity(n)), l);
    EXPECT_EQ(inverse(inverse(l)), l);
    EXPECT_EQ(kernel(l), mul_part(inverse(l)));
    EXPECT_EQ(domain(l), range_of(inverse(l)));
    EXPECT_EQ(power(l, 2), compose(l, l));
  }
  const LinearRelation c =
      compose(inverse(LinearRelation::from_graph(Matrix::zero(2, 2))), LinearRelation::from_graph(Matrix::identity(2)));
  EXPECT_EQ(c, LinearRelation(2, 2, Subspace::span(4, std::vector<Vector>{e(4, 2), e(4, 3)})));
}

TEST(Relation, ComposeMatchesSetDefinitionOnRandomRelations) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const LinearRelation l = random_relation(rng, n), m = random_relation(rng, n);
    const LinearRelation c = compose(m, l);
    // Every (x, y) ∈ l, (y, z) ∈ m with matching y is in c: test with basis combos where y agrees.
    const Matrix lt = l.top(), lb = l.bottom(), mt = m.top(), mb = m.bottom();
    // Solve lb a = mt b; each solution gives (lt a, mb b) ∈ c.
    const Subspace sol = null_space(hstack(lb, -mt));
    for (std::size_t k = 0; k < sol.dim(); ++k) {
      const Vector s = sol.basis().col(k);
      const Vector a(s.begin(), s.begin() + static_cast<long>(l.dim()));
      const Vector b(s.begin() + static_cast<long>(l.dim()), s.end());
      EXPECT_TRUE(c.contains(lt * a, mb * b));
    }
    EXPECT_LE(c.dim(), sol.dim());
  }
}

TEST(Relation, KernelDomainRangeMul) {
  const LinearRelation id = LinearRelation::identity(3);
  EXPECT_TRUE(kernel(id).is_zero());
  EXPECT_TRUE(mul_part(id).is_zero());
  EXPECT_TRUE(domain(id).is_full());
  EXPECT_TRUE(range_of(id).is_full());
  EXPECT_EQ(mul_part(inverse(LinearRelation::from_graph(jordan(2)))), span_of(2, {e(2, 0)}));
  const LinearRelation pure = rel(2, {{Vector(2), e(2, 0)}});
  EXPECT_TRUE(domain(pure).is_zero());
  EXPECT_EQ(mul_part(pure), span_of(2, {e(2, 0)}));
}

TEST(Relation, Shift) {
  std::mt19937_64 rng(23);
  const LinearRelation l = random_relation(rng, 3);
  EXPECT_EQ(shift(l, Q(0)), l);
  EXPECT_EQ(shift(LinearRelation::identity(2), Q(1)), LinearRelation::from_graph(Matrix::zero(2, 2)));
  EXPECT_EQ(kernel(shift(LinearRelation::from_graph(diag({Q(2), Q(3)})), Q(2))), span_of(2, {e(2, 0)}));
  EXPECT_EQ(shift(shift(l, Q(2)), Q(-2)), l);
  EXPECT_THROW(shift(LinearRelation::full(1, 2), Q(1)), DimensionError);
}

TEST(Relation, Power) {
  EXPECT_EQ(power(LinearRelation::identity(3), 5), LinearRelation::identity(3));
  EXPECT_EQ(power(LinearRelation::from_graph(jordan(3)), 3), LinearRelation::from_graph(Matrix::zero(3, 3)));
  std::mt19937_64 rng(24);
  const LinearRelation l = random_relation(rng, 2);
  EXPECT_EQ(power(l, 0), LinearRelation::identity(2));
}

TEST(Relation, RootSubspacesOfGraphsMatchMatrixPowers) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 5;
    Matrix m = random_int_matrix(rng, n, n, 1, 0.6);
    const LinearRelation g = LinearRelation::from_graph(m);
    for (const Q lam : {Q(0), Q(1), Q(-1)}) {
      const Matrix shifted = m - lam * Matrix::identity(n);
      for (std::size_t k = 1; k <= n + 1; ++k)
        EXPECT_EQ(root_subspace(g, ExtendedScalar(lam), k), null_space(power(shifted, k)));
    }
    EXPECT_TRUE(root_subspace(g, inf(), 1).is_zero());
  }
}

TEST(Relation, RootSubspaceExamples) {
  const LinearRelation j3 = LinearRelation::from_graph(jordan(3));
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(root_subspace(j3, ExtendedScalar(Q(0)), k).dim(), k);
  EXPECT_TRUE(root_subspace(LinearRelation::from_graph(jordan(2)), inf(), 1).is_zero());
  EXPECT_TRUE(root_subspace(LinearRelation::full(2, 2), ExtendedScalar(Q(0)), 1).is_full());
}

TEST(Relation, WeyrTableExamples) {
  const LinearRelation j3 = LinearRelation::from_graph(jordan(3));
  EXPECT_EQ(weyr_table(j3, ExtendedScalar(Q(0))).indices, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(weyr_table(j3, ExtendedScalar(Q(0))).root_dims, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(weyr_table(j3, ExtendedScalar(Q(1))).indices.empty());
  EXPECT_EQ(weyr_table(LinearRelation::from_graph(Matrix::zero(2, 2)), ExtendedScalar(Q(0))).indices,
            (std::vector<std::size_t>{2}));
  // Inverse of a nilpotent graph has its chain at ∞.
  EXPECT_EQ(weyr_table(inverse(j3), inf()).indices, (std::vector<std::size_t>{1, 1, 1}));
}

TEST(Relation, WeyrTablesAreMonotoneAndConsistent) {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 100; ++t) {
    const LinearRelation l = random_relation(rng, 1 + rng() % 4);
    for (const ExtendedScalar& pt : {ExtendedScalar(Q(0)), ExtendedScalar(Q(1)), inf()}) {
      const WeyrTable w = weyr_table(l, pt);
      EXPECT_TRUE(w.is_non_increasing());
      std::size_t acc = 0;
      for (std::size_t k = 1; k <= w.indices.size(); ++k) {
        acc += w.w(k);
        EXPECT_EQ(w.root_dim(k), acc);
      }
    }
  }
}

TEST(Relation, WeyrFromRootDims) {
  const WeyrTable w = weyr_from_root_dims(ExtendedScalar(Q(0)), {2, 3, 3, 3});
  EXPECT_EQ(w.indices, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(w.root_dim(7), 3u);
  EXPECT_EQ(w.w(3), 0u);
}

TEST(Relation, SingularChainSpace) {
  std::mt19937_64 rng(27);
  EXPECT_TRUE(singular_chain_space(LinearRelation::from_graph(random_int_matrix(rng, 3, 3))).is_zero());
  EXPECT_TRUE(singular_chain_space(LinearRelation::full(2, 2)).is_full());
  EXPECT_TRUE(singular_chain_space(rel(1, {{Vector{Q(0)}, Vector{Q(1)}}})).is_zero());
  // {(e1, 0), (0, e1)}: e1 is in ker and mul, so a singular chain.
  const LinearRelation s = rel(2, {{e(2, 0), Vector(2)}, {Vector(2), e(2, 0)}});
  EXPECT_EQ(singular_chain_space(s), span_of(2, {e(2, 0)}));
}

TEST(Relation, ResolventPoints) {
  const LinearRelation j2 = LinearRelation::from_graph(jordan(2));
  EXPECT_TRUE(is_resolvent_point(j2, ExtendedScalar(Q(1))));
  EXPECT_FALSE(is_resolvent_point(j2, ExtendedScalar(Q(0))));
  EXPECT_TRUE(is_resolvent_point(j2, inf()));
  EXPECT_FALSE(is_resolvent_point(inverse(j2), inf()));
}

TEST(Relation, OperatorMatrix) {
  const Matrix m{{1, 2}, {3, 4}};
  EXPECT_EQ(operator_matrix(LinearRelation::from_graph(m)), m);
  EXPECT_FALSE(operator_matrix(inverse(LinearRelation::from_graph(jordan(2)))).has_value());
}

TEST(Relation, PointSpectrumExamples) {
  const PointSpectrum a = point_spectrum(LinearRelation::from_graph(diag({Q(1), Q(2)})));
  EXPECT_EQ(a.finite, (std::vector<Q>{Q(1), Q(2)}));
  EXPECT_FALSE(a.infinity);
  const PointSpectrum b = point_spectrum(rel(1, {{Vector{Q(0)}, Vector{Q(1)}}}));
  EXPECT_TRUE(b.finite.empty());
  EXPECT_TRUE(b.infinity);
  const PointSpectrum c = point_spectrum(LinearRelation::from_graph(Matrix{{0, -1}, {1, 0}}));
  EXPECT_EQ(c.finite, (std::vector<Q>{gi(0, -1), gi(0, 1)}));
  EXPECT_THROW(point_spectrum(LinearRelation::full(2, 2)), PreconditionError);
}

TEST(Relation, PointSpectrumExcludesResolventPoints) {
  std::mt19937_64 rng(28);
  for (int t = 0; t < 80; ++t) {
    const LinearRelation l = random_relation(rng, 1 + rng() % 3);
    PointSpectrum ps;
    try {
      ps = point_spectrum(l);
    } catch (const PreconditionError&) {
      continue;
    }
    for (const auto& ev : ps.finite) {
      EXPECT_FALSE(is_resolvent_point(l, ExtendedScalar(ev)));
      EXPECT_FALSE(kernel(shift(l, ev)).is_zero());
    }
    for (const Q lam : {Q(0), Q(1), Q(-1), Q(2)})
      if (std::find(ps.finite.begin(), ps.finite.end(), lam) == ps.finite.end() && ps.residual.eval(lam) != Q(0))
        EXPECT_TRUE(kernel(shift(l, lam)).is_zero());
    EXPECT_EQ(ps.infinity, !mul_part(l).is_zero());
  }
}

TEST(Relation, ResolventRepresentationExamples) {
  const LinearRelation l = LinearRelation::from_graph(diag({Q(2), Q(3)}));
  const auto r = resolvent_representations(l, Q(0), Q(1));
  EXPECT_EQ(r.via_range, shift(l, Q(1)));
  EXPECT_EQ(r.via_kernel, shift(l, Q(1)));
  const auto same = resolvent_representations(l, Q(5), Q(5));
  EXPECT_EQ(same.via_range, shift(l, Q(5)));
  EXPECT_EQ(same.via_kernel, shift(l, Q(5)));
  const auto id = resolvent_representations(LinearRelation::identity(1), Q(2), Q(0));
  EXPECT_EQ(id.via_range, LinearRelation::identity(1));
  EXPECT_EQ(id.via_kernel, LinearRelation::identity(1));
  EXPECT_THROW(resolvent_representations(l, Q(2), Q(0)), PreconditionError);
}

TEST(Relation, ResolventRepresentationsOfMultivaluedRelations) {
  // E⁻¹A for E = diag(1, 0), A = I: multivalued, resolvent at μ = 0.
  const LinearRelation l = LinearRelation::kernel_of_row(Matrix::identity(2), -diag({Q(1), Q(0)}));
  ASSERT_FALSE(mul_part(l).is_zero());
  for (const Q lam : {Q(0), Q(3), gi(1, 1)}) {
    const auto r = resolvent_representations(l, Q(0), lam);
    EXPECT_EQ(r.via_range, shift(l, lam));
    EXPECT_EQ(r.via_kernel, shift(l, lam));
  }
}
