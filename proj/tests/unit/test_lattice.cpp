#include <gtest/gtest.h>

#include <algorithm>

#include "csinv/error.hpp"
#include "csinv/lattice.hpp"
#include "generators.hpp"
#include "lattice_cases.hpp"

namespace csinv {
namespace {

RatMatrix column(std::initializer_list<Rational> v) {
  RatMatrix m(v.size(), 1);
  std::size_t i = 0;
  for (const Rational& x : v) m(i++, 0) = x;
  return m;
}

IntMatrix e8_negative() {
  // Cartan matrix of E8 (Bourbaki labelling), negated.
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  const std::pair<int, int> edges[] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
  for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
  return g;
}

TEST(Matrix, ExactLinearAlgebra) {
  const IntMatrix m{{2, 1}, {1, 3}};
  EXPECT_EQ(determinant(m), 5);
  const RatMatrix inv = inverse(to_rational(m));
  EXPECT_EQ(inv * to_rational(m), RatMatrix::identity(2));
  const RatVector x = solve(to_rational(m), {Rational(3), Rational(4)});
  EXPECT_EQ(x, (RatVector{Rational(1), Rational(1)}));
  EXPECT_THROW(solve(to_rational(IntMatrix{{1, 2}, {2, 4}}), {Rational(1), Rational(1)}), Error);
  EXPECT_EQ(determinant(e8_negative()), 1);
}

TEST(Matrix, InertiaAndGrid) {
  const Inertia in = inertia(to_rational(IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(in.positive, 1u);
  EXPECT_EQ(in.negative, 1u);
  EXPECT_EQ(inertia(to_rational(e8_negative())).negative, 8u);
  const IntMatrix g = parse_grid("-2 1\n 1 -1\n");
  EXPECT_EQ(g, (IntMatrix{{-2, 1}, {1, -1}}));
  EXPECT_EQ(parse_grid(to_grid(g)), g);
  EXPECT_THROW(parse_grid("1 2\n3\n"), Error);
}

TEST(Ambient, GramShapes) {
  EXPECT_EQ(build_ambient({2, 2}, 2).lattice().gram(), IntMatrix::diagonal({4, -1, -1}));
  EXPECT_EQ(build_ambient({}, 3).lattice().gram(), IntMatrix::diagonal({0, -1, -1, -1}));
  EXPECT_EQ(build_ambient({2}, 0).lattice().gram(), IntMatrix::diagonal({2}));
  EXPECT_EQ(build_ambient_per_block({2, 16}, 1).lattice().gram(), IntMatrix::diagonal({2, 16, -1}));
  EXPECT_THROW(build_ambient({-1}, 0), Error);
}

TEST(Projection, AxisAlignedAndTilted) {
  const IntersectionLattice l(IntMatrix::diagonal({1, -1}));
  const PeriodSubspace axis(l, column({1, 0}));
  const Projection p = selfdual_project(l, axis, {Rational(3), Rational(4)});
  EXPECT_EQ(p.a_plus, (RatVector{Rational(3), Rational(0)}));
  EXPECT_EQ(p.a_plus_sq, 9);

  const PeriodSubspace tilted(l, column({2, 1}));
  const Projection q = selfdual_project(l, tilted, {Rational(3), Rational(4)});
  EXPECT_EQ(q.a_plus, (RatVector{Rational(4, 3), Rational(2, 3)}));
  EXPECT_EQ(q.a_plus_sq, Rational(4, 3));
  const RatVector minus{Rational(3) - q.a_plus[0], Rational(4) - q.a_plus[1]};
  EXPECT_EQ(q.a_plus_sq + l.square(minus), -7);

  EXPECT_EQ(selfdual_project(l, tilted, {Rational(0), Rational(0)}).a_plus_sq, 0);
}

TEST(Projection, PeriodValidation) {
  const IntersectionLattice l(IntMatrix::diagonal({1, -1}));
  EXPECT_THROW(PeriodSubspace(l, column({1, 2})), Error);
  EXPECT_THROW(PeriodSubspace(l, column({1, 0, 0})), Error);
  const IntersectionLattice h(IntMatrix::diagonal({1, 1, -1}));
  EXPECT_THROW(PeriodSubspace(h, column({1, 0, 0})), Error);
}

TEST(Monopole, Enumeration) {
  EXPECT_EQ(enumerate_monopole_classes(build_ambient({2}, 2)).size(), 8u);
  EXPECT_EQ(enumerate_monopole_classes(build_ambient({2}, 0)).size(), 2u);
  EXPECT_EQ(enumerate_monopole_classes(build_ambient_per_block({2, 2}, 1)).size(), 8u);
  EXPECT_THROW(enumerate_monopole_classes(build_ambient({2}, 10), 16), Error);
}

TEST(Monopole, GreedyAndBruteForce) {
  const AmbientLattice amb = build_ambient({2}, 2);
  const auto& l = amb.lattice();
  const PeriodSubspace tilted(l, column({1, 1, 0}));
  const Maximization m = maximize_aplus_squared(amb, tilted, enumerate_monopole_classes(amb));
  EXPECT_EQ(m.greedy.generator_signs.front(), -1);
  EXPECT_EQ(m.greedy_value, 9);
  EXPECT_EQ(m.value, 9);
  EXPECT_EQ(m.alpha_sq, 2);

  const PeriodSubspace diag(l, column({1, 0, 0}));
  const Maximization d = maximize_aplus_squared(amb, diag, enumerate_monopole_classes(amb));
  EXPECT_EQ(d.value, 2);
  EXPECT_EQ(d.greedy_value, 2);

  const AmbientLattice zero = build_ambient({}, 1);
  EXPECT_EQ(zero.alpha(), (RatVector{Rational(0), Rational(0)}));
}

TEST(Diagonalize, SmallForms) {
  const IntersectionLattice q(IntMatrix{{-2, 1}, {1, -1}});
  const Diagonalization d = diagonalize_definite(q);
  ASSERT_TRUE(d.diagonalizable);
  EXPECT_EQ(d.basis.transposed() * q.gram() * d.basis, IntMatrix::diagonal({-1, -1}));
  EXPECT_EQ(abs(determinant(d.basis)), 1);

  const Diagonalization one = diagonalize_definite(IntersectionLattice(IntMatrix{{-1}}));
  ASSERT_TRUE(one.diagonalizable);
  EXPECT_EQ(one.basis, IntMatrix::identity(1));
}

TEST(Diagonalize, MinusIdentityRoundTrips) {
  for (std::size_t k = 1; k <= 8; ++k) {
    const IntMatrix minus_i = IntMatrix::diagonal(std::vector<std::int64_t>(k, -1));
    const Diagonalization d = diagonalize_definite(IntersectionLattice(minus_i));
    ASSERT_TRUE(d.diagonalizable) << k;
    EXPECT_EQ(d.basis.transposed() * minus_i * d.basis, minus_i) << k;
    EXPECT_EQ(d.norm_minus_one.size(), 2 * k) << k;
  }
}

TEST(Diagonalize, E8IsNotDiagonal) {
  const Diagonalization d = diagonalize_definite(IntersectionLattice(e8_negative()));
  EXPECT_FALSE(d.diagonalizable);
  EXPECT_TRUE(d.norm_minus_one.empty());
  EXPECT_EQ(d.frame_size, 0u);
  EXPECT_GT(d.vectors_examined, 0u);
}

TEST(Diagonalize, Preconditions) {
  EXPECT_THROW(diagonalize_definite(IntersectionLattice(IntMatrix{{-2}})), Error);
  EXPECT_THROW(diagonalize_definite(IntersectionLattice(IntMatrix{{1}})), Error);
  const IntMatrix big = IntMatrix::diagonal(std::vector<std::int64_t>(9, -1));
  try {
    (void)diagonalize_definite(IntersectionLattice(big));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankLimit);
  }
}

// Unimodular change of basis of -I: the search must recover a frame.
TEST(DiagonalizeProperty, ConjugatedIdentity) {
  testgen::Gen g(0xd1a9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = static_cast<std::size_t>(g.range(2, 5));
    IntMatrix u = IntMatrix::identity(k);
    for (int step = 0; step < 4; ++step) {
      const std::size_t i = static_cast<std::size_t>(g.range(0, static_cast<std::int64_t>(k) - 1));
      std::size_t j = static_cast<std::size_t>(g.range(0, static_cast<std::int64_t>(k) - 2));
      if (j >= i) ++j;
      const std::int64_t c = g.coin() ? 1 : -1;
      for (std::size_t r = 0; r < k; ++r) u(r, i) += c * u(r, j);
    }
    const IntMatrix minus_i = IntMatrix::diagonal(std::vector<std::int64_t>(k, -1));
    const IntMatrix q = u.transposed() * minus_i * u;
    const Diagonalization d = diagonalize_definite(IntersectionLattice(q));
    ASSERT_TRUE(d.diagonalizable);
    EXPECT_EQ(d.basis.transposed() * q * d.basis, minus_i);
  }
}

}  // namespace
}  // namespace csinv

namespace csinv {
namespace {

TEST(LatticeProperty, SeededCases) {
  testgen::Gen g(0x1a77);
  for (int i = 0; i < 500; ++i) {
    const auto r = testgen::run_lattice_case(g);
    EXPECT_TRUE(r.decomposition) << i << '\n' << r.detail;
    EXPECT_TRUE(r.orthogonal) << i << '\n' << r.detail;
    EXPECT_TRUE(r.idempotent) << i << '\n' << r.detail;
    EXPECT_TRUE(r.chain) << i << '\n' << r.detail;
    EXPECT_TRUE(r.brute_force_matches) << i << '\n' << r.detail;
  }
}

}  // namespace
}  // namespace csinv
