#include <gtest/gtest.h>

#include "csinv/error.hpp"
#include "csinv/expression.hpp"
#include "csinv/surfaces.hpp"
#include "csinv/topology.hpp"
#include "generators.hpp"

namespace csinv {
namespace {

SumExpression sum(std::string_view text) {
  static const Catalog catalog;
  return resolve(parse_expression(text), catalog);
}

// Branched double cover of CP2 along a curve C of degree 2k:
// e = 2 e(CP2) - e(C), tau = 2 tau(CP2) - C.C / 2.
struct Oracle {
  std::int64_t chi, tau;
};
Oracle double_cover_oracle(std::int64_t k) {
  const std::int64_t d = 2 * k;
  const std::int64_t genus = (d - 1) * (d - 2) / 2;
  return {2 * 3 - (2 - 2 * genus), 2 * 1 - d * d / 2};
}
// Degree-d hypersurface in CP3 via c1 = (4-d)h, c2 = (6-4d+d^2)h^2, h^3 = d.
Oracle hypersurface_oracle(std::int64_t d) {
  const std::int64_t c2 = d * (6 - 4 * d + d * d);
  const std::int64_t c1sq = d * (4 - d) * (4 - d);
  return {c2, (c1sq - 2 * c2) / 3};
}

TEST(Topology, ConnectedSumBookkeeping) {
  const BettiData b = connected_sum(sum("DC8 # DC8"));
  EXPECT_EQ(b.euler(), 90);
  EXPECT_EQ(b.signature(), -60);
  EXPECT_EQ(b.b_plus, 14);
  EXPECT_EQ(b.two_chi_plus_three_tau(), 0);

  const BettiData x = connected_sum(sum("DC8 # rev(DC8)"));
  EXPECT_EQ(x.b2(), 88);
  EXPECT_EQ(x.b_plus, 44);
  EXPECT_EQ(x.b_minus, 44);
  EXPECT_EQ(x.signature(), 0);

  EXPECT_EQ(two_chi_plus_three_tau(sum("K3 # K3")), -4);
  EXPECT_EQ(two_chi_plus_three_tau(sum("S4")), 4);
  EXPECT_EQ(connected_sum(std::vector<Summand>{}), BettiData{});
}

TEST(Topology, ReversalIsAnInvolution) {
  const Catalog catalog;
  const ManifoldBlock& dc8 = catalog.block(kDC8);
  const ManifoldBlock r = reverse_orientation(dc8);
  EXPECT_EQ(r.betti.b_plus, 37);
  EXPECT_EQ(r.betti.b_minus, 7);
  EXPECT_EQ(r.betti.signature(), 30);
  EXPECT_FALSE(r.c1_squared.has_value());
  EXPECT_EQ(reverse_orientation(r).betti, dc8.betti);
  EXPECT_EQ(reverse_orientation(catalog.block(kS4)).betti, catalog.block(kS4).betti);
}

TEST(Topology, SingleBlockUnchanged) {
  const Catalog catalog;
  for (const CatalogEntry* e : catalog.entries()) {
    EXPECT_EQ(connected_sum(SumExpression({{e->block, false, 1}})), e->block.betti) << e->block.name;
  }
}

TEST(Topology, NormalizationMergesEqualSummands) {
  EXPECT_EQ(sum("DC8 # S4 # DC8"), sum("S4 # 2*DC8"));
  EXPECT_EQ(sum("DC8 # S4 # DC8").summands().size(), 2u);
  EXPECT_EQ(sum("3*K3 # rev(K3)").count(), 4);
}

TEST(Topology, SumFlagsPropagation) {
  const auto flags = [](std::string_view t) { return sum_flags(sum(t).summands()); };
  EXPECT_EQ(flags("K3 # K3").spin, Tri::yes);
  EXPECT_EQ(flags("K3 # CP2").spin, Tri::no);
  EXPECT_EQ(flags("CP2 # 3*CP2bar # S1xS3").admits_psc, Tri::yes);
  EXPECT_NE(flags("CP2 # K3").admits_psc, Tri::yes);
}

TEST(Surfaces, OcticDoubleCover) {
  const ManifoldBlock x = double_cover_cp2(4);
  EXPECT_EQ(x.c1_squared, 2);
  EXPECT_EQ(double_cover_geometric_genus(4), 3);
  EXPECT_EQ(x.betti.b_plus, 7);
  EXPECT_EQ(x.betti.b_minus, 37);
  EXPECT_EQ(x.betti.euler(), 46);
  EXPECT_EQ(x.betti.signature(), -30);
  EXPECT_EQ(*x.c1_squared, x.betti.two_chi_plus_three_tau());
}

TEST(Surfaces, DoubleCoverFamilyMatchesOracle) {
  for (std::int64_t k = 3; k <= 40; ++k) {
    const ManifoldBlock x = double_cover_cp2(k);
    const Oracle o = double_cover_oracle(k);
    EXPECT_EQ(x.betti.euler(), o.chi) << k;
    EXPECT_EQ(x.betti.signature(), o.tau) << k;
    EXPECT_EQ(*x.c1_squared, 2 * (k - 3) * (k - 3)) << k;
    EXPECT_EQ(x.betti.b_plus, 2 * double_cover_geometric_genus(k) + 1) << k;
    EXPECT_NO_THROW(validate_block(x));
  }
  EXPECT_THROW(double_cover_cp2(2), Error);
}

TEST(Surfaces, HypersurfaceFamilyMatchesOracle) {
  const ManifoldBlock q = hypersurface_cp3(5);
  EXPECT_EQ(q.c1_squared, 5);
  EXPECT_EQ(q.betti.euler(), 55);
  EXPECT_EQ(q.betti.signature(), -35);
  EXPECT_EQ(q.betti.b_plus, 9);
  for (std::int64_t d = 1; d <= 30; ++d) {
    const ManifoldBlock x = hypersurface_cp3(d);
    const Oracle o = hypersurface_oracle(d);
    EXPECT_EQ(x.betti.euler(), o.chi) << d;
    EXPECT_EQ(x.betti.signature(), o.tau) << d;
    EXPECT_EQ(x.betti.b_plus, 2 * hypersurface_geometric_genus(d) + 1) << d;
  }
  EXPECT_THROW(hypersurface_cp3(0), Error);
}

TEST(Surfaces, QuarticIsK3) {
  const Catalog catalog;
  const ManifoldBlock& k3 = catalog.block(kK3);
  EXPECT_EQ(hypersurface_cp3(4).betti, k3.betti);
  EXPECT_EQ(double_cover_cp2(3).betti, k3.betti);
  EXPECT_EQ(hypersurface_cp3(4).flags.spin, Tri::yes);
  EXPECT_EQ(k3.betti.b_plus, 3);
  EXPECT_EQ(k3.betti.signature(), -16);
  EXPECT_TRUE(is_k3(hypersurface_cp3(4)));
}

TEST(Catalog, StandardYamabeValues) {
  const Catalog catalog;
  EXPECT_EQ(catalog.block(kCP2).yamabe, ExactReal(Rational(12), 1, 2));
  EXPECT_EQ(catalog.block(kS4).yamabe, ExactReal(Rational(8), 1, 6));
  try {
    (void)catalog.block("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownBlock);
  }
  for (const CatalogEntry* e : catalog.entries()) EXPECT_NO_THROW(validate_block(e->block));
}

TEST(Catalog, DissolveAnnotationIsStored) {
  const Catalog catalog;
  ASSERT_EQ(catalog.dissolve_annotations().size(), 1u);
  const DissolveAnnotation& d = catalog.dissolve_annotations().front();
  EXPECT_EQ(d.k, 44);
  EXPECT_EQ(d.l, 44);
  std::int64_t b2 = 0;
  for (const auto& p : d.parts) b2 += p.multiplicity * catalog.block(p.name).betti.b2();
  EXPECT_EQ(b2, d.k + d.l);
}

TEST(Catalog, UserTableParsesAndMerges) {
  const auto entries = parse_catalog(
      "# comment\nG 0 11 43 16 spin=y,symplectic=y,sw2=y manual entry\n");
  ASSERT_EQ(entries.size(), 1u);
  const ManifoldBlock& g = entries[0].block;
  EXPECT_EQ(*g.c1_squared, g.betti.two_chi_plus_three_tau());
  EXPECT_EQ(g.flags.sw_mod2_nonzero, Tri::yes);
  EXPECT_EQ(g.flags.admits_psc, Tri::unknown);
  EXPECT_EQ(g.provenance, "manual entry");

  Catalog catalog;
  catalog.merge(entries);
  EXPECT_NE(catalog.find("G"), nullptr);
  EXPECT_THROW(catalog.merge(entries), Error);
}

TEST(Catalog, LintRejectsInconsistentBlocks) {
  EXPECT_THROW(parse_catalog("Bad 0 1 1 5 - wrong c1 squared\n"), Error);
  EXPECT_THROW(parse_catalog("Bad 0 1 x 0 -\n"), Error);
  EXPECT_THROW(parse_catalog("Bad 0 1 1 0 spin=maybe\n"), Error);
}

TEST(Catalog, RenderParsesBack) {
  const Catalog catalog;
  const auto reparsed = parse_catalog(render_catalog(catalog.entries()));
  const auto original = catalog.entries();
  ASSERT_EQ(reparsed.size(), original.size());
  for (std::size_t i = 0; i < reparsed.size(); ++i) {
    EXPECT_EQ(reparsed[i].block.betti, original[i]->block.betti);
    EXPECT_EQ(reparsed[i].block.flags, original[i]->block.flags);
    EXPECT_EQ(reparsed[i].block.c1_squared, original[i]->block.c1_squared);
  }
}

// chi and tau of a sum follow the closed form regardless of term order.
TEST(TopologyProperty, SumFormula) {
  testgen::Gen g(0x70b0);
  const Catalog catalog;
  for (int i = 0; i < 300; ++i) {
    const ExpressionAST ast = testgen::random_ast(g);
    const SumExpression expr = resolve(ast, catalog);
    std::int64_t chi = 0, tau = 0, n = 0;
    for (const Term& t : ast.terms) {
      const ResolvedNode r = resolve(t.node, catalog);
      const ManifoldBlock b = r.oriented();
      chi += t.multiplier * b.betti.euler();
      tau += t.multiplier * b.betti.signature();
      n += t.multiplier;
    }
    const BettiData b = connected_sum(expr);
    EXPECT_EQ(b.euler(), chi - 2 * (n - 1));
    EXPECT_EQ(b.signature(), tau);
  }
}

}  // namespace
}  // namespace csinv
