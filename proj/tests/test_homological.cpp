#include <gtest/gtest.h>

#include "corpus.hpp"
#include "qit/algebra_io.hpp"
#include "qit/homological.hpp"

using namespace qit;
using qit::testing::load_all_corpus;
using qit::testing::load_corpus;

namespace {

Representation module(const BoundQuiverAlgebra& a, const char* expr, const BoundQuiverAlgebra* op = nullptr) {
  return module_from_expr(parse_module_expr(expr, a.quiver()), a, op);
}

std::size_t default_cutoff(const BoundQuiverAlgebra& a) { return 2 * a.dimension() + 2; }

}  // namespace

TEST(Pd, BridgeExampleInjective) {
  auto a = load_corpus("ex4");
  EXPECT_EQ(pd_cutoff(module(a, "I(1)"), a, default_cutoff(a)), HomDim::finite(1));
  EXPECT_EQ(pd_cutoff(module(a, "P(1)+P(2)"), a, default_cutoff(a)), HomDim::finite(0));
}

TEST(Pd, CycleSimpleIsCertifiedInfinite) {
  auto a = load_corpus("e5");
  EXPECT_TRUE(pd_cutoff(simple_module(a, 0), a, default_cutoff(a)).is_infinite());
  // Certification over a monomial algebra does not depend on the cutoff.
  EXPECT_TRUE(pd_cutoff(simple_module(a, 0), a, 1).is_infinite());
}

TEST(Pd, UnknownWithoutCertificate) {
  // Non-monomial and not known to be Gorenstein: past the cutoff the answer
  // stays open.
  auto a = load_corpus("ex4");
  EXPECT_TRUE(pd_cutoff(simple_module(a, 0), a, 4).is_unknown());
  // With a bound on finite pds, the same computation certifies infinity.
  EXPECT_TRUE(pd_cutoff(simple_module(a, 0), a, 4, nullptr, 1).is_infinite());
}

TEST(Pd, FiniteValuesAcrossMonomialCorpus) {
  for (const auto& [name, a] : load_all_corpus()) {
    if (!a.is_monomial()) continue;
    auto g = build_syzygy_graph(a);
    for (VertexId v = 0; v < a.vertex_count(); ++v)
      EXPECT_EQ(pd_cutoff(simple_module(a, v), a, default_cutoff(a)), g.node(g.simple_node(v)).pd) << name;
  }
}

TEST(Id, BridgeExample) {
  auto a = load_corpus("ex4");
  auto op = opposite(a);
  EXPECT_EQ(id_cutoff(module(a, "P(2)"), op, default_cutoff(a)), HomDim::finite(1));
  EXPECT_EQ(id_cutoff(module(a, "P(1)"), op, default_cutoff(a)), HomDim::finite(0));
  for (VertexId v = 0; v < 2; ++v)
    EXPECT_EQ(id_cutoff(injective_module(op, v), op, default_cutoff(a)), HomDim::finite(0));
}

TEST(Selfinjective, Examples) {
  EXPECT_TRUE(is_selfinjective(load_corpus("kx2")));
  EXPECT_FALSE(is_selfinjective(load_corpus("ex4")));
  auto e5 = load_corpus("e5");
  EXPECT_FALSE(is_selfinjective(e5));
  // I(2) has dimension 3 while every projective has dimension 2.
  auto op = opposite(e5);
  EXPECT_EQ(injective_module(op, 1).total_dimension(), 3u);
}

TEST(Gorenstein, Examples) {
  auto ex4 = gorenstein_profile(load_corpus("ex4"), 14);
  EXPECT_EQ(ex4.id_right, HomDim::finite(1));
  EXPECT_EQ(ex4.pd_of_dual, HomDim::finite(1));
  EXPECT_EQ(ex4.m, HomDim::finite(1));
  EXPECT_FALSE(ex4.selfinjective);

  auto kx2 = gorenstein_profile(load_corpus("kx2"), 6);
  EXPECT_EQ(kx2.m, HomDim::finite(0));
  EXPECT_TRUE(kx2.selfinjective);

  auto a2 = gorenstein_profile(load_corpus("a2"), 8);
  EXPECT_EQ(a2.m, HomDim::finite(1));
  EXPECT_FALSE(a2.selfinjective);

  auto e5 = gorenstein_profile(load_corpus("e5"), 22);
  EXPECT_TRUE(e5.m.is_infinite());
}

TEST(Gorenstein, BothSidesAgreeAcrossCorpus) {
  for (const auto& [name, a] : load_all_corpus()) {
    const auto p = gorenstein_profile(a, default_cutoff(a));
    if (p.id_right.is_finite() && p.pd_of_dual.is_finite()) {
      EXPECT_EQ(p.id_right, p.pd_of_dual) << name;
    }
    const auto q = gorenstein_profile(opposite(a), default_cutoff(a));
    EXPECT_EQ(p.m, q.m) << name;
    EXPECT_EQ(p.selfinjective, is_selfinjective(a)) << name;
  }
}

TEST(Perp, CycleSimpleIsOutAtDegreeOne) {
  auto a = load_corpus("e5");
  const auto r = perp_membership(simple_module(a, 0), a, 5);
  EXPECT_EQ(r.status, PerpResult::Status::Out);
  EXPECT_EQ(r.witness_degree, 1u);
}

TEST(Perp, ProjectivesAreCertified) {
  for (const auto& [name, a] : load_all_corpus())
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
      const auto r = perp_membership(projective_module(a, v), a, 4);
      EXPECT_EQ(r.status, PerpResult::Status::Certified) << name;
      EXPECT_EQ(r.checked_up_to, 4u) << name;
    }
}

TEST(Perp, SyzygyOverOneGorenstein) {
  auto a = load_corpus("ex4");
  const auto omega = projective_cover_syzygy(simple_module(a, 0), a).syzygy;
  EXPECT_EQ(perp_membership(omega, a, 6).status, PerpResult::Status::Certified);
}

TEST(Perp, RegularModule) {
  auto a = load_corpus("ex4");
  auto r = regular_module(a);
  EXPECT_EQ(r.total_dimension(), a.dimension());
  EXPECT_EQ(r.dims(), (std::vector<std::size_t>{2, 4}));
}
