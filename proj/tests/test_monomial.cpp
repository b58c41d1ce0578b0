#include <gtest/gtest.h>

#include <algorithm>

#include "corpus.hpp"
#include "qit/algebra_io.hpp"
#include "qit/monomial.hpp"
#include "qit/representation.hpp"

using namespace qit;
using qit::testing::load_all_corpus;
using qit::testing::load_corpus;

namespace {

std::vector<std::string> names(const std::vector<Path>& ps, const Quiver& q) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(q));
  return out;
}

std::vector<Path> nontrivial_basis(const BoundQuiverAlgebra& a) {
  std::vector<Path> out;
  for (const auto& p : a.basis())
    if (!p.is_trivial()) out.push_back(p);
  return out;
}

std::vector<std::size_t> add(std::vector<std::size_t> x, const std::vector<std::size_t>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

}  // namespace

TEST(MinAnnihilators, DualNumbers) {
  auto a = load_corpus("kx2");
  const Quiver& q = a.quiver();
  EXPECT_EQ(names(min_annihilators(parse_path("x", q), a), q), (std::vector<std::string>{"x"}));
}

TEST(MinAnnihilators, ProjectiveIdeal) {
  auto a = load_corpus("a2");
  const Quiver& q = a.quiver();
  EXPECT_TRUE(min_annihilators(parse_path("a", q), a).empty());
}

TEST(MinAnnihilators, CycleWithRadicalSquareZero) {
  auto a = load_corpus("e5");
  const Quiver& q = a.quiver();
  EXPECT_EQ(names(min_annihilators(parse_path("a1", q), a), q), (std::vector<std::string>{"a2"}));
}

TEST(MinAnnihilators, RejectsNonMonomial) {
  auto a = load_corpus("ex4");
  EXPECT_THROW((void)min_annihilators(parse_path("a", a.quiver()), a), NotMonomialError);
  EXPECT_THROW((void)build_syzygy_graph(a), NotMonomialError);
}

TEST(MinAnnihilators, PrefixIncomparable) {
  for (const auto& [name, a] : load_all_corpus()) {
    if (!a.is_monomial()) continue;
    const Quiver& q = a.quiver();
    for (const auto& p : nontrivial_basis(a)) {
      const auto mins = min_annihilators(p, a);
      for (const auto& x : mins)
        for (const auto& y : mins) {
          if (x == y || x.length() >= y.length()) continue;
          EXPECT_NE(y.prefix(q, x.length()), x) << name;
        }
    }
  }
}

TEST(ClassOf, IsomorphicIdealsShareKeys) {
  auto a = load_corpus("e5");
  const Quiver& q = a.quiver();
  const auto c1 = class_of(parse_path("a1", q), a);
  const auto c5 = class_of(parse_path("a5", q), a);
  EXPECT_EQ(c1.key, c5.key);
  EXPECT_EQ(c1.key.terminal, 1u);
  EXPECT_EQ(c1.dim, 1u);
  const auto p2 = class_of(Path::trivial(1), a);
  EXPECT_NE(c1.key, p2.key);
  EXPECT_TRUE(p2.projective);
  EXPECT_FALSE(c1.projective);
}

TEST(ClassOf, TrivialPathsAreProjective) {
  for (const auto& [name, a] : load_all_corpus()) {
    if (!a.is_monomial()) continue;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
      const auto c = class_of(Path::trivial(v), a);
      EXPECT_TRUE(c.projective) << name;
      EXPECT_EQ(c.dim, a.basis_from(v).size()) << name;
    }
  }
}

TEST(ClassOf, KeysDecideIsomorphism) {
  for (const auto& [name, a] : load_all_corpus()) {
    if (!a.is_monomial() || a.dimension() > 20) continue;
    const auto paths = nontrivial_basis(a);
    for (const auto& p : paths)
      for (const auto& r : paths) {
        const bool same = class_of(p, a).key == class_of(r, a).key;
        const bool iso = is_isomorphic(path_ideal_module(a, p), path_ideal_module(a, r), a);
        EXPECT_EQ(same, iso) << name << " " << p.to_string(a.quiver()) << " vs " << r.to_string(a.quiver());
      }
  }
}

TEST(SyzygyGraph, CycleWithRadicalSquareZero) {
  auto a = load_corpus("e5");
  auto g = build_syzygy_graph(a);
  std::size_t nonprojective_ideals = 0;
  for (std::size_t i = 0; i < g.path_ideal_count(); ++i) {
    const auto& n = g.node(i);
    if (n.projective) continue;
    ++nonprojective_ideals;
    EXPECT_TRUE(n.pd.is_infinite());
    ASSERT_EQ(n.successors.size(), 1u);
    // Omega sends the simple at vertex v to the simple at the next cycle vertex.
    const auto& next = g.node(n.successors[0]);
    EXPECT_EQ(next.vertex, n.vertex == 4 ? 1u : n.vertex + 1);
  }
  EXPECT_EQ(nonprojective_ideals, 4u);
  EXPECT_TRUE(g.node(g.simple_node(0)).pd.is_infinite());
  // S(2) coincides with <a1>.
  EXPECT_EQ(g.node(g.simple_node(1)).canonical, g.node_of(parse_path("a1", a.quiver()), a));
  EXPECT_EQ(g.nonprojective_classes().size(), 5u);
}

TEST(SyzygyGraph, LinearWithRelation) {
  auto a = load_corpus("a3_rel");
  auto g = build_syzygy_graph(a);
  const auto& ideal_a = g.node(g.node_of(parse_path("a", a.quiver()), a));
  EXPECT_EQ(ideal_a.pd, HomDim::finite(1));
  EXPECT_EQ(g.node(g.simple_node(0)).pd, HomDim::finite(2));
  EXPECT_EQ(g.node(g.simple_node(2)).pd, HomDim::finite(0));
}

TEST(SyzygyGraph, DualNumbersSelfLoop) {
  auto a = load_corpus("kx2");
  auto g = build_syzygy_graph(a);
  const auto classes = g.nonprojective_classes();
  ASSERT_EQ(classes.size(), 1u);
  const auto& n = g.node(classes[0]);
  EXPECT_EQ(n.successors, std::vector<std::size_t>{classes[0]});
  EXPECT_TRUE(n.pd.is_infinite());
}

TEST(SyzygyGraph, DimensionBookkeeping) {
  for (const auto& [name, a] : load_all_corpus()) {
    if (!a.is_monomial()) continue;
    const Quiver& q = a.quiver();
    for (const auto& p : nontrivial_basis(a)) {
      const auto c = class_of(p, a);
      std::size_t syz = 0;
      for (const auto& m : min_annihilators(p, a)) syz += class_of(m, a).dim;
      EXPECT_EQ(a.basis_from(p.target()).size(), c.dim + syz) << name << " " << p.to_string(q);
    }
  }
}

TEST(SyzygyGraph, RebuildIsIdempotentAndSmall) {
  for (const auto& [name, a] : load_all_corpus()) {
    if (!a.is_monomial()) continue;
    auto g1 = build_syzygy_graph(a);
    auto g2 = build_syzygy_graph(a);
    ASSERT_EQ(g1.size(), g2.size()) << name;
    for (std::size_t i = 0; i < g1.size(); ++i) {
      EXPECT_EQ(g1.node(i).successors, g2.node(i).successors) << name;
      EXPECT_EQ(g1.node(i).pd, g2.node(i).pd) << name;
    }
    EXPECT_LE(g1.path_ideal_count(), a.dimension() - a.vertex_count()) << name;
  }
}

TEST(SyzygyGraph, PdRecursion) {
  for (const auto& [name, a] : load_all_corpus()) {
    if (!a.is_monomial()) continue;
    auto g = build_syzygy_graph(a);
    for (const auto& n : g.nodes()) {
      if (n.projective) {
        EXPECT_EQ(n.pd, HomDim::finite(0)) << name;
        EXPECT_TRUE(n.successors.empty()) << name;
        continue;
      }
      HomDim expect = HomDim::finite(0);
      for (std::size_t s : n.successors) expect = sup(expect, g.node(s).pd);
      if (expect.is_finite()) expect = HomDim::finite(expect.value() + 1);
      EXPECT_EQ(n.pd, expect) << name;
    }
  }
}

TEST(SyzygyGraph, PdAgreesWithResolutions) {
  for (const auto& [name, a] : load_all_corpus()) {
    if (!a.is_monomial()) continue;
    auto g = build_syzygy_graph(a);
    std::size_t deepest = 0;
    for (const auto& n : g.nodes())
      if (n.pd.is_finite()) deepest = std::max(deepest, n.pd.value());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto& n = g.node(i);
      const Representation m = n.kind == NodeKind::Simple ? simple_module(a, n.vertex)
                                                           : path_ideal_module(a, n.representative);
      const auto res = minimal_resolution(m, a, deepest + 3);
      if (n.pd.is_finite()) {
        EXPECT_TRUE(res.finite()) << name << " node " << i;
        EXPECT_EQ(res.steps.size(), n.pd.value() + 1) << name << " node " << i;
      } else {
        EXPECT_FALSE(res.finite()) << name << " node " << i;
      }
    }
  }
}

TEST(SyzygyGraph, MinRuleMatchesLinearAlgebraSyzygy) {
  for (const auto& [name, a] : load_all_corpus()) {
    if (!a.is_monomial()) continue;
    for (const auto& p : nontrivial_basis(a)) {
      std::vector<std::size_t> expect(a.vertex_count(), 0);
      for (const auto& m : min_annihilators(p, a)) expect = add(expect, dimension_vector(class_of(m, a).key, a));
      const auto cover = projective_cover_syzygy(path_ideal_module(a, p), a);
      EXPECT_EQ(cover.syzygy.dims(), expect) << name << " " << p.to_string(a.quiver());
      EXPECT_EQ(dimension_vector(class_of(p, a).key, a), path_ideal_module(a, p).dims()) << name;
    }
  }
}
