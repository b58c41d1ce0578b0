#include "qit/homological.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace qit {

HomDim pd_cutoff(const Representation& m, const BoundQuiverAlgebra& a, std::size_t cutoff, const SyzygyGraph* graph,
                 std::optional<std::size_t> finite_pd_bound) {
  std::optional<SyzygyGraph> own;
  if (a.is_monomial()) {
    if (!graph) {
      own = build_syzygy_graph(a);
      graph = &*own;
    }
    const std::size_t b = graph->max_finite_ideal_pd() + 2;
    finite_pd_bound = finite_pd_bound ? std::min(*finite_pd_bound, b) : b;
  }
  const std::size_t steps = finite_pd_bound ? *finite_pd_bound + 1 : cutoff + 1;
  if (m.is_zero()) return HomDim::finite(0);
  Representation cur = m;
  try {
    for (std::size_t k = 1; k <= steps; ++k) {
      ProjectiveCover pc = projective_cover_syzygy(cur, a, kSyzygyBudget);
      if (pc.syzygy.is_zero()) return HomDim::finite(k - 1);
      cur = std::move(pc.syzygy);
    }
  } catch (const BudgetExceeded&) {
    return HomDim::unknown();
  }
  return finite_pd_bound ? HomDim::infinite() : HomDim::unknown();
}

HomDim id_cutoff(const Representation& m, const BoundQuiverAlgebra& op, std::size_t cutoff,
                 const SyzygyGraph* op_graph) {
  return pd_cutoff(dualize(m), op, cutoff, op_graph);
}

bool is_selfinjective(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& op) {
  for (VertexId v = 0; v < a.vertex_count(); ++v)
    if (!projective_cover_syzygy(injective_module(op, v), a).syzygy.is_zero()) return false;
  return true;
}

bool is_selfinjective(const BoundQuiverAlgebra& a) { return is_selfinjective(a, opposite(a)); }

GorensteinProfile gorenstein_profile(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& op, std::size_t cutoff) {
  std::optional<SyzygyGraph> graph, op_graph;
  if (a.is_monomial()) graph = build_syzygy_graph(a);
  if (op.is_monomial()) op_graph = build_syzygy_graph(op);

  GorensteinProfile g;
  g.id_right = HomDim::finite(0);
  g.pd_of_dual = HomDim::finite(0);
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    g.id_right = sup(g.id_right, id_cutoff(projective_module(a, v), op, cutoff, op_graph ? &*op_graph : nullptr));
    g.pd_of_dual = sup(g.pd_of_dual, pd_cutoff(injective_module(op, v), a, cutoff, graph ? &*graph : nullptr));
  }
  if (g.id_right.is_finite() && g.pd_of_dual.is_finite()) {
    if (g.id_right.value() != g.pd_of_dual.value())
      throw std::logic_error("id A_A = " + g.id_right.to_string() + " but pd D(A^op) = " + g.pd_of_dual.to_string());
    g.m = g.id_right;
    g.selfinjective = g.m.value() == 0;
  } else if (g.id_right.is_infinite() || g.pd_of_dual.is_infinite()) {
    g.m = HomDim::infinite();
  }
  return g;
}

GorensteinProfile gorenstein_profile(const BoundQuiverAlgebra& a, std::size_t cutoff) {
  return gorenstein_profile(a, opposite(a), cutoff);
}

Representation regular_module(const BoundQuiverAlgebra& a) {
  Representation out = Representation::zero(a.quiver());
  for (VertexId v = 0; v < a.vertex_count(); ++v) out = direct_sum(out, projective_module(a, v));
  return out;
}

PerpResult perp_membership(const Representation& m, const BoundQuiverAlgebra& a, std::size_t cutoff) {
  PerpResult r;
  std::vector<std::size_t> ext;
  try {
    ext = ext_dims(m, regular_module(a), cutoff, a);
  } catch (const BudgetExceeded&) {
    return r;
  }
  for (std::size_t i = 1; i <= cutoff; ++i) {
    r.checked_up_to = i;
    if (ext[i] != 0) {
      r.status = PerpResult::Status::Out;
      r.witness_degree = i;
      return r;
    }
  }
  r.status = PerpResult::Status::Certified;
  return r;
}

}  // namespace qit
