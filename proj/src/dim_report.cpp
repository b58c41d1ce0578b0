#include "qit/dim_report.hpp"

#include <algorithm>
#include <stdexcept>

#include "qit/it_functions.hpp"

namespace qit {

std::string to_string(FieldStatus s) {
  switch (s) {
    case FieldStatus::Exact: return "EXACT";
    case FieldStatus::Interval: return "INTERVAL";
    case FieldStatus::Unknown: return "UNKNOWN";
  }
  return {};
}

FieldStatus DimInterval::status() const {
  if (infinite) return FieldStatus::Exact;
  if (!upper) return FieldStatus::Unknown;
  return *upper == lower ? FieldStatus::Exact : FieldStatus::Interval;
}

std::string DimInterval::to_string() const {
  if (infinite) return "inf";
  if (!upper) return "[" + std::to_string(lower) + ", inf)";
  if (*upper == lower) return std::to_string(lower);
  return "[" + std::to_string(lower) + ", " + std::to_string(*upper) + "]";
}

namespace {

// Intersects `iv` with [lo, hi]; true if anything changed.
bool tighten(DimInterval& iv, std::size_t lo, std::optional<std::size_t> hi) {
  bool changed = false;
  if (lo > iv.lower) {
    iv.lower = lo;
    changed = true;
  }
  if (hi && (!iv.upper || *hi < *iv.upper)) {
    iv.upper = hi;
    changed = true;
  }
  if (iv.upper && *iv.upper < iv.lower) throw std::logic_error("inconsistent dimension bounds");
  return changed;
}

struct Rules {
  DimReport& r;
  bool apply(const std::string& tag, std::size_t lo, std::optional<std::size_t> hi) {
    return apply(tag, {lo, hi}, {lo, hi}, {lo, hi});
  }
  bool apply(const std::string& tag, std::pair<std::size_t, std::optional<std::size_t>> f,
             std::pair<std::size_t, std::optional<std::size_t>> p, std::pair<std::size_t, std::optional<std::size_t>> s) {
    bool changed = tighten(r.findim, f.first, f.second);
    changed = tighten(r.phidim, p.first, p.second) || changed;
    changed = tighten(r.psidim, s.first, s.second) || changed;
    if (changed) r.provenance.push_back(tag);
    return changed;
  }
};

}  // namespace

DimReport dim_report(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& op, std::size_t cutoff) {
  DimReport r;
  const std::size_t n = a.vertex_count();
  std::optional<IgusaTodorov> it;
  if (a.is_monomial()) it.emplace(a);
  const SyzygyGraph* graph = it ? &it->graph() : nullptr;

  r.selfinjective = is_selfinjective(a, op);
  r.profile = gorenstein_profile(a, op, cutoff);

  // For an m-Gorenstein algebra every finite pd is at most m.
  std::optional<std::size_t> fin_bound;
  if (r.profile.m.is_finite()) fin_bound = r.profile.m.value();

  for (VertexId v = 0; v < n; ++v) {
    r.simple_pd.push_back(pd_cutoff(simple_module(a, v), a, cutoff, graph, fin_bound));
    r.injective_pd.push_back(pd_cutoff(injective_module(op, v), a, cutoff, graph, fin_bound));
  }

  HomDim gl = HomDim::finite(0);
  for (const auto& d : r.simple_pd) gl = sup(gl, d);
  if (gl.is_finite()) {
    r.gldim.lower = gl.value();
    r.gldim.upper = gl.value();
  } else if (gl.is_infinite()) {
    r.gldim.infinite = true;
  } else {
    for (const auto& d : r.simple_pd)
      if (d.is_finite()) r.gldim.lower = std::max(r.gldim.lower, d.value());
  }

  std::size_t observed_findim = 0;
  for (const auto& d : r.simple_pd)
    if (d.is_finite()) observed_findim = std::max(observed_findim, d.value());
  for (const auto& d : r.injective_pd)
    if (d.is_finite()) observed_findim = std::max(observed_findim, d.value());
  if (graph)
    for (std::size_t i = 0; i < graph->path_ideal_count(); ++i)
      if (graph->node(i).pd.is_finite()) observed_findim = std::max(observed_findim, graph->node(i).pd.value());

  Rules rules{r};
  if (r.selfinjective) rules.apply("SELFINJECTIVE", 0, 0);
  if (r.profile.m.is_finite()) {
    const std::size_t m = r.profile.m.value();
    rules.apply("GORENSTEIN(" + std::to_string(m) + ")", m, m);
  }
  if (gl.is_finite()) rules.apply("FINITE_GLDIM(" + std::to_string(gl.value()) + ")", gl.value(), gl.value());

  if (it) {
    MonomialSummary ms;
    const K0Vector all = it->all_classes();
    const K0Vector ideals = it->all_path_ideals();
    ms.class_count = all.size();
    ms.ideal_class_count = ideals.size();
    ms.phi_all = it->phi(all);
    ms.psi_all = it->psi(all);
    ms.phi_ideals = it->phi(ideals);
    ms.psi_ideals = it->psi(ideals);
    for (VertexId v = 0; v < n; ++v) {
      const K0Vector s = it->class_vector(graph->simple_node(v));
      ms.simple_phi.push_back(it->phi(s));
      ms.simple_psi.push_back(it->psi(s));
    }
    rules.apply("OBSERVED_LOWER", {observed_findim, std::nullopt}, {ms.phi_all, std::nullopt},
                {ms.psi_all, std::nullopt});
    // Second syzygies lie in add of the path ideals, and phi(M) <= phi(Omega M) + 1.
    const std::size_t cap = a.dimension() - n + 2;
    const std::size_t phi_hi = std::min(ms.phi_ideals + 2, cap);
    rules.apply("MONOMIAL_BOUND", {0, phi_hi}, {0, phi_hi}, {0, ms.psi_ideals + 2});
    r.monomial = std::move(ms);
  } else {
    rules.apply("OBSERVED_LOWER", {observed_findim, std::nullopt}, {0, std::nullopt}, {0, std::nullopt});
  }

  if (r.profile.id_right.is_finite()) {
    const std::size_t idn = r.profile.id_right.value();
    rules.apply("FINITE_ID(" + std::to_string(idn) + ")", 0, idn);
  }
  if (!r.selfinjective) rules.apply("NOT_SELFINJECTIVE", {0, std::nullopt}, {1, std::nullopt}, {1, std::nullopt});

  // findim <= phidim <= psidim.
  tighten(r.phidim, r.findim.lower, std::nullopt);
  tighten(r.psidim, r.phidim.lower, std::nullopt);
  if (r.psidim.upper) tighten(r.phidim, 0, r.psidim.upper);
  if (r.phidim.upper) tighten(r.findim, 0, r.phidim.upper);
  return r;
}

DimReport dim_report(const BoundQuiverAlgebra& a, std::size_t cutoff) { return dim_report(a, opposite(a), cutoff); }

}  // namespace qit
