#include "qit/it_functions.hpp"

#include <algorithm>
#include <set>

namespace qit {

IgusaTodorov::IgusaTodorov(const BoundQuiverAlgebra& a) : graph_(build_syzygy_graph(a)), algebra_(&a) {}

K0Vector IgusaTodorov::class_vector(std::size_t node) const {
  K0Vector v;
  const auto& n = graph_.node(node);
  if (!n.projective) v[n.canonical] = 1;
  return v;
}

K0Vector IgusaTodorov::k0(const ModuleExpr& m) const {
  K0Vector out;
  for (const auto& t : m.terms) {
    std::optional<std::size_t> node;
    switch (t.atom.kind) {
      case AtomKind::Simple: node = graph_.simple_node(t.atom.vertex()); break;
      case AtomKind::Projective: break;
      case AtomKind::Injective:
        throw std::invalid_argument("I(v) atoms are only supported by representation operations");
      case AtomKind::Ideal:
        if (!t.atom.path.is_trivial()) node = graph_.node_of(t.atom.path, *algebra_);
        else if (!algebra_->basis_index(t.atom.path)) throw std::invalid_argument("zero path");
        break;
    }
    if (!node) continue;
    const auto& n = graph_.node(*node);
    if (n.projective) continue;
    out[n.canonical] += Integer(static_cast<unsigned long>(t.multiplicity));
  }
  return out;
}

K0Vector IgusaTodorov::omega(const K0Vector& m) const {
  K0Vector out;
  for (const auto& [id, c] : m)
    for (std::size_t s : graph_.node(id).successors) out[s] += c;
  return out;
}

K0Vector IgusaTodorov::omega(const K0Vector& m, std::size_t times) const {
  K0Vector v = m;
  for (std::size_t i = 0; i < times && !v.empty(); ++i) v = omega(v);
  return v;
}

std::vector<std::size_t> IgusaTodorov::universe(const K0Vector& m) const {
  std::set<std::size_t> seen;
  std::vector<std::size_t> stack;
  for (const auto& [id, c] : m)
    if (seen.insert(id).second) stack.push_back(id);
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    for (std::size_t s : graph_.node(id).successors)
      if (seen.insert(s).second) stack.push_back(s);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::size_t> IgusaTodorov::rank_sequence(const K0Vector& m, std::size_t levels) const {
  const auto u = universe(m);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < u.size(); ++i) pos[u[i]] = i;

  std::vector<K0Vector> gens;
  for (const auto& [id, c] : m)
    if (sgn(c) != 0) gens.push_back({{id, Integer(1)}});

  std::vector<std::size_t> ranks;
  for (std::size_t l = 0; l <= levels; ++l) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& g : gens) {
      std::vector<Integer> row(u.size(), 0);
      for (const auto& [id, c] : g) row[pos.at(id)] = c;
      rows.push_back(std::move(row));
    }
    ranks.push_back(integer_rank(std::move(rows)));
    for (auto& g : gens) g = omega(g);
  }
  return ranks;
}

std::size_t IgusaTodorov::phi(const K0Vector& m) const {
  // Omega-bar^l of the universe is its stable image once l >= |universe|, and
  // Omega-bar is injective there, so rank at level |universe| is the limit.
  const std::size_t u = universe(m).size();
  const auto ranks = rank_sequence(m, u);
  std::size_t l = 0;
  while (ranks[l] != ranks[u]) ++l;
  return l;
}

std::size_t IgusaTodorov::psi(const K0Vector& m) const {
  const std::size_t f = phi(m);
  std::size_t extra = 0;
  for (const auto& [id, c] : omega(m, f)) {
    const HomDim& d = graph_.node(id).pd;
    if (d.is_finite()) extra = std::max(extra, d.value());
  }
  return f + extra;
}

HomDim IgusaTodorov::pd(const K0Vector& m) const {
  HomDim out = HomDim::finite(0);
  for (const auto& [id, c] : m) out = sup(out, graph_.node(id).pd);
  return out;
}

std::optional<std::size_t> IgusaTodorov::omega_invariant_bound(const K0Vector& m) const {
  for (const auto& [id, c] : omega(m))
    if (!m.contains(id)) return std::nullopt;
  return m.size();
}

K0Vector IgusaTodorov::all_classes() const {
  K0Vector v;
  for (std::size_t id : graph_.nonprojective_classes()) v[id] = 1;
  return v;
}

K0Vector IgusaTodorov::all_path_ideals() const {
  K0Vector v;
  for (std::size_t id : graph_.nonprojective_classes())
    if (id < graph_.path_ideal_count()) v[id] = 1;
  return v;
}

std::size_t phi(const ModuleExpr& m, const BoundQuiverAlgebra& a) {
  IgusaTodorov it(a);
  return it.phi(it.k0(m));
}

std::size_t psi(const ModuleExpr& m, const BoundQuiverAlgebra& a) {
  IgusaTodorov it(a);
  return it.psi(it.k0(m));
}

std::optional<std::size_t> omega_invariant_bound(const ModuleExpr& m, const BoundQuiverAlgebra& a) {
  IgusaTodorov it(a);
  return it.omega_invariant_bound(it.k0(m));
}

std::vector<std::vector<Integer>> omega_bar_matrix(const std::vector<std::size_t>& classes, const SyzygyGraph& g) {
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < classes.size(); ++i) pos[g.node(classes[i]).canonical] = i;
  std::vector<std::vector<Integer>> m(classes.size(), std::vector<Integer>(classes.size(), 0));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& node = g.node(classes[c]);
    if (node.projective) continue;
    for (std::size_t s : node.successors) {
      auto it = pos.find(s);
      if (it == pos.end()) throw std::invalid_argument("class set is not closed under the syzygy");
      m[it->second][c] += 1;
    }
  }
  return m;
}

}  // namespace qit
