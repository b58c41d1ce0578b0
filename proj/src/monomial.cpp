#include "qit/monomial.hpp"

#include <algorithm>

namespace qit {

namespace {

void require_monomial(const BoundQuiverAlgebra& a) {
  if (!a.is_monomial()) throw NotMonomialError();
}

// Over a monomial algebra a path is nonzero iff it is a basis path.
bool nonzero_product(const Path& p, const Path& q, const BoundQuiverAlgebra& a) {
  auto w = compose(p, q);
  return w && a.basis_index(*w).has_value();
}

void require_nonzero(const Path& p, const BoundQuiverAlgebra& a) {
  if (!a.basis_index(p)) throw std::invalid_argument("path " + p.to_string(a.quiver()) + " is zero in the algebra");
}

}  // namespace

std::vector<Path> min_annihilators(const Path& p, const BoundQuiverAlgebra& a) {
  require_monomial(a);
  require_nonzero(p, a);
  const Quiver& q = a.quiver();
  std::vector<Path> out;
  for (std::size_t idx : a.basis_from(p.target())) {
    const Path& r = a.basis()[idx];
    if (r.is_trivial() || nonzero_product(p, r, a)) continue;
    bool minimal = true;
    for (std::size_t len = 1; len < r.length() && minimal; ++len)
      minimal = nonzero_product(p, r.prefix(q, len), a);
    if (minimal) out.push_back(r);
  }
  return out;
}

PathIdealClass class_of(const Path& p, const BoundQuiverAlgebra& a) {
  require_monomial(a);
  require_nonzero(p, a);
  PathIdealClass c;
  c.key.terminal = p.target();
  const auto& from = a.basis_from(p.target());
  for (std::size_t idx : from)
    if (nonzero_product(p, a.basis()[idx], a)) c.key.multipliers.push_back(idx);
  c.representative = p;
  c.dim = c.key.multipliers.size();
  c.projective = c.dim == from.size();
  return c;
}

std::vector<std::size_t> dimension_vector(const PathIdealKey& key, const BoundQuiverAlgebra& a) {
  std::vector<std::size_t> dims(a.vertex_count(), 0);
  for (std::size_t idx : key.multipliers) ++dims[a.basis()[idx].target()];
  return dims;
}

std::size_t SyzygyGraph::node_of(const Path& p, const BoundQuiverAlgebra& a) const {
  if (p.is_trivial()) throw std::invalid_argument("node_of expects a path of length >= 1");
  auto id = find(class_of(p, a).key);
  if (!id) throw std::logic_error("path ideal class missing from the syzygy graph");
  return nodes_[*id].canonical;
}

std::optional<std::size_t> SyzygyGraph::find(const PathIdealKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> SyzygyGraph::nonprojective_classes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].canonical == i && !nodes_[i].projective) out.push_back(i);
  return out;
}

std::size_t SyzygyGraph::max_finite_ideal_pd() const {
  std::size_t m = 0;
  for (std::size_t i = 0; i < ideal_count_; ++i)
    if (nodes_[i].pd.is_finite()) m = std::max(m, nodes_[i].pd.value());
  return m;
}

SyzygyGraph build_syzygy_graph(const BoundQuiverAlgebra& a) {
  require_monomial(a);
  const Quiver& q = a.quiver();
  SyzygyGraph g;

  for (const Path& p : a.basis()) {
    if (p.is_trivial()) continue;
    PathIdealClass c = class_of(p, a);
    if (g.index_.contains(c.key)) continue;
    const std::size_t id = g.nodes_.size();
    SyzygyNode node;
    node.kind = NodeKind::PathIdeal;
    node.representative = p;
    node.vertex = c.key.terminal;
    node.dim = c.dim;
    node.projective = c.projective;
    node.canonical = id;
    g.index_.emplace(c.key, id);
    g.keys_.push_back(std::move(c.key));
    g.nodes_.push_back(std::move(node));
  }
  g.ideal_count_ = g.nodes_.size();

  for (std::size_t id = 0; id < g.ideal_count_; ++id) {
    auto& node = g.nodes_[id];
    if (node.projective) continue;
    for (const Path& m : min_annihilators(node.representative, a)) {
      const std::size_t s = g.node_of(m, a);
      if (!g.nodes_[s].projective) node.successors.push_back(s);
    }
    std::sort(node.successors.begin(), node.successors.end());
  }

  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const std::size_t id = g.nodes_.size();
    SyzygyNode node;
    node.kind = NodeKind::Simple;
    node.representative = Path::trivial(v);
    node.vertex = v;
    node.dim = 1;
    node.projective = q.arrows_from(v).empty();
    node.canonical = id;
    const PathIdealKey simple_key{v, {*a.basis_index(Path::trivial(v))}};
    if (auto same = g.find(simple_key)) {
      node.canonical = *same;
      node.successors = g.nodes_[*same].successors;
    } else {
      for (ArrowId arr : q.arrows_from(v)) {
        const std::size_t s = g.node_of(Path::of_arrow(q, arr), a);
        if (!g.nodes_[s].projective) node.successors.push_back(s);
      }
      std::sort(node.successors.begin(), node.successors.end());
    }
    g.keys_.push_back({v, {}});
    g.nodes_.push_back(std::move(node));
  }

  for (auto& node : g.nodes_)
    if (node.projective) node.pd = HomDim::finite(0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& node : g.nodes_) {
      if (!node.pd.is_unknown()) continue;
      std::size_t deepest = 0;
      bool resolved = true;
      for (std::size_t s : node.successors) {
        if (!g.nodes_[s].pd.is_finite()) {
          resolved = false;
          break;
        }
        deepest = std::max(deepest, g.nodes_[s].pd.value());
      }
      if (resolved) {
        node.pd = HomDim::finite(deepest + 1);
        changed = true;
      }
    }
  }
  // Whatever is left reaches a cycle.
  for (auto& node : g.nodes_)
    if (node.pd.is_unknown()) node.pd = HomDim::infinite();
  return g;
}

}  // namespace qit
