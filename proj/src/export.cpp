#include "qit/export.hpp"

#include <map>
#include <sstream>

namespace qit {

namespace {

std::string node_name(const SyzygyGraph& g, std::size_t id) {
  if (id < g.path_ideal_count()) return "c" + std::to_string(id);
  return "s" + std::to_string(id - g.path_ideal_count());
}

std::string node_label(const BoundQuiverAlgebra& a, const SyzygyNode& n) {
  const Quiver& q = a.quiver();
  const std::string rep = n.kind == NodeKind::Simple ? "S(" + q.vertex_name(n.vertex) + ")"
                                                     : "<" + n.representative.to_string(q) + ">";
  return rep + "\\ndim " + std::to_string(n.dim) + ", pd " + n.pd.to_string();
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const BoundQuiverAlgebra& a, const IgusaTodorov& it) {
  const SyzygyGraph& g = it.graph();
  std::ostringstream os;
  os << "digraph syzygy {\n";
  os << "  rankdir=LR;\n";
  for (std::size_t id = 0; id < g.size(); ++id) {
    const auto& n = g.node(id);
    os << "  " << node_name(g, id) << " [label=" << quoted(node_label(a, n))
       << ", shape=" << (n.projective ? "box" : "ellipse") << "];\n";
  }
  for (std::size_t id = 0; id < g.size(); ++id) {
    if (g.node(id).canonical != id) {
      // Same module as a path ideal class: link instead of repeating its edges.
      os << "  " << node_name(g, id) << " -> " << node_name(g, g.node(id).canonical)
         << " [style=dashed, arrowhead=none];\n";
      continue;
    }
    std::map<std::size_t, std::size_t> mult;
    for (std::size_t s : g.node(id).successors) ++mult[s];
    for (const auto& [s, k] : mult) {
      os << "  " << node_name(g, id) << " -> " << node_name(g, s);
      if (k > 1) os << " [label=\"" << k << "\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_csv(const BoundQuiverAlgebra& a, const IgusaTodorov& it) {
  const SyzygyGraph& g = it.graph();
  const Quiver& q = a.quiver();
  std::ostringstream os;
  os << "class_id,kind,representative,terminal_vertex,dim,pd,phi,psi\n";
  for (std::size_t id = 0; id < g.size(); ++id) {
    const auto& n = g.node(id);
    const K0Vector v = it.class_vector(id);
    const std::string pd = n.pd.is_infinite() ? "INF" : n.pd.to_string();
    os << node_name(g, id) << ',' << (n.kind == NodeKind::Simple ? "simple" : "ideal") << ','
       << (n.kind == NodeKind::Simple ? "S(" + q.vertex_name(n.vertex) + ")" : n.representative.to_string(q)) << ','
       << q.vertex_name(n.vertex) << ',' << n.dim << ',' << pd << ',' << it.phi(v) << ',' << it.psi(v) << '\n';
  }
  return os.str();
}

}  // namespace qit
