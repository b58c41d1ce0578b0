#pragma once

#include <string>

#include "qit/algebra.hpp"
#include "qit/it_functions.hpp"

namespace qit {

/// Graphviz digraph of the syzygy graph: path ideal classes and simple
/// modules as separate nodes, labeled by representative, dim and pd;
/// projective nodes are boxes. A simple that is itself a path ideal class is
/// joined to that class by a dashed edge.
std::string export_dot(const BoundQuiverAlgebra& a, const IgusaTodorov& it);

/// One row per node: class_id,kind,representative,terminal_vertex,dim,pd,phi,psi.
std::string export_csv(const BoundQuiverAlgebra& a, const IgusaTodorov& it);

}  // namespace qit
