#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qit/algebra.hpp"
#include "qit/homdim.hpp"

namespace qit {

class NotMonomialError : public std::invalid_argument {
 public:
  NotMonomialError() : std::invalid_argument("operation requires a monomial algebra") {}
};

/// Isomorphism key of a path ideal <p> over a monomial algebra: the terminal
/// vertex and the basis paths r from t(p) with p*r != 0.
struct PathIdealKey {
  VertexId terminal = 0;
  std::vector<std::size_t> multipliers;  // sorted basis indices

  auto operator<=>(const PathIdealKey&) const = default;
};

struct PathIdealClass {
  PathIdealKey key;
  Path representative = Path::trivial(0);
  std::size_t dim = 0;
  bool projective = false;
};

/// Min(p): the minimal nonzero paths q from t(p) with p*q = 0, so that
/// Omega<p> is the direct sum of the <q>. Ordered by path order.
std::vector<Path> min_annihilators(const Path& p, const BoundQuiverAlgebra& a);

PathIdealClass class_of(const Path& p, const BoundQuiverAlgebra& a);

/// Dimension vector of <p> given its key.
std::vector<std::size_t> dimension_vector(const PathIdealKey& key, const BoundQuiverAlgebra& a);

enum class NodeKind { PathIdeal, Simple };

struct SyzygyNode {
  NodeKind kind = NodeKind::PathIdeal;
  Path representative = Path::trivial(0);  // p for <p>, e(i) for S(i)
  VertexId vertex = 0;  // t(p), or i for S(i)
  std::size_t dim = 0;
  bool projective = false;
  /// The node this one is identified with. A simple S(i) coincides with the
  /// path ideal class (i, {e_i}) when that class occurs.
  std::size_t canonical = 0;
  /// Canonical ids of the nonprojective summands of the first syzygy, sorted,
  /// with repetition.
  std::vector<std::size_t> successors;
  HomDim pd = HomDim::unknown();
};

/// Classes of path ideals <p>, |p| >= 1 (in order of first appearance along
/// the basis), followed by one node per simple module.
class SyzygyGraph {
 public:
  [[nodiscard]] const std::vector<SyzygyNode>& nodes() const { return nodes_; }
  [[nodiscard]] const SyzygyNode& node(std::size_t id) const { return nodes_.at(id); }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] std::size_t path_ideal_count() const { return ideal_count_; }
  [[nodiscard]] std::size_t simple_node(VertexId v) const { return ideal_count_ + v; }
  [[nodiscard]] const PathIdealKey& key(std::size_t id) const { return keys_.at(id); }
  /// Canonical node of <p> for a nonzero path of length >= 1.
  [[nodiscard]] std::size_t node_of(const Path& p, const BoundQuiverAlgebra& a) const;
  [[nodiscard]] std::optional<std::size_t> find(const PathIdealKey& key) const;

  /// Canonical ids of the nonprojective classes, ascending.
  [[nodiscard]] std::vector<std::size_t> nonprojective_classes() const;
  /// Largest finite pd over path ideal nodes (0 if none).
  [[nodiscard]] std::size_t max_finite_ideal_pd() const;

  friend SyzygyGraph build_syzygy_graph(const BoundQuiverAlgebra& a);

 private:
  std::vector<SyzygyNode> nodes_;
  std::vector<PathIdealKey> keys_;  // simples get (i, {}) placeholders
  std::map<PathIdealKey, std::size_t> index_;
  std::size_t ideal_count_ = 0;
};

SyzygyGraph build_syzygy_graph(const BoundQuiverAlgebra& a);

}  // namespace qit
