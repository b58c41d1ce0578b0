#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qit/algebra.hpp"
#include "qit/homdim.hpp"
#include "qit/matrix.hpp"
#include "qit/module_expr.hpp"
#include "qit/monomial.hpp"

namespace qit {

/// Element of K0: multiplicities over canonical nonprojective classes of the
/// syzygy graph. Projective summands contribute nothing.
using K0Vector = std::map<std::size_t, Integer>;

/// Igusa-Todorov functions over a monomial algebra, evaluated on the finite
/// class universe of its syzygy graph.
class IgusaTodorov {
 public:
  /// Throws NotMonomialError.
  explicit IgusaTodorov(const BoundQuiverAlgebra& a);

  [[nodiscard]] const SyzygyGraph& graph() const { return graph_; }

  /// Throws std::invalid_argument for I(v) atoms and zero paths.
  [[nodiscard]] K0Vector k0(const ModuleExpr& m) const;
  [[nodiscard]] K0Vector class_vector(std::size_t node) const;
  /// The syzygy, i.e. Omega-bar on K0.
  [[nodiscard]] K0Vector omega(const K0Vector& m) const;
  [[nodiscard]] K0Vector omega(const K0Vector& m, std::size_t times) const;

  /// Classes reachable from the support of m under Omega.
  [[nodiscard]] std::vector<std::size_t> universe(const K0Vector& m) const;
  /// rank of Omega-bar^l <add m> for l = 0..levels.
  [[nodiscard]] std::vector<std::size_t> rank_sequence(const K0Vector& m, std::size_t levels) const;

  [[nodiscard]] std::size_t phi(const K0Vector& m) const;
  [[nodiscard]] std::size_t psi(const K0Vector& m) const;
  /// Largest pd over the support; 0 for projective or zero modules.
  [[nodiscard]] HomDim pd(const K0Vector& m) const;
  /// k = number of classes in m when supp Omega(m) lies in supp m.
  [[nodiscard]] std::optional<std::size_t> omega_invariant_bound(const K0Vector& m) const;

  /// Sum of every nonprojective class (simples and path ideals).
  [[nodiscard]] K0Vector all_classes() const;
  /// Sum of every nonprojective path ideal class.
  [[nodiscard]] K0Vector all_path_ideals() const;

 private:
  SyzygyGraph graph_;
  const BoundQuiverAlgebra* algebra_;
};

std::size_t phi(const ModuleExpr& m, const BoundQuiverAlgebra& a);
std::size_t psi(const ModuleExpr& m, const BoundQuiverAlgebra& a);
std::optional<std::size_t> omega_invariant_bound(const ModuleExpr& m, const BoundQuiverAlgebra& a);

/// Square integer matrix over `classes` (graph node ids): column c holds the
/// multiplicities of the syzygy summands of classes[c]. Throws when a summand
/// falls outside the set.
std::vector<std::vector<Integer>> omega_bar_matrix(const std::vector<std::size_t>& classes, const SyzygyGraph& g);

}  // namespace qit
