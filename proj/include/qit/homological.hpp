#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qit/algebra.hpp"
#include "qit/homdim.hpp"
#include "qit/monomial.hpp"
#include "qit/representation.hpp"

namespace qit {

/// Projective dimension by iterated syzygies. When every module of finite
/// pd is known to have pd <= b, a nonzero syzygy at step b + 1 certifies
/// pd = inf. Over a monomial algebra b = F + 2, where F is the largest finite
/// pd of a path ideal (second syzygies are sums of path ideals); this may look
/// past the cutoff. Otherwise the answer is unknown past the cutoff.
HomDim pd_cutoff(const Representation& m, const BoundQuiverAlgebra& a, std::size_t cutoff,
                 const SyzygyGraph* graph = nullptr, std::optional<std::size_t> finite_pd_bound = std::nullopt);

/// id_A(M) = pd over A^op of D(M); `op` must be opposite(a).
HomDim id_cutoff(const Representation& m, const BoundQuiverAlgebra& op, std::size_t cutoff,
                 const SyzygyGraph* op_graph = nullptr);

/// Every indecomposable injective is projective.
bool is_selfinjective(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& op);
bool is_selfinjective(const BoundQuiverAlgebra& a);

struct GorensteinProfile {
  HomDim id_right = HomDim::unknown();    // id of A_A
  HomDim pd_of_dual = HomDim::unknown();  // pd of D(A^op)
  /// Least m with A m-Gorenstein; infinite when A is not Gorenstein.
  HomDim m = HomDim::unknown();
  bool selfinjective = false;
};

/// Throws std::logic_error if both sides are finite and differ.
GorensteinProfile gorenstein_profile(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& op, std::size_t cutoff);
GorensteinProfile gorenstein_profile(const BoundQuiverAlgebra& a, std::size_t cutoff);

struct PerpResult {
  enum class Status { Certified, Out, Inconclusive };
  Status status = Status::Inconclusive;
  std::size_t witness_degree = 0;  // least i with Ext^i(M, A) != 0 when Out
  std::size_t checked_up_to = 0;
};

/// Ext^i(M, A) = 0 for 1 <= i <= cutoff.
PerpResult perp_membership(const Representation& m, const BoundQuiverAlgebra& a, std::size_t cutoff);

/// The regular module A_A.
Representation regular_module(const BoundQuiverAlgebra& a);

}  // namespace qit
