#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qit/algebra.hpp"
#include "qit/matrix.hpp"
#include "qit/module_expr.hpp"

namespace qit {

/// A finite-dimensional right module given as a quiver representation:
/// a vector space per vertex and, for each arrow j -> k, a dims[j] x dims[k]
/// matrix acting on row vectors.
class Representation {
 public:
  Representation() = default;
  Representation(std::vector<std::size_t> dims, std::vector<Matrix> maps);
  static Representation zero(const Quiver& q);

  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
  [[nodiscard]] std::size_t dim(VertexId v) const { return dims_.at(v); }
  [[nodiscard]] std::size_t total_dimension() const;
  [[nodiscard]] bool is_zero() const { return total_dimension() == 0; }
  [[nodiscard]] const Matrix& map(ArrowId a) const { return maps_.at(a); }
  [[nodiscard]] const std::vector<Matrix>& maps() const { return maps_; }

  [[nodiscard]] std::string to_string(const Quiver& q) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix of the action of a path (identity for a trivial path).
Matrix path_matrix(const Representation& m, const Path& p);
bool satisfies_relations(const Representation& m, const BoundQuiverAlgebra& a);
/// Throws RepresentationError when shapes are wrong or a relation fails.
void check_representation(const Representation& m, const BoundQuiverAlgebra& a);

Representation direct_sum(const Representation& x, const Representation& y);

Representation simple_module(const BoundQuiverAlgebra& a, VertexId v);
/// P(v) = e_v A on the basis paths starting at v.
Representation projective_module(const BoundQuiverAlgebra& a, VertexId v);
/// I(v) = D(P(v) over A^op); `op` must be opposite(a).
Representation injective_module(const BoundQuiverAlgebra& op, VertexId v);
/// <p>, spanned by the normal forms of p*r.
Representation path_ideal_module(const BoundQuiverAlgebra& a, const Path& p);

/// `op` is needed only for I(v) atoms; pass nullptr to compute it on demand.
Representation module_from_expr(const ModuleExpr& m, const BoundQuiverAlgebra& a,
                                 const BoundQuiverAlgebra* op = nullptr);

/// Vector-space dual, a representation of the opposite quiver.
Representation dualize(const Representation& m);

/// Subrepresentation spanned per vertex by the rows of `basis[v]`, which must
/// be linearly independent and closed under the arrows.
Representation restrict(const Representation& m, const Quiver& q, const std::vector<Matrix>& basis);

/// Row basis of rad M at each vertex.
std::vector<Matrix> radical(const Representation& m, const Quiver& q);
std::vector<std::size_t> top_dims(const Representation& m, const Quiver& q);
/// Total dimension of top(rad^j M) for j = 0, 1, ... while nonzero.
std::vector<std::size_t> radical_layer_tops(const Representation& m, const Quiver& q);

struct CoverGenerator {
  VertexId vertex;
  std::vector<Rational> vector;  // in M_vertex
};

/// Minimal projective cover P -> M and its kernel.
struct ProjectiveCover {
  std::vector<std::size_t> multiplicities;  // copies of P(v) per vertex
  std::vector<CoverGenerator> generators;
  /// Basis of P at each vertex: (generator, index of a basis path from the
  /// generator's vertex).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cover_basis;
  Representation syzygy;
  /// Rows: the syzygy basis at each vertex in cover_basis coordinates.
  std::vector<Matrix> embedding;
};

/// Raised when a resolution exceeds its dimension budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("syzygy dimension budget exceeded") {}
};

/// With a budget, throws BudgetExceeded before any kernel work when the
/// syzygy would have more than `budget` dimensions.
ProjectiveCover projective_cover_syzygy(const Representation& m, const BoundQuiverAlgebra& a,
                                        std::optional<std::size_t> budget = std::nullopt);

inline constexpr std::size_t kSyzygyBudget = 512;

/// steps[k] is the projective cover of Omega^k(M); the resolution stops once
/// a syzygy vanishes or `length` + 1 covers are known.
struct Resolution {
  std::vector<ProjectiveCover> steps;
  [[nodiscard]] bool finite() const { return !steps.empty() && steps.back().syzygy.is_zero(); }
};

/// Throws BudgetExceeded when a syzygy has more than `budget` dimensions.
Resolution minimal_resolution(const Representation& m, const BoundQuiverAlgebra& a, std::size_t length,
                              std::size_t budget = kSyzygyBudget);

std::size_t hom_dim(const Representation& m, const Representation& n, const BoundQuiverAlgebra& a);
/// Basis of Hom(M, N); each element lists the per-vertex matrices.
std::vector<std::vector<Matrix>> hom_basis(const Representation& m, const Representation& n,
                                           const BoundQuiverAlgebra& a);

/// dim Ext^i(M, N) for i = 0..max_degree from one minimal resolution.
std::vector<std::size_t> ext_dims(const Representation& m, const Representation& n, std::size_t max_degree,
                                  const BoundQuiverAlgebra& a, std::size_t budget = kSyzygyBudget);
std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t degree,
                    const BoundQuiverAlgebra& a, std::size_t budget = kSyzygyBudget);

/// Equal dimension vectors and an invertible morphism found among random
/// combinations of a Hom basis (fixed seed). A false answer is not a proof.
bool is_isomorphic(const Representation& m, const Representation& n, const BoundQuiverAlgebra& a);

}  // namespace qit
