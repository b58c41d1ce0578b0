#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qit/matrix.hpp"
#include "qit/quiver.hpp"

namespace qit {

/// A finitely supported linear combination of paths with rational coefficients.
class Element {
 public:
  Element() = default;
  explicit Element(const Path& p, const Rational& c = 1) { add(p, c); }

  void add(const Path& p, const Rational& c);
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  [[nodiscard]] Element scaled(const Rational& c) const;
  /// x * this * y, dropping terms that do not compose.
  [[nodiscard]] Element sandwiched(const Path& x, const Path& y) const;

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Path, Rational>& terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(const Path& p) const;
  [[nodiscard]] std::string to_string(const Quiver& q) const;

  bool operator==(const Element& other) const = default;

 private:
  std::map<Path, Rational> terms_;
};

/// A generator of the ideal: sum of coefficient * path over parallel paths.
struct Relation {
  std::vector<std::pair<Rational, Path>> terms;
};

/// Rewriting rule lead -> tail; every tail path is smaller than lead.
struct Rule {
  Path lead;
  Element tail;
};

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

class AlgebraError : public std::runtime_error {
 public:
  enum class Kind { NotAdmissible, NotFiniteDimensional, InconsistentRelation };
  AlgebraError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct BuildOptions {
  std::size_t max_degree = 64;
  /// Arrow order for leading terms; empty means declaration order. Arrows
  /// missing from a partial order follow the listed ones in declaration order.
  std::vector<ArrowId> arrow_order;
};

/// A = kQ/I presented by a reduced, completed rewriting system.
class BoundQuiverAlgebra {
 public:
  [[nodiscard]] const Quiver& quiver() const { return quiver_; }
  [[nodiscard]] const PathOrder& order() const { return order_; }
  [[nodiscard]] const std::vector<Relation>& relations() const { return relations_; }
  [[nodiscard]] const std::vector<Rule>& rules() const { return rules_; }
  [[nodiscard]] const std::vector<Path>& basis() const { return basis_; }
  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
  [[nodiscard]] std::size_t vertex_count() const { return quiver_.vertex_count(); }
  [[nodiscard]] std::size_t nilpotency_degree() const { return nilpotency_degree_; }
  [[nodiscard]] bool is_monomial() const { return monomial_; }
  [[nodiscard]] const BuildOptions& options() const { return options_; }

  [[nodiscard]] std::optional<std::size_t> basis_index(const Path& p) const;
  /// Indices of basis paths with the given source, in basis order.
  [[nodiscard]] const std::vector<std::size_t>& basis_from(VertexId v) const { return from_.at(v); }
  /// Indices of basis paths from s to t, in basis order.
  [[nodiscard]] const std::vector<std::size_t>& basis_between(VertexId s, VertexId t) const {
    return between_.at(s * vertex_count() + t);
  }
  /// Normal form of basis[b] * a in basis coordinates; empty when zero or
  /// when the arrow does not start at the target of basis[b].
  [[nodiscard]] const SparseVector& right_multiply(std::size_t b, ArrowId a) const {
    return mult_.at(b * quiver_.arrow_count() + a);
  }

  /// True when some rule's leading path occurs inside p.
  [[nodiscard]] bool is_reducible(const Path& p) const;
  [[nodiscard]] Element normal_form(const Element& el) const;
  /// Normal form of a path, in basis coordinates.
  [[nodiscard]] SparseVector coordinates(const Path& p) const;
  [[nodiscard]] bool is_zero(const Path& p) const { return coordinates(p).empty(); }

  friend BoundQuiverAlgebra build_algebra(Quiver q, std::vector<Relation> rels, const BuildOptions& opts);

 private:
  Quiver quiver_;
  PathOrder order_;
  BuildOptions options_;
  std::vector<Relation> relations_;
  std::vector<Rule> rules_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
  std::vector<std::vector<std::size_t>> from_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<SparseVector> mult_;
  std::size_t nilpotency_degree_ = 0;
  bool monomial_ = true;
};

/// Completes the relations to a reduced rewriting system (overlaps resolved up
/// to opts.max_degree), enumerates the irreducible-path basis and checks
/// admissibility. Throws AlgebraError.
BoundQuiverAlgebra build_algebra(Quiver q, std::vector<Relation> rels, const BuildOptions& opts = {});

Element normal_form(const Element& el, const BoundQuiverAlgebra& a);

/// A^op: reversed arrows and reversed relations, rebuilt with the same options.
BoundQuiverAlgebra opposite(const BoundQuiverAlgebra& a);

/// Fully reduces `el` by `rules` under `order`.
Element reduce(Element el, const std::vector<Rule>& rules, const PathOrder& order, const Quiver& q);

}  // namespace qit
