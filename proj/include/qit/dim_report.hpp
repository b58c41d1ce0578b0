#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qit/algebra.hpp"
#include "qit/homdim.hpp"
#include "qit/homological.hpp"

namespace qit {

enum class FieldStatus { Exact, Interval, Unknown };

std::string to_string(FieldStatus s);

/// A closed interval [lower, upper] of naturals; no upper bound means the
/// value is unknown. `infinite` marks a certified infinite value.
struct DimInterval {
  std::size_t lower = 0;
  std::optional<std::size_t> upper;
  bool infinite = false;

  [[nodiscard]] FieldStatus status() const;
  /// "1", "[1, 2]", "[1, inf)" or "inf".
  [[nodiscard]] std::string to_string() const;
  bool operator==(const DimInterval&) const = default;
};

struct MonomialSummary {
  std::size_t class_count = 0;  // nonprojective classes, simples included
  std::size_t ideal_class_count = 0;
  std::size_t phi_all = 0;  // phi of the sum of all classes
  std::size_t psi_all = 0;
  std::size_t phi_ideals = 0;  // phi of the sum of all path ideal classes
  std::size_t psi_ideals = 0;
  std::vector<std::size_t> simple_phi;
  std::vector<std::size_t> simple_psi;
};

struct DimReport {
  DimInterval findim;
  DimInterval phidim;
  DimInterval psidim;
  DimInterval gldim;
  /// Tags of the rules that tightened some interval, in precedence order:
  /// SELFINJECTIVE, GORENSTEIN(m), FINITE_GLDIM(g), OBSERVED_LOWER,
  /// MONOMIAL_BOUND, FINITE_ID(n), NOT_SELFINJECTIVE.
  std::vector<std::string> provenance;

  GorensteinProfile profile;
  bool selfinjective = false;
  std::vector<HomDim> simple_pd;
  std::vector<HomDim> injective_pd;
  std::optional<MonomialSummary> monomial;
};

/// Throws std::logic_error if the rules produce an empty interval.
DimReport dim_report(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& op, std::size_t cutoff);
DimReport dim_report(const BoundQuiverAlgebra& a, std::size_t cutoff);

}  // namespace qit
