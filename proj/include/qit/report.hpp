#pragma once

#include <string>
#include <vector>

#include "qit/algebra.hpp"
#include "qit/classify.hpp"
#include "qit/dim_report.hpp"

namespace qit {

struct ReportField {
  std::string key;  // "section.name"
  std::string value;
  FieldStatus status = FieldStatus::Exact;
  std::vector<std::string> provenance;
};

/// Ordered list of fields shared by the text and key = value renderers.
class Report {
 public:
  void add(std::string key, std::string value, FieldStatus status = FieldStatus::Exact,
           std::vector<std::string> provenance = {});
  void add(std::string key, const HomDim& d);
  void add(std::string key, const DimInterval& d, std::vector<std::string> provenance = {});

  [[nodiscard]] const std::vector<ReportField>& fields() const { return fields_; }
  [[nodiscard]] const ReportField* find(const std::string& key) const;

  /// Sections by key prefix, one aligned line per field.
  [[nodiscard]] std::string render_text() const;
  /// Lines `key = value`, then `key.status = ...` for non-exact fields and
  /// `key.provenance = A,B` when tags are present.
  [[nodiscard]] std::string render_kv() const;

 private:
  std::vector<ReportField> fields_;
};

Report analysis_report(const BoundQuiverAlgebra& a, const ClassFlags& flags, const DimReport& dims,
                       std::size_t cutoff);

}  // namespace qit
