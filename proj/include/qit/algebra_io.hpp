#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qit/algebra.hpp"

namespace qit {

/// Syntax or semantic error in an algebra file, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Parsed contents of an algebra file, before the rewriting completion.
struct AlgebraPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<ArrowId> arrow_order;
};

/// Line-oriented format:
///
///     vertex 1 2          # one or more vertex ids
///     arrow a 1 2         # name, source, target
///     order a g b         # optional leading-term arrow order
///     rel a*g - 1/2 g*b   # rational coefficients optional
///
/// Paths compose left to right. Throws ParseError.
AlgebraPresentation parse_presentation(std::string_view text);

/// Parses and builds; max_degree bounds the rewriting completion.
BoundQuiverAlgebra parse_algebra(std::string_view text, std::size_t max_degree = 64);
BoundQuiverAlgebra load_algebra_file(const std::string& path, std::size_t max_degree = 64);

/// Writes the presentation back in the file format (declared relations).
std::string format_algebra(const BoundQuiverAlgebra& a);

}  // namespace qit
