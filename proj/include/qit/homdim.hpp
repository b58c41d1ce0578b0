#pragma once

#include <algorithm>
#include <cstddef>
#include <string>

namespace qit {

/// A homological dimension: a natural number, certified infinite, or unknown
/// (the computation stopped before deciding).
class HomDim {
 public:
  enum class Kind { Finite, Infinite, Unknown };

  static HomDim finite(std::size_t n) { return HomDim(Kind::Finite, n); }
  static HomDim infinite() { return HomDim(Kind::Infinite, 0); }
  static HomDim unknown() { return HomDim(Kind::Unknown, 0); }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_finite() const { return kind_ == Kind::Finite; }
  [[nodiscard]] bool is_infinite() const { return kind_ == Kind::Infinite; }
  [[nodiscard]] bool is_unknown() const { return kind_ == Kind::Unknown; }
  /// Only meaningful when finite.
  [[nodiscard]] std::size_t value() const { return value_; }

  [[nodiscard]] std::string to_string() const {
    switch (kind_) {
      case Kind::Finite: return std::to_string(value_);
      case Kind::Infinite: return "inf";
      case Kind::Unknown: return "unknown";
    }
    return {};
  }

  bool operator==(const HomDim&) const = default;

 private:
  HomDim(Kind k, std::size_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::size_t value_;
};

/// Supremum: infinite dominates, then unknown, then the larger finite value.
inline HomDim sup(const HomDim& a, const HomDim& b) {
  if (a.is_infinite() || b.is_infinite()) return HomDim::infinite();
  if (a.is_unknown() || b.is_unknown()) return HomDim::unknown();
  return HomDim::finite(std::max(a.value(), b.value()));
}

}  // namespace qit
