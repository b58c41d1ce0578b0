#pragma once

#include "qit/algebra.hpp"

namespace qit {

struct ClassFlags {
  bool monomial = false;
  bool radical_square_zero = false;
  bool right_serial = false;
  bool special_biserial = false;
  bool gentle = false;
};

/// Special biserial and gentle are checked literally on the presentation,
/// with membership of length-2 paths in I decided by normal forms.
ClassFlags classify(const BoundQuiverAlgebra& a);

}  // namespace qit
