#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qit/quiver.hpp"

namespace qit {

enum class AtomKind { Simple, Projective, Injective, Ideal };

/// S(v), P(v), I(v) carry the trivial path at v; ideal(p) carries p.
struct Atom {
  AtomKind kind;
  Path path;

  [[nodiscard]] VertexId vertex() const { return path.source(); }
  [[nodiscard]] std::string to_string(const Quiver& q) const;
  bool operator==(const Atom&) const = default;
};

struct ModuleTerm {
  std::size_t multiplicity = 1;
  Atom atom;
};

/// A formal direct sum of atoms with positive multiplicities.
struct ModuleExpr {
  std::vector<ModuleTerm> terms;

  [[nodiscard]] bool has_injective() const;
  [[nodiscard]] std::string to_string(const Quiver& q) const;
};

/// Grammar: term ('+' term)*, term := [k '*'] atom,
/// atom := S(v) | P(v) | I(v) | ideal(path). Throws ParseError (line 1).
ModuleExpr parse_module_expr(std::string_view text, const Quiver& q);

}  // namespace qit
