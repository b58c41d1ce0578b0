#include "qit/module_expr.hpp"

#include <cctype>

#include "qit/algebra_io.hpp"

namespace qit {

std::string Atom::to_string(const Quiver& q) const {
  switch (kind) {
    case AtomKind::Simple: return "S(" + q.vertex_name(vertex()) + ")";
    case AtomKind::Projective: return "P(" + q.vertex_name(vertex()) + ")";
    case AtomKind::Injective: return "I(" + q.vertex_name(vertex()) + ")";
    case AtomKind::Ideal: return "ideal(" + path.to_string(q) + ")";
  }
  return {};
}

bool ModuleExpr::has_injective() const {
  for (const auto& t : terms)
    if (t.atom.kind == AtomKind::Injective) return true;
  return false;
}

std::string ModuleExpr::to_string(const Quiver& q) const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    if (t.multiplicity != 1) out += std::to_string(t.multiplicity) + "*";
    out += t.atom.to_string(q);
  }
  return out.empty() ? "0" : out;
}

ModuleExpr parse_module_expr(std::string_view text, const Quiver& q) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg, std::size_t col = 0) -> ParseError {
    return ParseError(1, col ? col : pos + 1, msg);
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };

  ModuleExpr out;
  while (true) {
    skip_ws();
    ModuleTerm term{1, Atom{AtomKind::Simple, Path::trivial(0)}};
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      const auto digits = text.substr(start, pos - start);
      if (digits.size() > 6) throw fail("multiplicity too large", start + 1);
      term.multiplicity = std::stoul(std::string(digits));
      if (term.multiplicity == 0) throw fail("multiplicity must be positive", start + 1);
      expect('*');
      skip_ws();
    }
    const std::size_t name_col = pos + 1;
    std::size_t name_end = pos;
    while (name_end < text.size() && std::isalpha(static_cast<unsigned char>(text[name_end]))) ++name_end;
    const auto head = text.substr(pos, name_end - pos);
    pos = name_end;
    if (head == "S") term.atom.kind = AtomKind::Simple;
    else if (head == "P") term.atom.kind = AtomKind::Projective;
    else if (head == "I") term.atom.kind = AtomKind::Injective;
    else if (head == "ideal") term.atom.kind = AtomKind::Ideal;
    else throw fail("expected S(v), P(v), I(v) or ideal(path)", name_col);
    expect('(');
    // Matching parenthesis, so that ideal(e(2)) keeps its inner pair.
    std::size_t close = pos;
    for (std::size_t depth = 0; close < text.size(); ++close) {
      if (text[close] == '(') ++depth;
      else if (text[close] == ')' && depth-- == 0) break;
    }
    if (close == text.size()) throw fail("expected ')'");
    const auto inner = text.substr(pos, close - pos);
    const std::size_t inner_col = pos + 1;
    if (term.atom.kind == AtomKind::Ideal) {
      try {
        term.atom.path = parse_path(inner, q);
      } catch (const PathError& e) {
        throw fail(e.what(), inner_col + (e.column() ? e.column() - 1 : 0));
      }
    } else {
      std::size_t b = 0, e = inner.size();
      while (b < e && std::isspace(static_cast<unsigned char>(inner[b]))) ++b;
      while (e > b && std::isspace(static_cast<unsigned char>(inner[e - 1]))) --e;
      auto v = q.find_vertex(inner.substr(b, e - b));
      if (!v) throw fail("unknown vertex '" + std::string(inner.substr(b, e - b)) + "'", inner_col + b);
      term.atom.path = Path::trivial(*v);
    }
    pos = close + 1;
    out.terms.push_back(std::move(term));
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw fail("expected '+'");
    ++pos;
  }
  return out;
}

}  // namespace qit
