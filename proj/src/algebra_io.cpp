#include "qit/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qit {

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

// Cursor over one line; columns are 1-based.
class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  [[nodiscard]] char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  [[nodiscard]] std::size_t column() const { return pos_ + 1; }
  void advance() { ++pos_; }

  std::string_view word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  std::string_view name() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t col = 0) const {
    throw ParseError(line_, col ? col : pos_ + 1, msg);
  }

  std::string_view rest() const { return text_.substr(pos_); }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

bool valid_vertex_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool valid_arrow_name(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!is_name_char(c)) return false;
  return true;
}

std::optional<Rational> read_coefficient(LineScanner& sc) {
  sc.skip_ws();
  auto rest = sc.rest();
  std::size_t n = 0;
  while (n < rest.size() && std::isdigit(static_cast<unsigned char>(rest[n]))) ++n;
  if (n == 0) return std::nullopt;
  std::size_t len = n;
  if (len < rest.size() && rest[len] == '/') {
    std::size_t d = len + 1;
    while (d < rest.size() && std::isdigit(static_cast<unsigned char>(rest[d]))) ++d;
    if (d == len + 1) sc.fail("expected a denominator", sc.column() + len + 1);
    len = d;
  }
  Rational q;
  std::string tok(rest.substr(0, len));
  if (q.set_str(tok, 10) != 0) sc.fail("malformed coefficient '" + tok + "'");
  if (tok.find('/') != std::string::npos && q.get_den() == 0) sc.fail("zero denominator");
  q.canonicalize();
  sc.set_pos(sc.pos() + len);
  if (sc.peek() == '*') sc.advance();
  return q;
}

Path read_path(LineScanner& sc, const Quiver& q) {
  sc.skip_ws();
  const std::size_t start = sc.pos();
  const std::size_t start_col = sc.column();
  auto rest = sc.rest();
  std::size_t len = 0;
  if (rest.starts_with("e(")) {
    len = rest.find(')');
    if (len == std::string_view::npos) sc.fail("expected ')'");
    ++len;
  } else {
    // name (ws* '*' ws* name)*
    std::size_t i = 0;
    while (true) {
      std::size_t j = i;
      while (j < rest.size() && is_name_char(rest[j])) ++j;
      if (j == i) break;
      len = j;
      std::size_t k = j;
      while (k < rest.size() && std::isspace(static_cast<unsigned char>(rest[k]))) ++k;
      if (k < rest.size() && rest[k] == '*') {
        ++k;
        while (k < rest.size() && std::isspace(static_cast<unsigned char>(rest[k]))) ++k;
        i = k;
      } else {
        break;
      }
    }
    if (len == 0) sc.fail("expected a path");
  }
  try {
    Path p = parse_path(rest.substr(0, len), q);
    sc.set_pos(start + len);
    return p;
  } catch (const PathError& e) {
    sc.fail(e.what(), start_col + (e.column() ? e.column() - 1 : 0));
  }
}

}  // namespace

AlgebraPresentation parse_presentation(std::string_view text) {
  AlgebraPresentation out;
  std::vector<std::pair<std::size_t, std::string>> pending_order;  // defer to allow any position
  std::size_t order_line = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineScanner sc(line, line_no);
    if (!sc.at_end()) {
      const std::size_t kw_col = sc.column();
      auto kw = sc.word();
      if (kw == "vertex") {
        if (sc.at_end()) sc.fail("expected at least one vertex id");
        while (!sc.at_end()) {
          const std::size_t col = sc.column();
          auto v = sc.word();
          if (!valid_vertex_name(v)) sc.fail("invalid vertex id '" + std::string(v) + "'", col);
          if (out.quiver.find_vertex(v)) sc.fail("duplicate vertex '" + std::string(v) + "'", col);
          out.quiver.add_vertex(std::string(v));
        }
      } else if (kw == "arrow") {
        const std::size_t name_col = sc.column();
        auto name = sc.word();
        if (!valid_arrow_name(name)) sc.fail("invalid arrow name '" + std::string(name) + "'", name_col);
        if (out.quiver.find_arrow(name)) sc.fail("duplicate arrow '" + std::string(name) + "'", name_col);
        VertexId ends[2];
        for (auto& e : ends) {
          const std::size_t col = sc.column() + 1;
          auto v = sc.word();
          if (v.empty()) sc.fail("expected source and target vertices");
          auto id = out.quiver.find_vertex(v);
          if (!id) sc.fail("unknown vertex '" + std::string(v) + "'", col);
          e = *id;
        }
        if (!sc.at_end()) sc.fail("unexpected trailing input");
        out.quiver.add_arrow(std::string(name), ends[0], ends[1]);
      } else if (kw == "order") {
        if (order_line) sc.fail("duplicate order directive", kw_col);
        order_line = line_no;
        while (!sc.at_end()) {
          const std::size_t col = sc.column();
          pending_order.emplace_back(col, std::string(sc.word()));
        }
      } else if (kw == "rel") {
        Relation rel;
        bool first = true;
        while (!sc.at_end()) {
          Rational sign = 1;
          char c = sc.peek();
          if (c == '+' || c == '-') {
            if (c == '-') sign = -1;
            sc.advance();
          } else if (!first) {
            sc.fail("expected '+' or '-'");
          }
          auto coef = read_coefficient(sc);
          const std::size_t path_col = sc.column();
          Path p = read_path(sc, out.quiver);
          Rational value = sign * coef.value_or(Rational(1));
          if (!rel.terms.empty()) {
            const Path& f = rel.terms.front().second;
            if (f.source() != p.source() || f.target() != p.target())
              sc.fail("relation mixes non-parallel paths", path_col + 1);
          }
          if (sgn(value) == 0) sc.fail("zero coefficient", path_col);
          rel.terms.emplace_back(value, std::move(p));
          first = false;
        }
        if (rel.terms.empty()) sc.fail("empty relation");
        out.relations.push_back(std::move(rel));
      } else {
        sc.fail("unknown directive '" + std::string(kw) + "'", kw_col);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  for (const auto& [col, name] : pending_order) {
    auto a = out.quiver.find_arrow(name);
    if (!a) throw ParseError(order_line, col, "unknown arrow '" + name + "' in order");
    for (ArrowId seen : out.arrow_order)
      if (seen == *a) throw ParseError(order_line, col, "arrow '" + name + "' listed twice in order");
    out.arrow_order.push_back(*a);
  }
  return out;
}

BoundQuiverAlgebra parse_algebra(std::string_view text, std::size_t max_degree) {
  auto pres = parse_presentation(text);
  BuildOptions opts;
  opts.max_degree = max_degree;
  opts.arrow_order = std::move(pres.arrow_order);
  return build_algebra(std::move(pres.quiver), std::move(pres.relations), opts);
}

BoundQuiverAlgebra load_algebra_file(const std::string& path, std::size_t max_degree) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), max_degree);
}

std::string format_algebra(const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  std::ostringstream os;
  for (const auto& v : q.vertex_names()) os << "vertex " << v << '\n';
  for (const auto& arr : q.arrows())
    os << "arrow " << arr.name << ' ' << q.vertex_name(arr.source) << ' ' << q.vertex_name(arr.target) << '\n';
  if (!a.options().arrow_order.empty()) {
    os << "order";
    for (ArrowId id : a.options().arrow_order) os << ' ' << q.arrow(id).name;
    os << '\n';
  }
  for (const auto& rel : a.relations()) {
    os << "rel";
    bool first = true;
    for (const auto& [c, p] : rel.terms) {
      Rational m = abs(c);
      if (first) {
        os << (sgn(c) < 0 ? " -" : " ");
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      if (m != 1) os << m.get_str() << ' ';
      os << p.to_string(q);
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qit
