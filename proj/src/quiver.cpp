#include "qit/quiver.hpp"

#include <algorithm>
#include <cctype>

namespace qit {

VertexId Quiver::add_vertex(std::string name) {
  if (find_vertex(name)) throw std::invalid_argument("duplicate vertex '" + name + "'");
  vertices_.push_back(std::move(name));
  return vertices_.size() - 1;
}

ArrowId Quiver::add_arrow(std::string name, VertexId source, VertexId target) {
  if (find_arrow(name)) throw std::invalid_argument("duplicate arrow '" + name + "'");
  if (source >= vertices_.size() || target >= vertices_.size())
    throw std::invalid_argument("arrow '" + name + "' has an undeclared endpoint");
  arrows_.push_back({std::move(name), source, target});
  return arrows_.size() - 1;
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.name == name; });
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<ArrowId>(it - arrows_.begin());
}

std::vector<ArrowId> Quiver::arrows_from(VertexId v) const {
  std::vector<ArrowId> out;
  for (ArrowId a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::vector<ArrowId> Quiver::arrows_to(VertexId v) const {
  std::vector<ArrowId> out;
  for (ArrowId a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].target == v) out.push_back(a);
  return out;
}

Quiver Quiver::opposite() const {
  Quiver op;
  op.vertices_ = vertices_;
  for (const auto& a : arrows_) op.arrows_.push_back({a.name, a.target, a.source});
  return op;
}

Path Path::trivial(VertexId v) { return Path(v, v, {}); }

Path Path::of_arrow(const Quiver& q, ArrowId a) {
  const auto& arr = q.arrow(a);
  return Path(arr.source, arr.target, {a});
}

Path Path::from_arrows(const Quiver& q, std::vector<ArrowId> arrows) {
  if (arrows.empty()) throw std::invalid_argument("from_arrows: empty arrow list");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source)
      throw PathError(PathError::Kind::Incomposable,
                      "arrows '" + q.arrow(arrows[i]).name + "' and '" + q.arrow(arrows[i + 1]).name +
                          "' do not compose");
  }
  const VertexId s = q.arrow(arrows.front()).source;
  const VertexId t = q.arrow(arrows.back()).target;
  return Path(s, t, std::move(arrows));
}

Path Path::subpath(const Quiver& q, std::size_t pos, std::size_t len) const {
  if (pos + len > arrows_.size()) throw std::out_of_range("subpath out of range");
  if (len == 0) {
    if (arrows_.empty()) return *this;
    return trivial(pos < arrows_.size() ? q.arrow(arrows_[pos]).source : target_);
  }
  std::vector<ArrowId> sub(arrows_.begin() + static_cast<std::ptrdiff_t>(pos),
                           arrows_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  const VertexId s = q.arrow(sub.front()).source;
  const VertexId t = q.arrow(sub.back()).target;
  return Path(s, t, std::move(sub));
}

Path Path::reversed() const {
  std::vector<ArrowId> rev(arrows_.rbegin(), arrows_.rend());
  return Path(target_, source_, std::move(rev));
}

std::optional<std::size_t> Path::find(const Path& inner) const {
  if (inner.is_trivial()) return std::nullopt;
  auto it = std::search(arrows_.begin(), arrows_.end(), inner.arrows_.begin(), inner.arrows_.end());
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

std::string Path::to_string(const Quiver& q) const {
  if (arrows_.empty()) return "e(" + q.vertex_name(source_) + ")";
  std::string out;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) out += '*';
    out += q.arrow(arrows_[i]).name;
  }
  return out;
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = arrows_.size() <=> other.arrows_.size(); c != 0) return c;
  if (arrows_.empty()) return source_ <=> other.source_;
  return arrows_ <=> other.arrows_;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.target() != q.source()) return std::nullopt;
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  std::vector<ArrowId> arrows = p.arrows_;
  arrows.insert(arrows.end(), q.arrows_.begin(), q.arrows_.end());
  return Path(p.source(), q.target(), std::move(arrows));
}

std::vector<Path> enumerate_paths(const Quiver& q, VertexId from, std::size_t max_len) {
  std::vector<Path> out{Path::trivial(from)};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (ArrowId a : q.arrows_from(out[i].target())) {
        out.push_back(*compose(out[i], Path::of_arrow(q, a)));
      }
    }
    if (out.size() == level_end) break;
    level_begin = level_end;
  }
  // Generated level by level from a sorted previous level with arrows in
  // increasing index, so each level is already lexicographically sorted.
  return out;
}

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

Path parse_path(std::string_view text, const Quiver& q) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_name = [&]() -> std::string_view {
    const std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  };
  auto syntax = [&](const std::string& msg) {
    return PathError(PathError::Kind::Syntax, msg, pos + 1);
  };

  skip_ws();
  if (text.substr(pos).starts_with("e(")) {
    pos += 2;
    skip_ws();
    const std::size_t name_col = pos + 1;
    auto name = read_name();
    if (name.empty()) throw syntax("expected a vertex name");
    skip_ws();
    if (pos >= text.size() || text[pos] != ')') throw syntax("expected ')'");
    ++pos;
    skip_ws();
    if (pos != text.size()) throw syntax("unexpected trailing input");
    auto v = q.find_vertex(name);
    if (!v) throw PathError(PathError::Kind::UnknownVertex, "unknown vertex '" + std::string(name) + "'", name_col);
    return Path::trivial(*v);
  }

  std::vector<ArrowId> arrows;
  std::vector<std::size_t> columns;
  while (true) {
    skip_ws();
    const std::size_t col = pos + 1;
    auto name = read_name();
    if (name.empty()) throw syntax("expected an arrow name");
    auto a = q.find_arrow(name);
    if (!a) throw PathError(PathError::Kind::UnknownArrow, "unknown arrow '" + std::string(name) + "'", col);
    arrows.push_back(*a);
    columns.push_back(col);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw syntax("expected '*'");
    ++pos;
  }
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source)
      throw PathError(PathError::Kind::Incomposable,
                      "arrows '" + q.arrow(arrows[i]).name + "' and '" + q.arrow(arrows[i + 1]).name +
                          "' do not compose",
                      columns[i + 1]);
  }
  return Path::from_arrows(q, std::move(arrows));
}

bool PathOrder::less(const Path& a, const Path& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.is_trivial()) return a.source() < b.source();
  const auto& x = a.arrows();
  const auto& y = b.arrows();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t rx = rank_.empty() ? x[i] : rank_[x[i]];
    const std::size_t ry = rank_.empty() ? y[i] : rank_[y[i]];
    if (rx != ry) return rx < ry;
  }
  return false;
}

}  // namespace qit
