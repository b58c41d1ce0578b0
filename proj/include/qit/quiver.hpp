#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qit {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
};

/// A finite quiver. Vertices and arrows keep their declaration order.
class Quiver {
 public:
  VertexId add_vertex(std::string name);
  ArrowId add_arrow(std::string name, VertexId source, VertexId target);

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t arrow_count() const { return arrows_.size(); }
  [[nodiscard]] const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  [[nodiscard]] const std::vector<std::string>& vertex_names() const { return vertices_; }
  [[nodiscard]] const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view name) const;
  [[nodiscard]] std::optional<ArrowId> find_arrow(std::string_view name) const;
  [[nodiscard]] std::vector<ArrowId> arrows_from(VertexId v) const;
  [[nodiscard]] std::vector<ArrowId> arrows_to(VertexId v) const;

  /// Same vertices; every arrow reversed, keeping its name and index.
  [[nodiscard]] Quiver opposite() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path in a quiver: either the trivial path e(v) or a composable arrow
/// sequence. Composition is left to right: p*q means "p, then q".
///
/// Ordering is by length, then lexicographic on arrow indices (trivial paths
/// by vertex).
class Path {
 public:
  static Path trivial(VertexId v);
  static Path of_arrow(const Quiver& q, ArrowId a);
  /// Throws PathError (incomposable) when consecutive arrows do not meet.
  static Path from_arrows(const Quiver& q, std::vector<ArrowId> arrows);

  [[nodiscard]] VertexId source() const { return source_; }
  [[nodiscard]] VertexId target() const { return target_; }
  [[nodiscard]] std::size_t length() const { return arrows_.size(); }
  [[nodiscard]] bool is_trivial() const { return arrows_.empty(); }
  [[nodiscard]] const std::vector<ArrowId>& arrows() const { return arrows_; }

  /// The length-`len` subpath starting after `pos` arrows.
  [[nodiscard]] Path subpath(const Quiver& q, std::size_t pos, std::size_t len) const;
  [[nodiscard]] Path prefix(const Quiver& q, std::size_t len) const { return subpath(q, 0, len); }
  /// The same arrows in reverse order: a path of the opposite quiver.
  [[nodiscard]] Path reversed() const;
  /// Whether `inner` occurs as a contiguous subpath; returns the first offset.
  [[nodiscard]] std::optional<std::size_t> find(const Path& inner) const;

  [[nodiscard]] std::string to_string(const Quiver& q) const;

  bool operator==(const Path& other) const = default;
  std::strong_ordering operator<=>(const Path& other) const;

  friend std::optional<Path> compose(const Path& p, const Path& q);

 private:
  Path(VertexId s, VertexId t, std::vector<ArrowId> arrows)
      : source_(s), target_(t), arrows_(std::move(arrows)) {}

  VertexId source_ = 0;
  VertexId target_ = 0;
  std::vector<ArrowId> arrows_;
};

class PathError : public std::runtime_error {
 public:
  enum class Kind { UnknownArrow, UnknownVertex, Incomposable, Syntax };
  PathError(Kind kind, const std::string& what, std::size_t column = 0)
      : std::runtime_error(what), kind_(kind), column_(column) {}
  [[nodiscard]] Kind kind() const { return kind_; }
  /// 1-based column inside the parsed text, 0 when not applicable.
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t column_;
};

/// p*q, or nullopt when target(p) != source(q).
std::optional<Path> compose(const Path& p, const Path& q);

/// All paths from `from` of length <= max_len, ordered by length and then
/// lexicographically by declared arrow order.
std::vector<Path> enumerate_paths(const Quiver& q, VertexId from, std::size_t max_len);

/// Parses `e(<vertex>)` or `<arrow>(*<arrow>)*`.
Path parse_path(std::string_view text, const Quiver& q);

/// Arrow order used for leading terms: degree first, then lexicographic by rank.
class PathOrder {
 public:
  PathOrder() = default;
  explicit PathOrder(std::vector<std::size_t> rank) : rank_(std::move(rank)) {}

  [[nodiscard]] bool less(const Path& a, const Path& b) const;
  [[nodiscard]] const std::vector<std::size_t>& rank() const { return rank_; }

 private:
  std::vector<std::size_t> rank_;  // rank_[arrow] = position in the order
};

}  // namespace qit
