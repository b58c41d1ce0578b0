#include "qit/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace qit {

namespace {

constexpr std::size_t kBasisLimit = 200000;

}  // namespace

void Element::add(const Path& p, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

Element Element::scaled(const Rational& c) const {
  Element out;
  if (sgn(c) == 0) return out;
  for (const auto& [p, x] : terms_) out.terms_.emplace(p, x * c);
  return out;
}

Element Element::sandwiched(const Path& x, const Path& y) const {
  Element out;
  for (const auto& [p, c] : terms_) {
    auto left = compose(x, p);
    if (!left) continue;
    auto full = compose(*left, y);
    if (full) out.add(*full, c);
  }
  return out;
}

Rational Element::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string Element::to_string(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Largest terms first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (c != 1) out += c.get_str() + " ";
    out += it->first.to_string(q);
    first = false;
  }
  return out;
}

namespace {

struct Occurrence {
  std::size_t rule;
  std::size_t offset;
};

std::optional<Occurrence> find_occurrence(const Path& p, const std::vector<Rule>& rules) {
  for (std::size_t r = 0; r < rules.size(); ++r) {
    if (rules[r].lead.length() > p.length()) continue;
    if (auto off = p.find(rules[r].lead)) return Occurrence{r, *off};
  }
  return std::nullopt;
}

Path leading_path(const Element& el, const PathOrder& order) {
  const Path* best = nullptr;
  for (const auto& [p, c] : el.terms())
    if (!best || order.less(*best, p)) best = &p;
  return *best;
}

// Rule lead -> tail from a nonzero element, normalized to a monic lead.
Rule make_rule(const Element& el, const PathOrder& order) {
  Path lead = leading_path(el, order);
  const Rational lc = el.coefficient(lead);
  Element tail;
  for (const auto& [p, c] : el.terms())
    if (p != lead) tail.add(p, -c / lc);
  return {std::move(lead), std::move(tail)};
}

Element rule_element(const Rule& r) {
  Element el(r.lead);
  el -= r.tail;
  return el;
}

// Makes the rule set reduced: no lead contains another lead, tails irreducible.
void interreduce(std::vector<Rule>& rules, const PathOrder& order, const Quiver& q) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::vector<Rule> others;
      others.reserve(rules.size() - 1);
      for (std::size_t j = 0; j < rules.size(); ++j)
        if (j != i) others.push_back(rules[j]);
      if (find_occurrence(rules[i].lead, others)) {
        Element r = reduce(rule_element(rules[i]), others, order, q);
        rules = std::move(others);
        if (!r.is_zero()) rules.push_back(make_rule(r, order));
        changed = true;
        break;
      }
      Element tail = reduce(rules[i].tail, others, order, q);
      if (!(tail == rules[i].tail)) {
        rules[i].tail = std::move(tail);
        changed = true;
      }
    }
  }
  std::sort(rules.begin(), rules.end(),
            [&](const Rule& a, const Rule& b) { return order.less(a.lead, b.lead); });
}

// Resolves all overlap ambiguities with overlap word length <= max_degree.
void complete(std::vector<Rule>& rules, const PathOrder& order, const Quiver& q, std::size_t max_degree) {
  interreduce(rules, order, q);
  while (true) {
    std::vector<Element> pending;
    for (const auto& f : rules) {
      for (const auto& g : rules) {
        const std::size_t lu = f.lead.length();
        const std::size_t lv = g.lead.length();
        for (std::size_t k = 1; k < std::min(lu, lv); ++k) {
          if (lu + lv - k > max_degree) continue;
          if (!std::equal(f.lead.arrows().end() - static_cast<std::ptrdiff_t>(k), f.lead.arrows().end(),
                          g.lead.arrows().begin()))
            continue;
          // w = f.lead * y = x * g.lead
          const Path x = f.lead.prefix(q, lu - k);
          const Path y = g.lead.subpath(q, k, lv - k);
          Element s = g.tail.sandwiched(x, Path::trivial(g.lead.target()));
          s -= f.tail.sandwiched(Path::trivial(f.lead.source()), y);
          Element r = reduce(std::move(s), rules, order, q);
          if (!r.is_zero()) pending.push_back(std::move(r));
        }
      }
    }
    if (pending.empty()) return;
    for (auto& p : pending) {
      Element r = reduce(std::move(p), rules, order, q);
      if (!r.is_zero()) rules.push_back(make_rule(r, order));
    }
    interreduce(rules, order, q);
  }
}

}  // namespace

Element reduce(Element el, const std::vector<Rule>& rules, const PathOrder& order, const Quiver& q) {
  while (true) {
    const Path* best = nullptr;
    Occurrence occ{};
    for (const auto& [p, c] : el.terms()) {
      if (best && !order.less(*best, p)) continue;
      if (auto o = find_occurrence(p, rules)) {
        best = &p;
        occ = *o;
      }
    }
    if (!best) return el;
    const Path w = *best;
    const Rational c = el.coefficient(w);
    const Rule& rule = rules[occ.rule];
    const Path x = w.prefix(q, occ.offset);
    const Path y = w.subpath(q, occ.offset + rule.lead.length(), w.length() - occ.offset - rule.lead.length());
    el.add(w, -c);
    el += rule.tail.sandwiched(x, y).scaled(c);
  }
}

std::optional<std::size_t> BoundQuiverAlgebra::basis_index(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool BoundQuiverAlgebra::is_reducible(const Path& p) const { return find_occurrence(p, rules_).has_value(); }

Element BoundQuiverAlgebra::normal_form(const Element& el) const { return reduce(el, rules_, order_, quiver_); }

SparseVector BoundQuiverAlgebra::coordinates(const Path& p) const {
  SparseVector out;
  const Element nf = normal_form(Element(p));
  for (const auto& [path, c] : nf.terms()) out.emplace_back(index_.at(path), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Element normal_form(const Element& el, const BoundQuiverAlgebra& a) { return a.normal_form(el); }

BoundQuiverAlgebra build_algebra(Quiver q, std::vector<Relation> rels, const BuildOptions& opts) {
  BoundQuiverAlgebra alg;
  alg.options_ = opts;

  std::vector<std::size_t> rank(q.arrow_count(), 0);
  {
    std::vector<bool> placed(q.arrow_count(), false);
    std::size_t next = 0;
    for (ArrowId a : opts.arrow_order) {
      if (a >= q.arrow_count() || placed[a])
        throw std::invalid_argument("arrow order must list distinct declared arrows");
      placed[a] = true;
      rank[a] = next++;
    }
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
      if (!placed[a]) rank[a] = next++;
  }
  alg.order_ = PathOrder(rank);

  std::vector<Rule> rules;
  for (auto& rel : rels) {
    if (rel.terms.empty()) throw AlgebraError(AlgebraError::Kind::InconsistentRelation, "empty relation");
    Element el;
    const Path& first = rel.terms.front().second;
    for (const auto& [c, p] : rel.terms) {
      if (p.source() != first.source() || p.target() != first.target())
        throw AlgebraError(AlgebraError::Kind::InconsistentRelation,
                           "relation mixes non-parallel paths " + first.to_string(q) + " and " + p.to_string(q));
      if (p.length() < 2)
        throw AlgebraError(AlgebraError::Kind::NotAdmissible,
                           "relation term " + p.to_string(q) + " has length < 2; the ideal is not inside J^2");
      el.add(p, c);
    }
    if (el.is_zero()) continue;
    Rule r = make_rule(el, alg.order_);
    Relation normalized;
    normalized.terms.emplace_back(Rational(1), r.lead);
    for (auto it = r.tail.terms().rbegin(); it != r.tail.terms().rend(); ++it)
      normalized.terms.emplace_back(-it->second, it->first);
    alg.relations_.push_back(std::move(normalized));
    rules.push_back(std::move(r));
  }

  complete(rules, alg.order_, q, opts.max_degree);
  alg.monomial_ = std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return r.tail.is_zero(); });
  alg.rules_ = std::move(rules);

  // Irreducible paths, level by level. A one-arrow extension of an irreducible
  // path is irreducible iff no lead is a suffix of it.
  std::vector<Path> level;
  for (VertexId v = 0; v < q.vertex_count(); ++v) level.push_back(Path::trivial(v));
  alg.basis_ = level;
  for (std::size_t len = 1; !level.empty(); ++len) {
    if (len > opts.max_degree)
      throw AlgebraError(AlgebraError::Kind::NotFiniteDimensional,
                         "irreducible paths of length " + std::to_string(opts.max_degree) +
                             " remain; the algebra is not finite dimensional within the degree bound");
    std::vector<Path> next;
    for (const auto& p : level) {
      for (ArrowId a : q.arrows_from(p.target())) {
        Path w = *compose(p, Path::of_arrow(q, a));
        bool reducible = false;
        for (const auto& r : alg.rules_) {
          const std::size_t l = r.lead.length();
          if (l <= w.length() &&
              std::equal(w.arrows().end() - static_cast<std::ptrdiff_t>(l), w.arrows().end(), r.lead.arrows().begin())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(w));
      }
    }
    std::sort(next.begin(), next.end());
    alg.basis_.insert(alg.basis_.end(), next.begin(), next.end());
    if (alg.basis_.size() > kBasisLimit)
      throw AlgebraError(AlgebraError::Kind::NotFiniteDimensional,
                         "more than " + std::to_string(kBasisLimit) + " irreducible paths");
    level = std::move(next);
  }

  const std::size_t n = q.vertex_count();
  alg.from_.assign(n, {});
  alg.between_.assign(n * n, {});
  for (std::size_t i = 0; i < alg.basis_.size(); ++i) {
    const Path& p = alg.basis_[i];
    alg.index_.emplace(p, i);
    alg.from_[p.source()].push_back(i);
    alg.between_[p.source() * n + p.target()].push_back(i);
  }

  alg.quiver_ = std::move(q);
  const Quiver& quiv = alg.quiver_;
  alg.mult_.assign(alg.basis_.size() * quiv.arrow_count(), {});
  for (std::size_t b = 0; b < alg.basis_.size(); ++b) {
    for (ArrowId a = 0; a < quiv.arrow_count(); ++a) {
      auto w = compose(alg.basis_[b], Path::of_arrow(quiv, a));
      if (!w) continue;
      alg.mult_[b * quiv.arrow_count() + a] = alg.coordinates(*w);
    }
  }

  // Nilpotency degree: least L with span{nf(w) : |w| = L} = 0, using
  // nf(w * a) = nf(nf(w) * a).
  const std::size_t dim = alg.basis_.size();
  Matrix span(0, dim);
  for (VertexId v = 0; v < n; ++v) {
    std::vector<Rational> row(dim);
    row[*alg.basis_index(Path::trivial(v))] = 1;
    span.append_row(row);
  }
  std::size_t degree = 0;
  while (span.rows() > 0) {
    if (degree >= opts.max_degree)
      throw AlgebraError(AlgebraError::Kind::NotFiniteDimensional,
                         "paths of length " + std::to_string(opts.max_degree) +
                             " do not all vanish; the ideal is not admissible within the degree bound");
    Matrix next(0, dim);
    std::vector<Rational> row(dim);
    for (std::size_t r = 0; r < span.rows(); ++r) {
      for (ArrowId a = 0; a < quiv.arrow_count(); ++a) {
        std::fill(row.begin(), row.end(), Rational(0));
        bool any = false;
        for (std::size_t b = 0; b < dim; ++b) {
          if (sgn(span(r, b)) == 0) continue;
          for (const auto& [idx, c] : alg.right_multiply(b, a)) {
            row[idx] += span(r, b) * c;
            any = true;
          }
        }
        if (any) next.append_row(row);
      }
    }
    span = row_space_basis(next);
    ++degree;
  }
  alg.nilpotency_degree_ = degree;
  return alg;
}

BoundQuiverAlgebra opposite(const BoundQuiverAlgebra& a) {
  std::vector<Relation> rels;
  for (const auto& r : a.relations()) {
    Relation rev;
    for (const auto& [c, p] : r.terms) rev.terms.emplace_back(c, p.reversed());
    rels.push_back(std::move(rev));
  }
  return build_algebra(a.quiver().opposite(), std::move(rels), a.options());
}

}  // namespace qit
