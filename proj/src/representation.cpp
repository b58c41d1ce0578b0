#include "qit/representation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace qit {

Representation::Representation(std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : dims_(std::move(dims)), maps_(std::move(maps)) {}

Representation Representation::zero(const Quiver& q) {
  return Representation(std::vector<std::size_t>(q.vertex_count(), 0),
                        std::vector<Matrix>(q.arrow_count(), Matrix(0, 0)));
}

std::size_t Representation::total_dimension() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

std::string Representation::to_string(const Quiver& q) const {
  std::ostringstream os;
  os << "dims";
  for (VertexId v = 0; v < dims_.size(); ++v) os << ' ' << q.vertex_name(v) << ':' << dims_[v];
  os << '\n';
  for (ArrowId a = 0; a < maps_.size(); ++a) {
    if (maps_[a].rows() == 0 || maps_[a].cols() == 0) continue;
    os << q.arrow(a).name << " =\n" << maps_[a].to_string();
  }
  return os.str();
}

Matrix path_matrix(const Representation& m, const Path& p) {
  if (p.is_trivial()) return Matrix::identity(m.dim(p.source()));
  Matrix out = m.map(p.arrows().front());
  for (std::size_t i = 1; i < p.length(); ++i) out = out * m.map(p.arrows()[i]);
  return out;
}

namespace {

bool shapes_ok(const Representation& m, const Quiver& q) {
  if (m.dims().size() != q.vertex_count() || m.maps().size() != q.arrow_count()) return false;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (m.map(a).rows() != m.dim(arr.source) || m.map(a).cols() != m.dim(arr.target)) return false;
  }
  return true;
}

}  // namespace

bool satisfies_relations(const Representation& m, const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  if (!shapes_ok(m, q)) return false;
  for (const auto& rel : a.relations()) {
    const Path& first = rel.terms.front().second;
    Matrix sum(m.dim(first.source()), m.dim(first.target()));
    for (const auto& [c, p] : rel.terms) sum += path_matrix(m, p).scaled(c);
    if (!sum.is_zero()) return false;
  }
  return true;
}

void check_representation(const Representation& m, const BoundQuiverAlgebra& a) {
  if (!shapes_ok(m, a.quiver())) throw RepresentationError("representation shapes do not match the quiver");
  if (!satisfies_relations(m, a)) throw RepresentationError("representation violates a relation");
}

Representation direct_sum(const Representation& x, const Representation& y) {
  std::vector<std::size_t> dims(x.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = x.dim(v) + y.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < x.maps().size(); ++a) {
    const Matrix& mx = x.map(a);
    const Matrix& my = y.map(a);
    Matrix m(mx.rows() + my.rows(), mx.cols() + my.cols());
    m.set_block(0, 0, mx);
    m.set_block(mx.rows(), mx.cols(), my);
    maps.push_back(std::move(m));
  }
  return Representation(std::move(dims), std::move(maps));
}

Representation simple_module(const BoundQuiverAlgebra& a, VertexId v) {
  const Quiver& q = a.quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims.at(v) = 1;
  std::vector<Matrix> maps;
  for (const auto& arr : q.arrows()) maps.emplace_back(dims[arr.source], dims[arr.target]);
  return Representation(std::move(dims), std::move(maps));
}

namespace {

std::size_t local_index(const std::vector<std::size_t>& sorted, std::size_t idx) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), idx);
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

Representation projective_module(const BoundQuiverAlgebra& a, VertexId v) {
  const Quiver& q = a.quiver();
  std::vector<std::size_t> dims(q.vertex_count());
  for (VertexId j = 0; j < dims.size(); ++j) dims[j] = a.basis_between(v, j).size();
  std::vector<Matrix> maps;
  for (ArrowId al = 0; al < q.arrow_count(); ++al) {
    const auto& arr = q.arrow(al);
    const auto& rows = a.basis_between(v, arr.source);
    const auto& cols = a.basis_between(v, arr.target);
    Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [idx, c] : a.right_multiply(rows[r], al)) m(r, local_index(cols, idx)) = c;
    maps.push_back(std::move(m));
  }
  return Representation(std::move(dims), std::move(maps));
}

Representation injective_module(const BoundQuiverAlgebra& op, VertexId v) {
  return dualize(projective_module(op, v));
}

Representation path_ideal_module(const BoundQuiverAlgebra& a, const Path& p) {
  if (!a.basis_index(p) && a.is_zero(p))
    throw std::invalid_argument("path " + p.to_string(a.quiver()) + " is zero in the algebra");
  const VertexId s = p.source();
  Representation proj = projective_module(a, s);
  if (p.is_trivial()) return proj;
  std::vector<Matrix> span;
  for (VertexId j = 0; j < a.vertex_count(); ++j) {
    const auto& target_basis = a.basis_between(s, j);
    Matrix gens(0, target_basis.size());
    std::vector<Rational> row(target_basis.size());
    for (std::size_t r : a.basis_between(p.target(), j)) {
      std::fill(row.begin(), row.end(), Rational(0));
      for (const auto& [idx, c] : a.coordinates(*compose(p, a.basis()[r]))) row[local_index(target_basis, idx)] = c;
      gens.append_row(row);
    }
    span.push_back(row_space_basis(gens));
  }
  return restrict(proj, a.quiver(), span);
}

Representation module_from_expr(const ModuleExpr& m, const BoundQuiverAlgebra& a, const BoundQuiverAlgebra* op) {
  std::optional<BoundQuiverAlgebra> own_op;
  if (!op && m.has_injective()) {
    own_op = opposite(a);
    op = &*own_op;
  }
  Representation out = Representation::zero(a.quiver());
  for (const auto& t : m.terms) {
    Representation atom;
    switch (t.atom.kind) {
      case AtomKind::Simple: atom = simple_module(a, t.atom.vertex()); break;
      case AtomKind::Projective: atom = projective_module(a, t.atom.vertex()); break;
      case AtomKind::Injective: atom = injective_module(*op, t.atom.vertex()); break;
      case AtomKind::Ideal: atom = path_ideal_module(a, t.atom.path); break;
    }
    for (std::size_t i = 0; i < t.multiplicity; ++i) out = direct_sum(out, atom);
  }
  check_representation(out, a);
  return out;
}

Representation dualize(const Representation& m) {
  std::vector<Matrix> maps;
  for (const auto& x : m.maps()) maps.push_back(x.transposed());
  return Representation(m.dims(), std::move(maps));
}

Representation restrict(const Representation& m, const Quiver& q, const std::vector<Matrix>& basis) {
  std::vector<std::size_t> dims;
  std::vector<RowSpaceCoordinates> coords;
  for (const auto& b : basis) {
    dims.push_back(b.rows());
    coords.emplace_back(b);
  }
  std::vector<Matrix> maps;
  for (ArrowId al = 0; al < q.arrow_count(); ++al) {
    const auto& arr = q.arrow(al);
    const Matrix& src = basis[arr.source];
    if (src.rows() == 0 || dims[arr.target] == 0) {
      maps.emplace_back(src.rows(), dims[arr.target]);
      if (src.rows() != 0 && !(src * m.map(al)).is_zero())
        throw std::domain_error("restrict: subspace is not closed under the arrows");
      continue;
    }
    maps.push_back(coords[arr.target].solve(src * m.map(al)));
  }
  return Representation(std::move(dims), std::move(maps));
}

std::vector<Matrix> radical(const Representation& m, const Quiver& q) {
  std::vector<Matrix> out;
  for (VertexId k = 0; k < q.vertex_count(); ++k) {
    Matrix images(0, m.dim(k));
    for (ArrowId al : q.arrows_to(k)) images.append_rows(m.map(al));
    out.push_back(row_space_basis(images));
  }
  return out;
}

std::vector<std::size_t> top_dims(const Representation& m, const Quiver& q) {
  auto rad = radical(m, q);
  std::vector<std::size_t> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) out.push_back(m.dim(v) - rad[v].rows());
  return out;
}

std::vector<std::size_t> radical_layer_tops(const Representation& m, const Quiver& q) {
  std::vector<Matrix> layer;
  for (VertexId v = 0; v < q.vertex_count(); ++v) layer.push_back(Matrix::identity(m.dim(v)));
  std::vector<std::size_t> tops;
  while (true) {
    std::vector<Matrix> next;
    for (VertexId k = 0; k < q.vertex_count(); ++k) {
      Matrix images(0, m.dim(k));
      for (ArrowId al : q.arrows_to(k)) images.append_rows(layer[q.arrow(al).source] * m.map(al));
      next.push_back(row_space_basis(images));
    }
    std::size_t cur = 0, rad = 0;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
      cur += layer[v].rows();
      rad += next[v].rows();
    }
    if (cur == 0) break;
    tops.push_back(cur - rad);
    layer = std::move(next);
  }
  return tops;
}

ProjectiveCover projective_cover_syzygy(const Representation& m, const BoundQuiverAlgebra& a,
                                        std::optional<std::size_t> budget) {
  const Quiver& q = a.quiver();
  const std::size_t n = q.vertex_count();
  ProjectiveCover pc;
  pc.multiplicities.assign(n, 0);

  // Top generators: standard vectors at the non-pivot columns of rad M.
  const auto rad = radical(m, q);
  for (VertexId k = 0; k < n; ++k) {
    const auto pivots = row_reduce(rad[k]).pivots;
    std::vector<bool> is_pivot(m.dim(k), false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < m.dim(k); ++c) {
      if (is_pivot[c]) continue;
      std::vector<Rational> v(m.dim(k));
      v[c] = 1;
      pc.generators.push_back({k, std::move(v)});
      ++pc.multiplicities[k];
    }
  }

  if (budget) {
    std::size_t cover_dim = 0;
    for (VertexId k = 0; k < n; ++k) cover_dim += pc.multiplicities[k] * a.basis_from(k).size();
    if (cover_dim > *budget + m.total_dimension()) throw BudgetExceeded();
  }

  // offset[g][j]: position of generator g's block inside the cover at j.
  const std::size_t ng = pc.generators.size();
  std::vector<std::vector<std::size_t>> offset(ng, std::vector<std::size_t>(n));
  pc.cover_basis.assign(n, {});
  for (VertexId j = 0; j < n; ++j) {
    for (std::size_t g = 0; g < ng; ++g) {
      offset[g][j] = pc.cover_basis[j].size();
      for (std::size_t b : a.basis_between(pc.generators[g].vertex, j)) pc.cover_basis[j].emplace_back(g, b);
    }
  }

  std::vector<std::size_t> cover_dims(n);
  for (VertexId j = 0; j < n; ++j) cover_dims[j] = pc.cover_basis[j].size();
  std::vector<Matrix> cover_maps;
  for (ArrowId al = 0; al < q.arrow_count(); ++al) {
    const auto& arr = q.arrow(al);
    Matrix cm(cover_dims[arr.source], cover_dims[arr.target]);
    for (std::size_t r = 0; r < pc.cover_basis[arr.source].size(); ++r) {
      const auto [g, b] = pc.cover_basis[arr.source][r];
      const auto& between = a.basis_between(pc.generators[g].vertex, arr.target);
      for (const auto& [idx, c] : a.right_multiply(b, al)) cm(r, offset[g][arr.target] + local_index(between, idx)) = c;
    }
    cover_maps.push_back(std::move(cm));
  }
  Representation cover(cover_dims, std::move(cover_maps));

  // Images g * b in M, built along prefixes (the basis is prefix closed).
  std::vector<std::vector<std::vector<Rational>>> image(ng, std::vector<std::vector<Rational>>(a.dimension()));
  for (std::size_t g = 0; g < ng; ++g) {
    const VertexId v = pc.generators[g].vertex;
    for (std::size_t b : a.basis_from(v)) {
      const Path& p = a.basis()[b];
      if (p.is_trivial()) {
        image[g][b] = pc.generators[g].vector;
        continue;
      }
      const std::size_t pre = *a.basis_index(p.prefix(q, p.length() - 1));
      image[g][b] = std::span<const Rational>(image[g][pre]) * m.map(p.arrows().back());
    }
  }

  std::vector<Matrix> kernel;
  for (VertexId j = 0; j < n; ++j) {
    Matrix pi(0, m.dim(j));
    for (const auto& [g, b] : pc.cover_basis[j]) pi.append_row(image[g][b]);
    kernel.push_back(left_kernel(pi));
  }
  pc.syzygy = restrict(cover, q, kernel);
  pc.embedding = std::move(kernel);
  return pc;
}

Resolution minimal_resolution(const Representation& m, const BoundQuiverAlgebra& a, std::size_t length,
                              std::size_t budget) {
  Resolution res;
  Representation cur = m;
  for (std::size_t k = 0; k <= length; ++k) {
    res.steps.push_back(projective_cover_syzygy(cur, a, budget));
    const Representation& syz = res.steps.back().syzygy;
    if (syz.is_zero()) break;
    cur = syz;
  }
  return res;
}

namespace {

// Equations M_al f_k - f_j N_al = 0 over the unknown per-vertex matrices f.
Matrix intertwiner_equations(const Representation& m, const Representation& n, const Quiver& q,
                             std::vector<std::size_t>& offset) {
  offset.assign(q.vertex_count() + 1, 0);
  for (VertexId v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + m.dim(v) * n.dim(v);
  const std::size_t unknowns = offset.back();
  Matrix eqs(0, unknowns);
  std::vector<Rational> row(unknowns);
  for (ArrowId al = 0; al < q.arrow_count(); ++al) {
    const VertexId j = q.arrow(al).source;
    const VertexId k = q.arrow(al).target;
    const Matrix& ma = m.map(al);
    const Matrix& na = n.map(al);
    for (std::size_t r = 0; r < m.dim(j); ++r) {
      for (std::size_t c = 0; c < n.dim(k); ++c) {
        std::fill(row.begin(), row.end(), Rational(0));
        for (std::size_t s = 0; s < m.dim(k); ++s) row[offset[k] + s * n.dim(k) + c] += ma(r, s);
        for (std::size_t t = 0; t < n.dim(j); ++t) row[offset[j] + r * n.dim(j) + t] -= na(t, c);
        eqs.append_row(row);
      }
    }
  }
  return eqs;
}

}  // namespace

std::size_t hom_dim(const Representation& m, const Representation& n, const BoundQuiverAlgebra& a) {
  std::vector<std::size_t> offset;
  const Matrix eqs = intertwiner_equations(m, n, a.quiver(), offset);
  return offset.back() - rank(eqs);
}

std::vector<std::vector<Matrix>> hom_basis(const Representation& m, const Representation& n,
                                           const BoundQuiverAlgebra& a) {
  const Quiver& q = a.quiver();
  std::vector<std::size_t> offset;
  const Matrix eqs = intertwiner_equations(m, n, q, offset);
  if (offset.back() == 0) return {};
  const Matrix ker = right_kernel(eqs);
  std::vector<std::vector<Matrix>> out;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    std::vector<Matrix> f;
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
      Matrix fv(m.dim(v), n.dim(v));
      for (std::size_t r = 0; r < m.dim(v); ++r)
        for (std::size_t c = 0; c < n.dim(v); ++c) fv(r, c) = ker(i, offset[v] + r * n.dim(v) + c);
      f.push_back(std::move(fv));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::size_t> ext_dims(const Representation& m, const Representation& n, std::size_t max_degree,
                                  const BoundQuiverAlgebra& a, std::size_t budget) {
  const Quiver& q = a.quiver();
  const Resolution res = minimal_resolution(m, a, max_degree + 1, budget);

  // Action of N along every basis path.
  std::vector<Matrix> along(a.dimension());
  for (std::size_t b = 0; b < a.dimension(); ++b) {
    const Path& p = a.basis()[b];
    if (p.is_trivial()) {
      along[b] = Matrix::identity(n.dim(p.source()));
    } else {
      along[b] = along[*a.basis_index(p.prefix(q, p.length() - 1))] * n.map(p.arrows().back());
    }
  }

  auto hom_size = [&](const ProjectiveCover& pc) {
    std::size_t s = 0;
    for (const auto& g : pc.generators) s += n.dim(g.vertex);
    return s;
  };

  const std::size_t levels = res.steps.size();
  std::vector<std::size_t> hom(levels);
  for (std::size_t k = 0; k < levels; ++k) hom[k] = hom_size(res.steps[k]);

  // rank of d*_k : Hom(P_{k-1}, N) -> Hom(P_k, N), for k = 1..levels-1.
  std::vector<std::size_t> rk(levels + 1, 0);
  for (std::size_t k = 1; k < levels; ++k) {
    const ProjectiveCover& prev = res.steps[k - 1];
    const ProjectiveCover& cur = res.steps[k];
    std::vector<std::size_t> row_off(prev.generators.size() + 1, 0);
    for (std::size_t g = 0; g < prev.generators.size(); ++g)
      row_off[g + 1] = row_off[g] + n.dim(prev.generators[g].vertex);
    Matrix d(hom[k - 1], hom[k]);
    std::size_t col = 0;
    for (const auto& h : cur.generators) {
      const std::vector<Rational> y = std::span<const Rational>(h.vector) * prev.embedding[h.vertex];
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (sgn(y[i]) == 0) continue;
        const auto [g, b] = prev.cover_basis[h.vertex][i];
        const Matrix& nb = along[b];
        for (std::size_t r = 0; r < nb.rows(); ++r)
          for (std::size_t c = 0; c < nb.cols(); ++c) d(row_off[g] + r, col + c) += y[i] * nb(r, c);
      }
      col += n.dim(h.vertex);
    }
    rk[k] = rank(d);
  }

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_degree; ++i) {
    if (i >= levels) {
      out.push_back(0);
      continue;
    }
    out.push_back(hom[i] - rk[i + 1] - rk[i]);
  }
  return out;
}

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t degree,
                    const BoundQuiverAlgebra& a, std::size_t budget) {
  return ext_dims(m, n, degree, a, budget).back();
}

bool is_isomorphic(const Representation& m, const Representation& n, const BoundQuiverAlgebra& a) {
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  const auto basis = hom_basis(m, n, a);
  if (basis.empty()) return false;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::size_t tries = 12;
  for (std::size_t t = 0; t < tries; ++t) {
    std::vector<Matrix> f;
    for (VertexId v = 0; v < m.dims().size(); ++v) f.emplace_back(m.dim(v), n.dim(v));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rational c = coef(rng);
      if (sgn(c) == 0) continue;
      for (VertexId v = 0; v < f.size(); ++v) f[v] += basis[i][v].scaled(c);
    }
    bool invertible = true;
    for (const auto& fv : f)
      if (fv.rows() > 0 && !is_invertible(fv)) {
        invertible = false;
        break;
      }
    if (invertible) return true;
  }
  return false;
}

}  // namespace qit
