#include "qit/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qit {

std::string to_string(const Rational& q) { return q.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<std::vector<Rational>>& rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
  if (other.cols_ != cols_) throw std::invalid_argument("append_rows: width mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c).get_str();
    }
  }
  os << ']';
  return os.str();
}

std::vector<Rational> operator*(std::span<const Rational> v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix product: shape mismatch");
  std::vector<Rational> out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(k, j)) != 0) out[j] += v[k] * m(k, j);
  }
  return out;
}

namespace {

// Reduces the leading `limit` columns of m to RREF, applying the same row
// operations to the remaining columns.
std::vector<std::size_t> reduce_in_place(Matrix& m, std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < limit && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(lead_row, j)) != 0) m(r, j) -= f * m(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

Echelon row_reduce(Matrix m) {
  auto pivots = reduce_in_place(m, m.cols());
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix row_space_basis(const Matrix& m) {
  auto e = row_reduce(m);
  return e.rref.block(0, 0, e.pivots.size(), m.cols());
}

Matrix right_kernel(const Matrix& m) {
  auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix out(0, m.cols());
  std::vector<Rational> v(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, f);
    out.append_row(v);
  }
  return out;
}

Matrix left_kernel(const Matrix& m) { return right_kernel(m.transposed()); }

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

RowSpaceCoordinates::RowSpaceCoordinates(const Matrix& basis) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  Matrix aug(k, n + k);
  aug.set_block(0, 0, basis);
  aug.set_block(0, n, Matrix::identity(k));
  pivots_ = reduce_in_place(aug, n);
  if (pivots_.size() != k) throw std::invalid_argument("RowSpaceCoordinates: rows are dependent");
  rref_ = aug.block(0, 0, k, n);
  transform_ = aug.block(0, n, k, k);
}

bool RowSpaceCoordinates::contains(std::span<const Rational> v) const {
  std::vector<Rational> y(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) y[i] = v[pivots_[i]];
  auto back = std::span<const Rational>(y) * rref_;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (back[j] != v[j]) return false;
  return true;
}

std::vector<Rational> RowSpaceCoordinates::solve(std::span<const Rational> v) const {
  if (v.size() != rref_.cols()) throw std::invalid_argument("RowSpaceCoordinates: width mismatch");
  if (!contains(v)) throw std::domain_error("vector is not in the row space");
  std::vector<Rational> y(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) y[i] = v[pivots_[i]];
  return std::span<const Rational>(y) * transform_;
}

Matrix RowSpaceCoordinates::solve(const Matrix& rows) const {
  Matrix out(0, dimension());
  for (std::size_t r = 0; r < rows.rows(); ++r) out.append_row(solve(rows.row(r)));
  return out;
}

std::size_t integer_rank(std::vector<std::vector<Integer>> a) {
  if (a.empty()) return 0;
  const std::size_t n = a.size();
  const std::size_t m = a.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < m; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace qit
