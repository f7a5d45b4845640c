#include "qiso/matrix.hpp"

#include <stdexcept>

namespace qiso {
namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), entries_(rows * cols, Cyclotomic::zero(order)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
  for (const auto& e : entries_) order_ = common_order(order_, e.order());
  for (auto& e : entries_)
    if (e.order() != order_) e = e.lifted(order_);
}

Matrix Matrix::identity(std::size_t n, int order) {
  Matrix m(n, n, order);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Cyclotomic::one(order);
  return m;
}

Matrix Matrix::scalar(const Cyclotomic& value, std::size_t n) { return value * identity(n, value.order()); }

Matrix Matrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  std::size_t cols = rows.front().size();
  std::vector<Cyclotomic> entries;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(entries));
}

void Matrix::set(std::size_t r, std::size_t c, const Cyclotomic& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  if (value.order() != order_) {
    int n = common_order(order_, value.order());
    if (n != order_) *this = lifted(n);
    entries_[r * cols_ + c] = value.lifted(n);
    return;
  }
  entries_[r * cols_ + c] = value;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::size_t Matrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.is_zero() ? 0 : 1;
  return n;
}

Matrix Matrix::lifted(int order) const {
  if (order == order_) return *this;
  Matrix m = *this;
  m.order_ = order;
  for (auto& e : m.entries_) e = e.lifted(order);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_, order_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& e = entries_[r * cols_ + c];
      if (!e.is_zero()) m.entries_[c * rows_ + r] = e.conj();
    }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_, order_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape mismatch in addition: " + shape(*this) + " vs " + shape(o));
  if (o.order_ != order_) {
    int n = common_order(order_, o.order_);
    *this = lifted(n);
    return *this += o.lifted(n);
  }
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!o.entries_[i].is_zero()) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) { return *this += -o; }

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& e : m.entries_)
    if (!e.is_zero()) e = -e;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("shape mismatch in product: " + shape(a) + " * " + shape(b));
  if (a.order_ != b.order_) {
    int n = common_order(a.order_, b.order_);
    return a.lifted(n) * b.lifted(n);
  }
  Matrix m(a.rows_, b.cols_, a.order_);
  // Models are sparse (permutation-like blocks), so skip zero entries early.
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclotomic& aik = a.entries_[i * a.cols_ + k];
      if (aik.is_zero()) continue;
      const bool unit = aik.is_one();
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Cyclotomic& bkj = b.entries_[k * b.cols_ + j];
        if (bkj.is_zero()) continue;
        if (unit)
          m.entries_[i * m.cols_ + j] += bkj;
        else
          m.entries_[i * m.cols_ + j] += aik * bkj;
      }
    }
  return m;
}

Matrix operator*(const Cyclotomic& s, const Matrix& m) {
  if (s.is_one()) return m;
  Matrix r = m;
  if (s.order() != r.order_) r = r.lifted(common_order(s.order(), r.order_));
  for (auto& e : r.entries_)
    if (!e.is_zero()) e = s * e;
  if (s.is_zero()) r = Matrix(r.rows_, r.cols_, r.order_);
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (!(a.entries_[i] == b.entries_[i])) return false;
  return true;
}

Cyclotomic Matrix::frobenius_norm_sq() const {
  Cyclotomic total = Cyclotomic::zero(order_);
  for (const auto& e : entries_)
    if (!e.is_zero()) total += e * e.conj();
  return total;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(entries_[r * cols_ + c].to_string());
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  int n = common_order(a.order(), b.order());
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Cyclotomic& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Cyclotomic& bkl = b(k, l);
          if (!bkl.is_zero()) m.set(i * b.rows() + k, j * b.cols() + l, aij * bkl);
        }
    }
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix z1(a.rows(), b.cols(), a.order());
  Matrix z2(b.rows(), a.cols(), b.order());
  return block_matrix({{a, z1}, {z2, b}});
}

Matrix power(const Matrix& m, unsigned exponent) {
  if (!m.square()) throw std::invalid_argument("power of a non-square matrix");
  Matrix result = Matrix::identity(m.rows(), m.order());
  Matrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Matrix block_matrix(const std::vector<std::vector<Matrix>>& blocks) {
  if (blocks.empty() || blocks.front().empty()) throw std::invalid_argument("empty block matrix");
  const std::size_t br = blocks.size(), bc = blocks.front().size();
  std::vector<std::size_t> heights(br), widths(bc);
  int order = 1;
  for (std::size_t i = 0; i < br; ++i) {
    if (blocks[i].size() != bc) throw std::invalid_argument("ragged block matrix");
    for (std::size_t j = 0; j < bc; ++j) {
      const Matrix& b = blocks[i][j];
      if (j == 0) heights[i] = b.rows();
      if (i == 0) widths[j] = b.cols();
      if (b.rows() != heights[i] || b.cols() != widths[j])
        throw std::invalid_argument("block (" + std::to_string(i) + "," + std::to_string(j) + ") has shape " +
                                    shape(b) + ", inconsistent with its block row/column");
      order = common_order(order, b.order());
    }
  }
  std::size_t rows = 0, cols = 0;
  for (auto h : heights) rows += h;
  for (auto w : widths) cols += w;
  Matrix m(rows, cols, order);
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < br; ++i) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < bc; ++j) {
      const Matrix& b = blocks[i][j];
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero()) m.set(r0 + r, c0 + c, b(r, c));
      c0 += widths[j];
    }
    r0 += heights[i];
  }
  return m;
}

MatrixFlags classify(const Matrix& m) {
  MatrixFlags f;
  Matrix adj = m.adjoint();
  f.is_partial_isometry = (m * adj * m) == m;
  if (!m.square()) return f;
  Matrix id = Matrix::identity(m.rows(), m.order());
  f.is_self_adjoint = adj == m;
  f.is_unitary = (m * adj) == id && (adj * m) == id;
  f.is_projection = f.is_self_adjoint && (m * m) == m;
  return f;
}

MagicUnitaryReport is_magic_unitary(const std::vector<std::vector<Matrix>>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty magic unitary grid");
  const std::size_t n = grid.size();
  const std::size_t dim = grid[0][0].rows();
  int order = 1;
  for (const auto& row : grid) {
    if (row.size() != n) throw std::invalid_argument("magic unitary grid must be square");
    for (const auto& cell : row) {
      if (!cell.square() || cell.rows() != dim)
        throw std::invalid_argument("magic unitary grid cells must be square of one dimension");
      order = common_order(order, cell.order());
    }
  }
  MagicUnitaryReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!classify(grid[i][j]).is_projection) {
        rep.first_failure = "cell (" + std::to_string(i) + "," + std::to_string(j) + ") is not a projection";
        return rep;
      }
  const Matrix id = Matrix::identity(dim, order);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix row_sum(dim, dim, order), col_sum(dim, dim, order);
    for (std::size_t j = 0; j < n; ++j) {
      row_sum += grid[i][j];
      col_sum += grid[j][i];
    }
    if (!(row_sum == id)) {
      rep.first_failure = "row " + std::to_string(i) + " does not sum to the identity";
      return rep;
    }
    if (!(col_sum == id)) {
      rep.first_failure = "column " + std::to_string(i) + " does not sum to the identity";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace qiso
