#include "heartglue/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace heartglue {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const std::vector<Rat>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Matrix>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rows() != rows || cols[j].cols() != 1) throw std::invalid_argument("from_columns: shape");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j](i, 0);
  }
  return m;
}

Matrix Matrix::col(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::cols_range(std::size_t first, std::size_t count) const { return block(0, first, rows_, count); }

Matrix Matrix::rows_range(std::size_t first, std::size_t count) const { return block(first, 0, count, cols_); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Rat& scale) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("Matrix::add_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (!heartglue::is_zero(b(i, j))) (*this)(r0 + i, c0 + j) += scale * b(i, j);
}

std::vector<Rat> Matrix::to_vector() const {
  if (cols_ != 1 && rows_ != 0) throw std::invalid_argument("to_vector: not a column");
  return data_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix product: inner dimension mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (heartglue::is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rat& b = o(k, j);
        if (!heartglue::is_zero(b)) p(i, j) += a * b;
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

Matrix Matrix::operator-() const { return scaled(Rat(-1)); }

Matrix Matrix::scaled(const Rat& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!heartglue::is_zero(x)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += p.cols();
  }
  Matrix m(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += p.rows();
  }
  Matrix m(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

namespace {

using IntRow = std::vector<mpz_class>;

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow integerize(const Matrix& m, std::size_t r) {
  mpz_class l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const mpz_class& d = m(r, j).get_den();
    if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IntRow row(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Rat& x = m(r, j);
    if (heartglue::is_zero(x)) continue;
    row[j] = x.get_num() * (l / x.get_den());
  }
  remove_content(row);
  return row;
}

}  // namespace

Rref rref(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<IntRow> rows;
  rows.reserve(R);
  for (std::size_t i = 0; i < R; ++i) rows.push_back(integerize(m, i));

  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < C && prow < R; ++c) {
    std::size_t best = R;
    std::size_t best_size = 0;
    for (std::size_t i = prow; i < R; ++i) {
      if (rows[i][c] == 0) continue;
      std::size_t sz = mpz_sizeinbase(rows[i][c].get_mpz_t(), 2);
      if (best == R || sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best == R) continue;
    std::swap(rows[prow], rows[best]);
    const IntRow& piv = rows[prow];
    for (std::size_t i = 0; i < R; ++i) {
      if (i == prow || rows[i][c] == 0) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), rows[i][c].get_mpz_t());
      mpz_class p = piv[c] / g, q = rows[i][c] / g;
      IntRow& row = rows[i];
      for (std::size_t j = 0; j < C; ++j) {
        if (piv[j] == 0) {
          if (row[j] != 0) row[j] *= p;
        } else {
          row[j] = p * row[j] - q * piv[j];
        }
      }
      remove_content(row);
    }
    pivots.push_back(c);
    ++prow;
  }

  Rref out{Matrix(R, C), pivots};
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& lead = rows[i][pivots[i]];
    for (std::size_t j = 0; j < C; ++j) {
      if (rows[i][j] == 0) continue;
      Rat x(rows[i][j], lead);
      x.canonicalize();
      out.form(i, j) = x;
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix kernel_basis(const Matrix& m) {
  const std::size_t C = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_pivot(C, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(C, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    std::size_t fc = free_cols[f];
    k(fc, f) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) k(r.pivots[i], f) = -r.form(i, fc);
  }
  return k;
}

Solution solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t C = m.cols();
  Rref r = rref(hstack(m, b));
  Solution s;
  s.kernel = kernel_basis(m);
  for (auto p : r.pivots)
    if (p >= C) return s;
  Matrix x(C, b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.form(i, C + j);
  s.x = std::move(x);
  return s;
}

bool span_membership(const Matrix& v, const Matrix& s) {
  if (v.is_zero()) return true;
  if (s.cols() == 0) return false;
  if (v.rows() != s.rows()) throw std::invalid_argument("span_membership: row count mismatch");
  Rref r = rref(hstack(s, v));
  for (auto p : r.pivots)
    if (p >= s.cols()) return false;
  return true;
}

Matrix left_inverse(const Matrix& m) {
  Solution s = solve(m.transpose(), Matrix::identity(m.cols()));
  if (!s.x) throw std::invalid_argument("left_inverse: matrix lacks full column rank");
  return s.x->transpose();
}

Matrix right_inverse(const Matrix& m) {
  Solution s = solve(m, Matrix::identity(m.rows()));
  if (!s.x) throw std::invalid_argument("right_inverse: matrix lacks full row rank");
  return *s.x;
}

Matrix independent_columns(const Matrix& m) {
  Rref r = rref(m);
  Matrix out(m.rows(), r.pivots.size());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.set_block(0, i, m.col(r.pivots[i]));
  return out;
}

Matrix complement_columns(const Matrix& s, std::size_t n) {
  Matrix base = s.cols() ? s : Matrix(n, 0);
  Rref r = rref(hstack(base, Matrix::identity(n)));
  std::vector<std::size_t> picked;
  for (auto p : r.pivots)
    if (p >= base.cols()) picked.push_back(p - base.cols());
  Matrix out(n, picked.size());
  for (std::size_t i = 0; i < picked.size(); ++i) out(picked[i], i) = 1;
  return out;
}

Matrix cokernel_projection(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

}  // namespace heartglue
