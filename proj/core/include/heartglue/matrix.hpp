#pragma once

#include "heartglue/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace heartglue {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Rat>& v);
  static Matrix from_columns(std::size_t rows, const std::vector<Matrix>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix col(std::size_t c) const;
  Matrix cols_range(std::size_t first, std::size_t count) const;
  Matrix rows_range(std::size_t first, std::size_t count) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b, const Rat& scale = Rat(1));
  std::vector<Rat> to_vector() const;  // column vectors only

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Rat& s) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols);
Matrix block_diag(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix form;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form by fraction-free elimination on integerized rows,
// normalized to unit pivots at the end.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns form a basis of ker m, one per free column in increasing order.
Matrix kernel_basis(const Matrix& m);

struct Solution {
  std::optional<Matrix> x;
  Matrix kernel;
};

// Solves m x = b. Throws std::invalid_argument on a row-count mismatch.
Solution solve(const Matrix& m, const Matrix& b);

// True iff the column v lies in the column span of s.
bool span_membership(const Matrix& v, const Matrix& s);

// l with l * m = I; m must have full column rank.
Matrix left_inverse(const Matrix& m);
// r with m * r = I; m must have full row rank.
Matrix right_inverse(const Matrix& m);

// Subset of the columns of m forming a basis of its column space.
Matrix independent_columns(const Matrix& m);
// Standard basis columns of K^n completing the column span of s to K^n.
Matrix complement_columns(const Matrix& s, std::size_t n);
// Rows spanning the left null space: q * m = 0 with q of full row rank.
Matrix cokernel_projection(const Matrix& m);

}  // namespace heartglue
