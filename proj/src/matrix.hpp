#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace qpa {

using Vec = std::vector<Scalar>;

// Dense exact matrix.  Zero rows or columns are legal; an empty product
// contributes a zero matrix of the induced shape.
class Matrix {
 public:
  Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
  Matrix(Field f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  }

  static Matrix identity(const Field& f, int n);
  // rows-of-rows constructor used by fixtures; entries given as long ints
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  Scalar trace() const;

  // rows/cols stacking
  static Matrix vstack(const std::vector<Matrix>& blocks);
  static Matrix hstack(const std::vector<Matrix>& blocks);
  Matrix submatrix_rows(const std::vector<int>& rows) const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> e_;
};

Vec mat_vec(const Matrix& m, const Vec& x);   // m * x
Vec vec_mat(const Vec& x, const Matrix& m);   // x * m (row vector action)

struct RrefResult {
  Matrix r;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Reduced row echelon form by exact Gauss-Jordan.  mpq arithmetic keeps
// entries in lowest terms at every step, which is all the pivot
// normalization these desk-scale systems need.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

// Basis of the right null space {x : m x = 0}; size == cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);

// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Nonzero integer vector z with m z = 0, denominators cleared and content 1,
// first nonzero entry positive.  Faults when the null space is trivial.
// Defined for rational matrices only.
std::vector<mpz_class> integer_nullvector(const Matrix& m);

Scalar determinant(const Matrix& m);

// Incrementally maintained row span; insert() reports whether the vector
// enlarged the span.
class EchelonSpan {
 public:
  explicit EchelonSpan(int width, Field f) : width_(width), field_(f) {}
  bool insert(Vec v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int width_;
  Field field_;
  std::vector<Vec> rows_;       // reduced, leading entry 1
  std::vector<int> lead_cols_;  // strictly increasing
};

}  // namespace qpa
