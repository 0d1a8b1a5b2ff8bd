#include "matrix.hpp"

#include <algorithm>

namespace qpa {

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  if (field_ != o.field_) throw Error("field mismatch in matrix product");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& x : r.e_) x = -x;
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(*this);
  for (auto& x : r.e_) x = x * c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw Error("trace of non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (int i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw Error("vstack of no blocks");
  int cols = blocks[0].cols();
  int rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error("vstack column mismatch");
    rows += b.rows();
  }
  Matrix r(blocks[0].field(), rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < cols; ++j) r.at(off + i, j) = b.at(i, j);
    off += b.rows();
  }
  return r;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw Error("hstack of no blocks");
  int rows = blocks[0].rows();
  int cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error("hstack row mismatch");
    cols += b.cols();
  }
  Matrix r(blocks[0].field(), rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < b.cols(); ++j) r.at(i, off + j) = b.at(i, j);
    off += b.cols();
  }
  return r;
}

Matrix Matrix::submatrix_rows(const std::vector<int>& rows) const {
  Matrix r(field_, static_cast<int>(rows.size()), cols_);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(rows[i], j);
  return r;
}

Vec mat_vec(const Matrix& m, const Vec& x) {
  if (static_cast<int>(x.size()) != m.cols()) throw Error("mat_vec shape mismatch");
  Vec r(m.rows(), Scalar::zero(m.field()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !x[j].is_zero()) r[i] = r[i] + m.at(i, j) * x[j];
  return r;
}

Vec vec_mat(const Vec& x, const Matrix& m) {
  if (static_cast<int>(x.size()) != m.rows()) throw Error("vec_mat shape mismatch");
  Vec r(m.cols(), Scalar::zero(m.field()));
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r[j] = r[j] + x[i] * m.at(i, j);
  }
  return r;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}, 0};
  Matrix& a = res.r;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    Scalar inv = a.at(row, col).inverse();
    for (int j = col; j < a.cols(); ++j) a.at(row, j) = a.at(row, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) - f * a.at(row, j);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (int r = 0; r < rr.rank; ++r) v[rr.pivot_cols[r]] = -rr.r.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error("solve shape mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  for (int c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // pivot in the augmented column
  Vec x(m.cols(), Scalar::zero(m.field()));
  for (int r = 0; r < rr.rank; ++r) x[rr.pivot_cols[r]] = rr.r.at(r, m.cols());
  return x;
}

std::vector<mpz_class> integer_nullvector(const Matrix& m) {
  if (m.field().kind != FieldKind::Rationals)
    throw Error("integer_nullvector requires a rational matrix");
  auto kb = kernel_basis(m);
  if (kb.empty()) throw Error("integer_nullvector: null space is trivial");
  const Vec& v = kb.front();
  mpz_class lcm = 1;
  for (const auto& s : v) {
    mpz_class d = s.rat().get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> z(v.size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpq_class q = v[i].rat() * mpq_class(lcm);
    z[i] = q.get_num();  // denominator is 1 after scaling
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
  }
  for (auto& x : z) x /= content;
  int lead = -1;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  if (lead >= 0 && z[lead] < 0)
    for (auto& x : z) x = -x;
  return z;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  Matrix a = m;
  const Field& f = m.field();
  Scalar det = Scalar::one(f);
  int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar::zero(f);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      det = -det;
    }
    det = det * a.at(col, col);
    Scalar inv = a.at(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      Scalar factor = a.at(i, col) * inv;
      for (int j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - factor * a.at(col, j);
    }
  }
  return det;
}

bool EchelonSpan::insert(Vec v) {
  if (static_cast<int>(v.size()) != width_) throw Error("EchelonSpan width mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[static_cast<std::size_t>(lead_cols_[r])];
    if (c.is_zero()) continue;
    for (int j = lead_cols_[r]; j < width_; ++j)
      v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] - c * rows_[r][static_cast<std::size_t>(j)];
  }
  int lead = -1;
  for (int j = 0; j < width_; ++j)
    if (!v[static_cast<std::size_t>(j)].is_zero()) {
      lead = j;
      break;
    }
  if (lead < 0) return false;
  Scalar inv = v[static_cast<std::size_t>(lead)].inverse();
  for (int j = lead; j < width_; ++j) v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] * inv;
  auto pos = std::lower_bound(lead_cols_.begin(), lead_cols_.end(), lead) - lead_cols_.begin();
  rows_.insert(rows_.begin() + pos, std::move(v));
  lead_cols_.insert(lead_cols_.begin() + pos, lead);
  return true;
}

}  // namespace qpa
