#pragma once

#include <utility>
#include <vector>

#include "matrix.hpp"

namespace qpa {

// Dense univariate polynomial over a computation field; coefficient of x^i at
// index i, trailing zeros trimmed.  The zero polynomial has degree -1.
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

  static Poly zero(const Field& f) { return Poly(f); }
  static Poly constant(const Scalar& c);
  static Poly x(const Field& f);
  static Poly x_minus(const Scalar& r);  // x - r

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(int i) const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar lead() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

  // quotient and remainder; divisor must be nonzero
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const;
  Poly operator%(const Poly& d) const;

  Poly monic() const;
  Poly derivative() const;
  Poly pow(int e) const;
  Scalar eval(const Scalar& x) const;
  Matrix eval(const Matrix& m) const;  // Horner on a square matrix

  std::string str() const;

 private:
  Field field_;
  std::vector<Scalar> c_;
  void trim();
};

Poly poly_gcd(const Poly& a, const Poly& b);  // monic gcd

// Characteristic polynomial (monic, degree = size) by Faddeev-LeVerrier.
// Valid over Q and over F_p with p larger than the matrix size.
Poly charpoly(const Matrix& m);

// Product of the distinct irreducible factors: p / gcd(p, p').
Poly squarefree_part(const Poly& p);

// Musser/Yun levels: pairwise coprime squarefree u_i with p ~ prod u_i^i.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// All roots of p lying in the coefficient field, ascending and exact.
std::vector<Scalar> rational_roots(const Poly& p);

// Pairwise coprime factors whose product is monic(p): per squarefree level,
// the in-field linear factors are split off individually and the rootless
// remainder is kept whole.  No irreducible factorization is attempted.
std::vector<Poly> coprime_split(const Poly& p);

// Unique polynomial of degree < points.size() through the given points
// (distinct x values required).
Poly lagrange_interpolate(const Field& f, const std::vector<std::pair<Scalar, Scalar>>& points);

}  // namespace qpa
