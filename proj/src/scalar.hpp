#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qpa {

// Library-wide fault type.  Mathematical "no solution" outcomes are modelled
// with optionals, not exceptions; Error is for contract violations and
// malformed input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, Prime };

// Computation field: the rationals, or F_p for a machine-word prime p.
// The prime must exceed 2^30 so that generic dimension counts observed over
// F_p match the characteristic-zero values for all desk-scale inputs.
struct Field {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;

  static Field rationals() { return Field{FieldKind::Rationals, 0}; }
  static Field prime(std::uint64_t p);

  bool operator==(const Field&) const = default;
  std::string str() const;              // "Q" or "fp:<p>"
  static Field parse(const std::string& s);
};

// One exact field element.  Rational values are kept reduced with positive
// denominator (mpq canonical form); prime-field values carry their modulus so
// that matrices stay self-describing.  Mixing the two kinds in one operation
// is a fault.
class Scalar {
 public:
  Scalar() : kind_(FieldKind::Rationals) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  static Scalar from_mpz(const Field& f, const mpz_class& v);
  static Scalar from_mpq(mpq_class v);          // rationals, canonicalized
  static Scalar from_residue(std::uint64_t r, std::uint64_t p);

  FieldKind kind() const { return kind_; }
  Field field() const;
  bool is_rational() const { return kind_ == FieldKind::Rationals; }

  const mpq_class& rat() const;
  std::uint64_t residue() const;
  std::uint64_t modulus() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;      // fault on division by zero
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "p/q" (q omitted when 1) over the rationals, "r mod p" over F_p.
  std::string str() const;
  static Scalar parse(const Field& f, const std::string& s);

 private:
  FieldKind kind_;
  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t p_ = 0;

  void check_same(const Scalar& o) const;
};

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace qpa
