#include "scalar.hpp"

namespace qpa {

Field Field::prime(std::uint64_t p) {
  if (p <= (1ull << 30))
    throw Error("prime field modulus must exceed 2^30, got " + std::to_string(p));
  if (p >= (1ull << 63)) throw Error("prime field modulus must fit in 63 bits");
  Field f;
  f.kind = FieldKind::Prime;
  f.p = p;
  return f;
}

std::string Field::str() const {
  return kind == FieldKind::Rationals ? "Q" : "fp:" + std::to_string(p);
}

Field Field::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    try {
      return prime(std::stoull(s.substr(3)));
    } catch (const std::invalid_argument&) {
      throw Error("bad field spec: " + s);
    } catch (const std::out_of_range&) {
      throw Error("bad field spec: " + s);
    }
  }
  throw Error("bad field spec: " + s + " (expected q or fp:PRIME)");
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;  // p < 2^63, no overflow
  return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error("division by zero in F_p");
  // extended Euclid on signed 128-bit to avoid sign headaches
  __int128 t = 0, newt = 1;
  __int128 r = static_cast<__int128>(p), newr = static_cast<__int128>(a % p);
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<__int128>(p);
  return static_cast<std::uint64_t>(t);
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long v) {
  Scalar s;
  s.kind_ = f.kind;
  if (f.kind == FieldKind::Rationals) {
    s.q_ = mpq_class(v);
  } else {
    s.p_ = f.p;
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += static_cast<long>(f.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_mpz(const Field& f, const mpz_class& v) {
  Scalar s;
  s.kind_ = f.kind;
  if (f.kind == FieldKind::Rationals) {
    s.q_ = mpq_class(v);
  } else {
    s.p_ = f.p;
    mpz_class m = v % mpz_class(static_cast<unsigned long>(f.p));
    if (m < 0) m += mpz_class(static_cast<unsigned long>(f.p));
    s.r_ = mpz_get_ui(m.get_mpz_t());
  }
  return s;
}

Scalar Scalar::from_mpq(mpq_class v) {
  v.canonicalize();
  Scalar s;
  s.kind_ = FieldKind::Rationals;
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::from_residue(std::uint64_t r, std::uint64_t p) {
  Scalar s;
  s.kind_ = FieldKind::Prime;
  s.p_ = p;
  s.r_ = r % p;
  return s;
}

Field Scalar::field() const {
  return kind_ == FieldKind::Rationals ? Field::rationals() : Field::prime(p_);
}

const mpq_class& Scalar::rat() const {
  if (kind_ != FieldKind::Rationals) throw Error("scalar is not rational");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (kind_ != FieldKind::Prime) throw Error("scalar is not a prime-field residue");
  return r_;
}

std::uint64_t Scalar::modulus() const {
  if (kind_ != FieldKind::Prime) throw Error("scalar is not a prime-field residue");
  return p_;
}

bool Scalar::is_zero() const {
  return kind_ == FieldKind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return kind_ == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (kind_ != o.kind_ || (kind_ == FieldKind::Prime && p_ != o.p_))
    throw Error("field mismatch in scalar arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(*this);
  if (kind_ == FieldKind::Rationals)
    s.q_ += o.q_;
  else
    s.r_ = add_mod(r_, o.r_, p_);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s(*this);
  if (kind_ == FieldKind::Rationals)
    s.q_ -= o.q_;
  else
    s.r_ = sub_mod(r_, o.r_, p_);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(*this);
  if (kind_ == FieldKind::Rationals)
    s.q_ *= o.q_;
  else
    s.r_ = mul_mod(r_, o.r_, p_);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) throw Error("scalar division by zero");
  Scalar s(*this);
  if (kind_ == FieldKind::Rationals)
    s.q_ /= o.q_;
  else
    s.r_ = mul_mod(r_, inv_mod(o.r_, p_), p_);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (kind_ == FieldKind::Rationals)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar Scalar::inverse() const { return one(field()) / *this; }

bool Scalar::operator==(const Scalar& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == FieldKind::Rationals) return q_ == o.q_;
  return p_ == o.p_ && r_ == o.r_;
}

std::string Scalar::str() const {
  if (kind_ == FieldKind::Rationals) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(p_);
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  if (f.kind == FieldKind::Rationals) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    if (v.get_den() == 0) throw Error("zero denominator in rational literal: " + s);
    return from_mpq(v);
  }
  // accept "r mod p" (p must match the field) or a plain integer
  auto pos = s.find(" mod ");
  std::string rpart = pos == std::string::npos ? s : s.substr(0, pos);
  try {
    mpz_class r(rpart);
    if (pos != std::string::npos) {
      std::uint64_t p = std::stoull(s.substr(pos + 5));
      if (p != f.p) throw Error("residue modulus " + std::to_string(p) + " does not match field " + f.str());
    }
    return from_mpz(f, r);
  } catch (const std::invalid_argument&) {
    throw Error("bad residue literal: " + s);
  }
}

}  // namespace qpa
