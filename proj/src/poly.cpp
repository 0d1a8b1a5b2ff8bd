#include "poly.hpp"

#include <algorithm>

namespace qpa {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
  Poly p(c.field());
  p.c_ = {c};
  p.trim();
  return p;
}

Poly Poly::x(const Field& f) {
  Poly p(f);
  p.c_ = {Scalar::zero(f), Scalar::one(f)};
  return p;
}

Poly Poly::x_minus(const Scalar& r) {
  Poly p(r.field());
  p.c_ = {-r, Scalar::one(r.field())};
  return p;
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar::zero(field_);
  return c_[static_cast<std::size_t>(i)];
}

Scalar Poly::lead() const {
  if (c_.empty()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    Scalar v = Scalar::zero(field_);
    if (i < c_.size()) v = v + c_[i];
    if (i < o.c_.size()) v = v + o.c_[i];
    r.c_[i] = v;
  }
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    Scalar v = Scalar::zero(field_);
    if (i < c_.size()) v = v + c_[i];
    if (i < o.c_.size()) v = v - o.c_[i];
    r.c_[i] = v;
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  Poly r(field_);
  r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  Poly q(field_), r(*this);
  if (degree() < d.degree()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(degree() - d.degree() + 1), Scalar::zero(field_));
  Scalar dinv = d.lead().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Scalar f = r.c_.back() * dinv;
    q.c_[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= d.degree(); ++i) {
      std::size_t k = static_cast<std::size_t>(i + shift);
      r.c_[k] = r.c_[k] - f * d.c_[static_cast<std::size_t>(i)];
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::operator/(const Poly& d) const { return divmod(d).first; }
Poly Poly::operator%(const Poly& d) const { return divmod(d).second; }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r(*this);
  Scalar inv = lead().inverse();
  for (auto& c : r.c_) c = c * inv;
  return r;
}

Poly Poly::derivative() const {
  Poly r(field_);
  if (degree() < 1) return r;
  r.c_.resize(c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = c_[i] * Scalar::from_int(field_, static_cast<long>(i));
  r.trim();
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  Poly r = constant(Scalar::one(field_));
  Poly b(*this);
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar v = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Matrix Poly::eval(const Matrix& m) const {
  if (m.rows() != m.cols()) throw Error("polynomial of non-square matrix");
  Matrix v(field_, m.rows(), m.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    v = v * m;
    for (int i = 0; i < m.rows(); ++i) v.at(i, i) = v.at(i, i) + *it;
  }
  return v;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || !c.is_one()) s += "(" + c.str() + ")";
    if (i > 0) s += "x^" + std::to_string(i);
  }
  return s;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x(a), y(b);
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

Poly charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("charpoly of non-square matrix");
  const Field& f = m.field();
  int n = m.rows();
  if (f.kind == FieldKind::Prime && static_cast<std::uint64_t>(n) >= f.p)
    throw Error("charpoly needs field characteristic larger than matrix size");
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar::zero(f));
  c[static_cast<std::size_t>(n)] = Scalar::one(f);
  Matrix mk = m;
  for (int k = 1; k <= n; ++k) {
    Scalar ck = -(mk.trace() / Scalar::from_int(f, k));
    c[static_cast<std::size_t>(n - k)] = ck;
    if (k < n) {
      Matrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) + ck;
      mk = m * shifted;
    }
  }
  return Poly(f, std::move(c));
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error("squarefree part of zero polynomial");
  if (p.degree() == 0) return p.monic();
  Poly g = poly_gcd(p, p.derivative());
  return (p / g).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error("squarefree decomposition of zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly cur = p.monic();
  if (cur.degree() == 0) return out;
  Poly g = poly_gcd(cur, cur.derivative());
  Poly w = cur / g;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, g);
    Poly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    g = g / y;
    w = y;
    ++i;
  }
  return out;
}

namespace {

// deterministic helper stream for the equal-degree splitting below
struct SplitRng {
  std::uint64_t s = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) { return (a * b) % mod; }

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly r = Poly::constant(Scalar::one(base.field()));
  Poly b = base % mod;
  while (e) {
    if (e & 1) r = poly_mulmod(r, b, mod);
    b = poly_mulmod(b, b, mod);
    e >>= 1;
  }
  return r;
}

// Roots in F_q of an arbitrary nonzero polynomial: strip to the product of
// distinct linear factors with gcd(x^q - x, g), then split by the usual
// quadratic-residue probe.
void fq_collect_roots(const Poly& h, SplitRng& rng, std::vector<Scalar>& out) {
  if (h.degree() <= 0) return;
  const Field f = h.field();
  if (h.degree() == 1) {
    out.push_back(-(h.coeff(0) / h.coeff(1)));
    return;
  }
  std::uint64_t q = f.p;
  for (int tries = 0; tries < 128; ++tries) {
    Scalar c = Scalar::from_residue(rng.next() % q, q);
    Poly shifted(f, {c, Scalar::one(f)});  // x + c
    Poly w = poly_powmod(shifted, (q - 1) / 2, h) - Poly::constant(Scalar::one(f));
    Poly d = poly_gcd(w, h);
    if (d.degree() > 0 && d.degree() < h.degree()) {
      fq_collect_roots(d, rng, out);
      fq_collect_roots(h / d, rng, out);
      return;
    }
  }
  throw Error("root splitting over F_p failed to converge");
}

std::vector<Scalar> fq_roots(const Poly& p) {
  const Field f = p.field();
  Poly g = p.monic();
  Poly xq = poly_powmod(Poly::x(f), f.p, g);
  Poly h = poly_gcd(xq - Poly::x(f), g);
  std::vector<Scalar> out;
  SplitRng rng;
  fq_collect_roots(h, rng, out);
  std::sort(out.begin(), out.end(),
            [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
  return out;
}

// Fujiwara bound on |roots| of a monic integer polynomial:
// 2 * max_k |b_{n-k}|^{1/k}.
mpz_class fujiwara_bound(const std::vector<mpz_class>& b) {
  int n = static_cast<int>(b.size()) - 1;
  mpz_class best = 1;
  for (int k = 1; k <= n; ++k) {
    mpz_class a = abs(b[static_cast<std::size_t>(n - k)]);
    if (a == 0) continue;
    mpz_class root;
    mpz_root(root.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
    root += 1;  // ceiling
    if (root > best) best = root;
  }
  return 2 * best;
}

mpz_class eval_int_poly(const std::vector<mpz_class>& b, const mpz_class& x) {
  mpz_class v = 0;
  for (auto it = b.rbegin(); it != b.rend(); ++it) v = v * x + *it;
  return v;
}

// Rational roots of a rational polynomial via the monic integer model
// q(y) = lead^{deg-1} p(y/lead): integer roots of q are found by root
// extraction modulo a large prime, symmetric lift, and exact verification.
std::vector<Scalar> rational_roots_over_q(const Poly& p) {
  Poly sf = squarefree_part(p);
  int n = sf.degree();
  std::vector<Scalar> out;
  if (n <= 0) return out;
  mpz_class den_lcm = 1;
  for (int i = 0; i <= n; ++i) {
    mpz_class d = sf.coeff(i).rat().get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> a(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    mpq_class q = sf.coeff(i).rat() * mpq_class(den_lcm);
    a[static_cast<std::size_t>(i)] = q.get_num();
  }
  mpz_class lead = a[static_cast<std::size_t>(n)];
  // b_i = a_i * lead^{n-1-i}, so that b is monic in y = lead * x
  std::vector<mpz_class> b(static_cast<std::size_t>(n) + 1);
  b[static_cast<std::size_t>(n)] = 1;
  mpz_class powv = 1;
  for (int i = n - 1; i >= 0; --i) {
    b[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * powv;
    powv *= lead;
  }
  mpz_class bound = fujiwara_bound(b);
  const std::uint64_t primes[] = {(1ull << 31) - 1, (1ull << 61) - 1};
  std::uint64_t q = 0;
  for (std::uint64_t cand : primes)
    if (mpz_class(2) * bound + 4 < mpz_class(static_cast<unsigned long>(cand))) {
      q = cand;
      break;
    }
  if (q == 0) throw Error("root bound too large for modular root extraction");
  Field fq = Field::prime(q);
  std::vector<Scalar> bq(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) bq[i] = Scalar::from_mpz(fq, b[i]);
  for (const Scalar& rho : fq_roots(Poly(fq, bq))) {
    mpz_class r(static_cast<unsigned long>(rho.residue()));
    if (r > mpz_class(static_cast<unsigned long>(q)) / 2) r -= mpz_class(static_cast<unsigned long>(q));
    if (abs(r) > bound) continue;
    if (eval_int_poly(b, r) != 0) continue;
    mpq_class root(r, lead);
    root.canonicalize();
    out.push_back(Scalar::from_mpq(root));
  }
  std::sort(out.begin(), out.end(),
            [](const Scalar& x, const Scalar& y) { return x.rat() < y.rat(); });
  return out;
}

}  // namespace

std::vector<Scalar> rational_roots(const Poly& p) {
  if (p.is_zero()) throw Error("roots of the zero polynomial");
  if (p.degree() == 0) return {};
  if (p.field().kind == FieldKind::Rationals) return rational_roots_over_q(p);
  return fq_roots(squarefree_part(p));
}

std::vector<Poly> coprime_split(const Poly& p) {
  if (p.is_zero()) throw Error("coprime split of zero polynomial");
  std::vector<Poly> out;
  for (const auto& [u, mult] : squarefree_decomposition(p)) {
    Poly rem = u;
    for (const Scalar& r : rational_roots(u)) {
      Poly lin = Poly::x_minus(r);
      rem = rem / lin;
      out.push_back(lin.pow(mult));
    }
    if (rem.degree() > 0) out.push_back(rem.pow(mult));
  }
  return out;
}

Poly lagrange_interpolate(const Field& f, const std::vector<std::pair<Scalar, Scalar>>& points) {
  Poly acc = Poly::zero(f);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly term = Poly::constant(points[i].second);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      Scalar denom = points[i].first - points[j].first;
      if (denom.is_zero()) throw Error("lagrange_interpolate: repeated x value");
      term = term * Poly::x_minus(points[j].first);
      term = term * Poly::constant(denom.inverse());
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace qpa
