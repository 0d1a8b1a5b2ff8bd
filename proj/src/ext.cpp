#include "ext.hpp"

#include <algorithm>

namespace qpa {

namespace {

struct CocycleSystem {
  std::vector<int> off;  // unknown offset per arrow
  int unknowns = 0;
  Matrix sys;            // relation-derivative equations
  CocycleSystem() : sys(Field::rationals(), 0, 0) {}
};

// The relation rho = sum_p lambda_p p differentiates, slot by slot, to
//   sum_p lambda_p sum_i M_{p(<i)} g_{p_i} N_{p(>i)} = 0,
// with empty prefixes and suffixes contributing identity matrices.
CocycleSystem cocycle_system(const Representation& m, const Representation& n) {
  if (!same_algebra(*m.alg, *n.alg)) throw Error("ext: algebra mismatch");
  if (m.field != n.field) throw Error("ext: field mismatch");
  const Quiver& q = m.alg->quiver;
  const Field& f = m.field;
  CocycleSystem cs;
  cs.off.assign(q.arrows.size() + 1, 0);
  for (std::size_t b = 0; b < q.arrows.size(); ++b) {
    const Arrow& a = q.arrows[b];
    cs.off[b + 1] = cs.off[b] + m.dims[static_cast<std::size_t>(a.src)] *
                                    n.dims[static_cast<std::size_t>(a.dst)];
  }
  cs.unknowns = cs.off.back();
  int eqs = 0;
  for (const Relation& rel : m.alg->relations)
    eqs += m.dims[static_cast<std::size_t>(rel.src)] * n.dims[static_cast<std::size_t>(rel.dst)];
  cs.sys = Matrix(f, eqs, cs.unknowns);
  int row0 = 0;
  for (const Relation& rel : m.alg->relations) {
    int ru = m.dims[static_cast<std::size_t>(rel.src)];
    int cw = n.dims[static_cast<std::size_t>(rel.dst)];
    for (const RelationTerm& term : rel.terms) {
      Scalar lam = f.kind == FieldKind::Rationals
                       ? Scalar::from_mpq(term.coeff)
                       : Scalar::from_mpz(f, term.coeff.get_num()) /
                             Scalar::from_mpz(f, term.coeff.get_den());
      for (std::size_t slot = 0; slot < term.arrows.size(); ++slot) {
        int b = term.arrows[slot];
        const Arrow& ab = q.arrows[static_cast<std::size_t>(b)];
        std::vector<int> prefix(term.arrows.begin(), term.arrows.begin() + static_cast<long>(slot));
        std::vector<int> suffix(term.arrows.begin() + static_cast<long>(slot) + 1, term.arrows.end());
        Matrix pre = path_matrix(m, prefix, rel.src);           // d^m_u x d^m_{s(b)}
        Matrix suf = path_matrix(n, suffix, ab.dst);            // d^n_{e(b)} x d^n_w
        int gcols = n.dims[static_cast<std::size_t>(ab.dst)];
        for (int r = 0; r < ru; ++r)
          for (int c = 0; c < cw; ++c) {
            int er = row0 + r * cw + c;
            for (int k = 0; k < pre.cols(); ++k) {
              if (pre.at(r, k).is_zero()) continue;
              for (int l = 0; l < suf.rows(); ++l) {
                if (suf.at(l, c).is_zero()) continue;
                int col = cs.off[static_cast<std::size_t>(b)] + k * gcols + l;
                cs.sys.at(er, col) = cs.sys.at(er, col) + lam * pre.at(r, k) * suf.at(l, c);
              }
            }
          }
      }
    }
    row0 += ru * cw;
  }
  return cs;
}

std::vector<Matrix> unpack_arrow_tuple(const Representation& m, const Representation& n,
                                       const std::vector<int>& off, const Vec& v) {
  const Quiver& q = m.alg->quiver;
  std::vector<Matrix> g;
  for (std::size_t b = 0; b < q.arrows.size(); ++b) {
    const Arrow& a = q.arrows[b];
    int rows = m.dims[static_cast<std::size_t>(a.src)];
    int cols = n.dims[static_cast<std::size_t>(a.dst)];
    Matrix gb(m.field, rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        gb.at(r, c) = v[static_cast<std::size_t>(off[b] + r * cols + c)];
    g.push_back(std::move(gb));
  }
  return g;
}

// coboundary of a vertex tuple h: (h_{s(b)} N_b - M_b h_{e(b)})_b, flattened
Vec coboundary(const Representation& m, const Representation& n, const std::vector<int>& off,
               const VertexMaps& h) {
  const Quiver& q = m.alg->quiver;
  Vec v(static_cast<std::size_t>(off.back()), Scalar::zero(m.field));
  for (std::size_t b = 0; b < q.arrows.size(); ++b) {
    const Arrow& a = q.arrows[b];
    Matrix d = h[static_cast<std::size_t>(a.src)] * n.mats[b] -
               m.mats[b] * h[static_cast<std::size_t>(a.dst)];
    int cols = d.cols();
    for (int r = 0; r < d.rows(); ++r)
      for (int c = 0; c < cols; ++c)
        v[static_cast<std::size_t>(off[b] + r * cols + c)] = d.at(r, c);
  }
  return v;
}

}  // namespace

ExtCocycleSpace ext_cocycles(const Representation& m, const Representation& n) {
  CocycleSystem cs = cocycle_system(m, n);
  std::vector<Vec> z = kernel_basis(cs.sys);
  ExtCocycleSpace out;
  out.cocycle_dim = static_cast<int>(z.size());

  // span the coboundaries with elementary vertex tuples, then keep the
  // cocycles that still enlarge the span: those represent an Ext basis
  EchelonSpan span(cs.unknowns, m.field);
  const Quiver& q = m.alg->quiver;
  for (int v = 0; v < q.nverts; ++v) {
    int rows = m.dims[static_cast<std::size_t>(v)];
    int cols = n.dims[static_cast<std::size_t>(v)];
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        VertexMaps h;
        for (int w = 0; w < q.nverts; ++w)
          h.emplace_back(m.field, m.dims[static_cast<std::size_t>(w)],
                         n.dims[static_cast<std::size_t>(w)]);
        h[static_cast<std::size_t>(v)].at(r, c) = Scalar::one(m.field);
        span.insert(coboundary(m, n, cs.off, h));
      }
  }
  out.coboundary_rank = span.rank();
  for (const Vec& zv : z)
    if (span.insert(zv)) out.classes.push_back(unpack_arrow_tuple(m, n, cs.off, zv));
  if (static_cast<int>(out.classes.size()) != out.dim())
    throw Error("ext_cocycles: complement dimension mismatch");
  return out;
}

int ext1_dim_direct(const Representation& m, const Representation& n) {
  CocycleSystem cs = cocycle_system(m, n);
  int zdim = cs.unknowns - rank(cs.sys);
  int hdim = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) hdim += m.dims[v] * n.dims[v];
  int cob = hdim - dim_hom(m, n);
  return zdim - cob;
}

int ext1_dim_cb(const Representation& m, const Representation& n) {
  if (m.alg->kind != AlgebraKind::Preprojective)
    throw Error("ext1_dim_cb needs a Dynkin preprojective algebra");
  if (!classify_dynkin(m.alg->base))
    throw Error("ext1_dim_cb needs a Dynkin preprojective algebra");
  if (!same_algebra(*m.alg, *n.alg)) throw Error("ext: algebra mismatch");
  long v = dim_hom(m, n) + dim_hom(n, m) - sym_form(m.alg->base, m.dims, n.dims);
  if (v < 0) throw Error("ext1_dim_cb: negative value on allegedly valid input");
  return static_cast<int>(v);
}

int generic_ext(const RootSystem& rs, const Label& a, const Label& b, const Field& f,
                int samples, std::uint64_t seed) {
  if (samples < 1) throw Error("generic_ext needs at least one sample");
  int best = -1;
  for (int i = 0; i < samples; ++i) {
    GenericSample x = sample_component_point(rs, a, f, splitmix64(seed ^ splitmix64(2 * i)));
    GenericSample y = sample_component_point(rs, b, f, splitmix64(seed ^ splitmix64(2 * i + 1)));
    int e = ext1_dim_cb(x.module, y.module);
    if (best < 0 || e < best) best = e;
    if (best == 0) break;  // min of nonnegatives
  }
  return best;
}

Representation extension_middle_term(const Representation& m, const Representation& n,
                                     const std::vector<Matrix>& g) {
  if (!same_algebra(*m.alg, *n.alg)) throw Error("extension: algebra mismatch");
  if (m.field != n.field) throw Error("extension: field mismatch");
  const Quiver& q = m.alg->quiver;
  if (g.size() != q.arrows.size()) throw Error("extension class has wrong arrow count");
  Representation e;
  e.alg = m.alg;
  e.field = m.field;
  e.dims = add(n.dims, m.dims);
  for (std::size_t b = 0; b < q.arrows.size(); ++b) {
    const Arrow& a = q.arrows[b];
    int ns = n.dims[static_cast<std::size_t>(a.src)];
    int ne = n.dims[static_cast<std::size_t>(a.dst)];
    int ms = m.dims[static_cast<std::size_t>(a.src)];
    int me = m.dims[static_cast<std::size_t>(a.dst)];
    if (g[b].rows() != ms || g[b].cols() != ne)
      throw Error("extension class has wrong shape on arrow " + a.id);
    Matrix blk(m.field, ns + ms, ne + me);
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < ne; ++j) blk.at(i, j) = n.mats[b].at(i, j);
    for (int i = 0; i < ms; ++i)
      for (int j = 0; j < ne; ++j) blk.at(ns + i, j) = g[b].at(i, j);
    for (int i = 0; i < ms; ++i)
      for (int j = 0; j < me; ++j) blk.at(ns + i, ne + j) = m.mats[b].at(i, j);
    e.mats.push_back(std::move(blk));
  }
  if (!check_relations(e)) throw Error("extension class is not a cocycle");
  return e;
}

namespace {

std::vector<Matrix> combine_classes(const ExtCocycleSpace& sp, const Field& f,
                                    const std::vector<mpq_class>& coeffs) {
  std::vector<Matrix> g;
  for (std::size_t b = 0; b < sp.classes[0].size(); ++b) {
    Matrix acc(f, sp.classes[0][b].rows(), sp.classes[0][b].cols());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      Scalar c = f.kind == FieldKind::Rationals
                     ? Scalar::from_mpq(coeffs[j])
                     : Scalar::from_mpz(f, coeffs[j].get_num()) /
                           Scalar::from_mpz(f, coeffs[j].get_den());
      acc = acc + sp.classes[j][b].scaled(c);
    }
    g.push_back(std::move(acc));
  }
  return g;
}

// Exact degeneration points of the pencil g(t) = e_0 + t e_1: values of t
// where dim End of the middle term jumps above its generic value.  The
// endomorphism system of E_t has entries affine in t, so every t with a rank
// drop is a root of the interpolated determinant of a generically invertible
// maximal minor.
std::vector<mpq_class> pencil_degeneration_points(const RootSystem& rs, const Representation& m,
                                                  const ExtCocycleSpace& sp) {
  const Field f = m.field;
  auto middle_at = [&](const Scalar& t) {
    std::vector<mpq_class> c(2);
    c[0] = 1;
    c[1] = f.kind == FieldKind::Rationals ? t.rat() : mpq_class(static_cast<unsigned long>(t.residue()));
    return extension_middle_term(m, m, combine_classes(sp, f, c));
  };
  auto endo_system = [&](const Scalar& t) {
    Representation e = middle_at(t);
    // reuse the hom machinery by extracting the raw system via cocycles of
    // the identity... simpler: rebuild the intertwiner system directly
    const Quiver& q = e.alg->quiver;
    std::vector<int> off(e.dims.size() + 1, 0);
    for (std::size_t v = 0; v < e.dims.size(); ++v) off[v + 1] = off[v] + e.dims[v] * e.dims[v];
    int eqs = 0;
    for (const auto& a : q.arrows)
      eqs += e.dims[static_cast<std::size_t>(a.src)] * e.dims[static_cast<std::size_t>(a.dst)];
    Matrix sys(f, eqs, off.back());
    int row = 0;
    for (std::size_t b = 0; b < q.arrows.size(); ++b) {
      const Arrow& a = q.arrows[b];
      int ds = e.dims[static_cast<std::size_t>(a.src)];
      int de = e.dims[static_cast<std::size_t>(a.dst)];
      const Matrix& M = e.mats[b];
      for (int r = 0; r < ds; ++r)
        for (int c = 0; c < de; ++c) {
          int er = row + r * de + c;
          for (int k = 0; k < de; ++k)
            if (!M.at(r, k).is_zero())
              sys.at(er, off[static_cast<std::size_t>(a.dst)] + k * de + c) =
                  sys.at(er, off[static_cast<std::size_t>(a.dst)] + k * de + c) + M.at(r, k);
          for (int k = 0; k < ds; ++k)
            if (!M.at(k, c).is_zero())
              sys.at(er, off[static_cast<std::size_t>(a.src)] + r * ds + k) =
                  sys.at(er, off[static_cast<std::size_t>(a.src)] + r * ds + k) - M.at(k, c);
        }
      row += ds * de;
    }
    return sys;
  };
  (void)rs;
  // generic rank probe
  const long probes[] = {101, -87, 113};
  int r0 = -1;
  Scalar t0 = Scalar::zero(f);
  for (long pv : probes) {
    Scalar t = Scalar::from_int(f, pv);
    int r = rank(endo_system(t));
    if (r > r0) {
      r0 = r;
      t0 = t;
    }
  }
  if (r0 <= 0) return {};
  Matrix s0 = endo_system(t0);
  std::vector<int> cols = rref(s0).pivot_cols;
  std::vector<int> rows = rref(s0.transpose()).pivot_cols;
  // det of the generically invertible minor, interpolated in t
  std::vector<std::pair<Scalar, Scalar>> pts;
  for (int i = 0; i <= r0; ++i) {
    Scalar t = Scalar::from_int(f, i);
    Matrix s = endo_system(t);
    Matrix minor(f, r0, r0);
    for (int r = 0; r < r0; ++r)
      for (int c = 0; c < r0; ++c) minor.at(r, c) = s.at(rows[static_cast<std::size_t>(r)],
                                                         cols[static_cast<std::size_t>(c)]);
    pts.emplace_back(t, determinant(minor));
  }
  Poly p = lagrange_interpolate(f, pts);
  std::vector<mpq_class> out;
  if (p.is_zero()) return out;  // cannot happen: p(t0) != 0
  for (const Scalar& root : rational_roots(p))
    out.push_back(f.kind == FieldKind::Rationals
                      ? root.rat()
                      : mpq_class(static_cast<unsigned long>(root.residue())));
  return out;
}

}  // namespace

std::vector<CensusEntry> self_extension_census(const RootSystem& rs, const Representation& m,
                                               std::uint64_t seed) {
  ExtCocycleSpace sp = ext_cocycles(m, m);
  int r = sp.dim();
  if (r == 0) return {};
  if (r > 3) throw Error("self_extension_census supports Ext dimension up to 3");
  const Field f = m.field;
  std::vector<std::vector<mpq_class>> lines;
  if (r == 1) {
    lines.push_back({mpq_class(1)});
  } else if (r == 2) {
    const long grid[] = {-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6};
    for (long t : grid) lines.push_back({mpq_class(1), mpq_class(t)});
    lines.push_back({mpq_class(0), mpq_class(1)});
    for (const mpq_class& t : pencil_degeneration_points(rs, m, sp)) {
      std::vector<mpq_class> cand{mpq_class(1), t};
      if (std::find(lines.begin(), lines.end(), cand) == lines.end()) lines.push_back(cand);
    }
  } else {
    for (long s = -2; s <= 2; ++s)
      for (long t = -2; t <= 2; ++t) lines.push_back({mpq_class(1), mpq_class(s), mpq_class(t)});
    for (long u = -2; u <= 2; ++u) lines.push_back({mpq_class(0), mpq_class(1), mpq_class(u)});
    lines.push_back({mpq_class(0), mpq_class(0), mpq_class(1)});
  }
  std::vector<CensusEntry> out;
  std::uint64_t idx = 0;
  for (const auto& coeffs : lines) {
    Representation e = extension_middle_term(m, m, combine_classes(sp, f, coeffs));
    Rng rng = Rng::derive(seed, 0xce5005 + idx++);
    CensusEntry entry;
    entry.cls = coeffs;
    for (const Representation& part : krs_decompose(e, rng)) {
      entry.summand_dims.push_back(part.dims);
      Representation fwd = part.alg->kind == AlgebraKind::Preprojective ? forward_part(part) : part;
      Rng lrng = Rng::derive(seed, 0x1abe1 + idx);
      entry.summand_labels.push_back(gabriel_label(rs, fwd, lrng));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

bool is_projective(const Representation& m) {
  if (m.alg->kind != AlgebraKind::Preprojective)
    throw Error("is_projective is defined over the preprojective algebra here");
  for (int v = 0; v < m.alg->quiver.nverts; ++v)
    if (ext1_dim_direct(m, simple_module(m.alg, m.field, v)) != 0) return false;
  return true;
}

}  // namespace qpa
