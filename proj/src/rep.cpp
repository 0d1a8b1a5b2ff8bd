#include "rep.hpp"

#include <algorithm>

#include "poly.hpp"

namespace qpa {

Representation zero_representation(AlgebraPtr alg, const Field& f, const DimVector& dims) {
  if (static_cast<int>(dims.size()) != alg->quiver.nverts)
    throw Error("dimension vector length mismatch");
  Representation m;
  m.alg = std::move(alg);
  m.field = f;
  m.dims = dims;
  for (const auto& a : m.alg->quiver.arrows)
    m.mats.emplace_back(f, dims[static_cast<std::size_t>(a.src)],
                        dims[static_cast<std::size_t>(a.dst)]);
  return m;
}

Representation simple_module(AlgebraPtr alg, const Field& f, int vertex) {
  DimVector d(static_cast<std::size_t>(alg->quiver.nverts), 0);
  d[static_cast<std::size_t>(vertex)] = 1;
  return zero_representation(std::move(alg), f, d);
}

void validate_shapes(const Representation& m) {
  const Quiver& q = m.alg->quiver;
  if (static_cast<int>(m.dims.size()) != q.nverts) throw Error("dims length mismatch");
  if (m.mats.size() != q.arrows.size()) throw Error("arrow matrix count mismatch");
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const Arrow& a = q.arrows[i];
    if (m.mats[i].rows() != m.dims[static_cast<std::size_t>(a.src)] ||
        m.mats[i].cols() != m.dims[static_cast<std::size_t>(a.dst)])
      throw Error("matrix shape mismatch on arrow " + a.id);
    if (m.mats[i].field() != m.field) throw Error("matrix field mismatch on arrow " + a.id);
  }
}

Matrix path_matrix(const Representation& m, const std::vector<int>& arrows, int start_vertex) {
  Matrix acc = Matrix::identity(m.field, m.dims[static_cast<std::size_t>(start_vertex)]);
  for (int ai : arrows) acc = acc * m.mats[static_cast<std::size_t>(ai)];
  return acc;
}

bool check_relations(const Representation& m) {
  for (const Relation& rel : m.alg->relations) {
    Matrix acc(m.field, m.dims[static_cast<std::size_t>(rel.src)],
               m.dims[static_cast<std::size_t>(rel.dst)]);
    for (const RelationTerm& t : rel.terms) {
      Scalar c = m.field.kind == FieldKind::Rationals
                     ? Scalar::from_mpq(t.coeff)
                     : Scalar::from_mpz(m.field, t.coeff.get_num()) /
                           Scalar::from_mpz(m.field, t.coeff.get_den());
      acc = acc + path_matrix(m, t.arrows, rel.src).scaled(c);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

namespace {

// offset of the f_v block inside the stacked unknown vector
std::vector<int> block_offsets(const DimVector& md, const DimVector& nd) {
  std::vector<int> off(md.size() + 1, 0);
  for (std::size_t v = 0; v < md.size(); ++v)
    off[v + 1] = off[v] + md[v] * nd[v];
  return off;
}

}  // namespace

HomBasis hom_basis(const Representation& m, const Representation& n) {
  if (!same_algebra(*m.alg, *n.alg)) throw Error("hom_basis: algebra mismatch");
  if (m.field != n.field) throw Error("hom_basis: field mismatch");
  const Quiver& q = m.alg->quiver;
  auto off = block_offsets(m.dims, n.dims);
  int unknowns = off.back();
  int eqs = 0;
  for (const auto& a : q.arrows)
    eqs += m.dims[static_cast<std::size_t>(a.src)] * n.dims[static_cast<std::size_t>(a.dst)];
  Matrix sys(m.field, eqs, unknowns);
  int row = 0;
  for (std::size_t b = 0; b < q.arrows.size(); ++b) {
    const Arrow& a = q.arrows[b];
    int ms = m.dims[static_cast<std::size_t>(a.src)];
    int ne = n.dims[static_cast<std::size_t>(a.dst)];
    int me = m.dims[static_cast<std::size_t>(a.dst)];
    int ns = n.dims[static_cast<std::size_t>(a.src)];
    const Matrix& M = m.mats[b];
    const Matrix& N = n.mats[b];
    // equation (r, c): sum_k M[r,k] f_e[k,c] - sum_k f_s[r,k] N[k,c] = 0
    for (int r = 0; r < ms; ++r)
      for (int c = 0; c < ne; ++c) {
        int er = row + r * ne + c;
        for (int k = 0; k < me; ++k)
          if (!M.at(r, k).is_zero())
            sys.at(er, off[static_cast<std::size_t>(a.dst)] + k * ne + c) =
                sys.at(er, off[static_cast<std::size_t>(a.dst)] + k * ne + c) + M.at(r, k);
        for (int k = 0; k < ns; ++k)
          if (!N.at(k, c).is_zero())
            sys.at(er, off[static_cast<std::size_t>(a.src)] + r * ns + k) =
                sys.at(er, off[static_cast<std::size_t>(a.src)] + r * ns + k) - N.at(k, c);
      }
    row += ms * ne;
  }
  HomBasis hb;
  hb.src_dims = m.dims;
  hb.dst_dims = n.dims;
  for (const Vec& v : kernel_basis(sys)) {
    VertexMaps f;
    for (int vert = 0; vert < q.nverts; ++vert) {
      int rows = m.dims[static_cast<std::size_t>(vert)];
      int cols = n.dims[static_cast<std::size_t>(vert)];
      Matrix fm(m.field, rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          fm.at(r, c) = v[static_cast<std::size_t>(off[static_cast<std::size_t>(vert)] + r * cols + c)];
      f.push_back(std::move(fm));
    }
    hb.basis.push_back(std::move(f));
  }
  return hb;
}

int dim_hom(const Representation& m, const Representation& n) {
  return hom_basis(m, n).dim();
}

VertexMaps hom_combination(const HomBasis& h, const std::vector<mpq_class>& coeffs) {
  if (coeffs.size() != h.basis.size()) throw Error("hom_combination coefficient count mismatch");
  if (h.basis.empty()) throw Error("hom_combination of empty basis");
  const Field f = h.basis[0][0].field();
  VertexMaps acc;
  for (std::size_t v = 0; v < h.basis[0].size(); ++v)
    acc.emplace_back(f, h.basis[0][v].rows(), h.basis[0][v].cols());
  for (std::size_t j = 0; j < h.basis.size(); ++j) {
    Scalar c = f.kind == FieldKind::Rationals
                   ? Scalar::from_mpq(coeffs[j])
                   : Scalar::from_mpz(f, coeffs[j].get_num()) / Scalar::from_mpz(f, coeffs[j].get_den());
    if (c.is_zero()) continue;
    for (std::size_t v = 0; v < acc.size(); ++v)
      acc[v] = acc[v] + h.basis[j][v].scaled(c);
  }
  return acc;
}

VertexMaps random_hom(const HomBasis& h, Rng& rng, long lo, long hi) {
  std::vector<mpq_class> coeffs(h.basis.size());
  for (auto& c : coeffs) c = mpq_class(rng.uniform(lo, hi));
  return hom_combination(h, coeffs);
}

Representation direct_sum(const Representation& m, const Representation& n) {
  if (!same_algebra(*m.alg, *n.alg)) throw Error("direct_sum: algebra mismatch");
  if (m.field != n.field) throw Error("direct_sum: field mismatch");
  Representation s;
  s.alg = m.alg;
  s.field = m.field;
  s.dims = add(m.dims, n.dims);
  const Quiver& q = m.alg->quiver;
  for (std::size_t b = 0; b < q.arrows.size(); ++b) {
    const Arrow& a = q.arrows[b];
    int rs = s.dims[static_cast<std::size_t>(a.src)];
    int cs = s.dims[static_cast<std::size_t>(a.dst)];
    Matrix blk(m.field, rs, cs);
    const Matrix& A = m.mats[b];
    const Matrix& B = n.mats[b];
    for (int i = 0; i < A.rows(); ++i)
      for (int j = 0; j < A.cols(); ++j) blk.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows(); ++i)
      for (int j = 0; j < B.cols(); ++j) blk.at(A.rows() + i, A.cols() + j) = B.at(i, j);
    s.mats.push_back(std::move(blk));
  }
  return s;
}

Representation forward_part(const Representation& m) {
  if (m.alg->kind != AlgebraKind::Preprojective)
    throw Error("forward_part: module is not over a preprojective algebra");
  Representation f;
  f.alg = path_algebra(m.alg->base);
  f.field = m.field;
  f.dims = m.dims;
  f.mats.assign(m.mats.begin(), m.mats.begin() + m.alg->n_forward);
  return f;
}

namespace {

int trace_form_radical_dim(const HomBasis& endo, const Field& f) {
  int n = endo.dim();
  Matrix gram(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar t = Scalar::zero(f);
      for (std::size_t v = 0; v < endo.basis[static_cast<std::size_t>(i)].size(); ++v) {
        const Matrix& A = endo.basis[static_cast<std::size_t>(i)][v];
        const Matrix& B = endo.basis[static_cast<std::size_t>(j)][v];
        for (int r = 0; r < A.rows(); ++r)
          for (int c = 0; c < A.cols(); ++c)
            if (!A.at(r, c).is_zero() && !B.at(c, r).is_zero())
              t = t + A.at(r, c) * B.at(c, r);
      }
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  return n - rank(gram);
}

}  // namespace

int endo_radical_dim(const Representation& m) {
  if (m.field.kind != FieldKind::Rationals)
    throw Error("endo_radical_dim is certified over Q only");
  return trace_form_radical_dim(hom_basis(m, m), m.field);
}

bool is_indecomposable(const Representation& m) {
  if (m.total_dim() == 0) throw Error("is_indecomposable: zero module");
  HomBasis endo = hom_basis(m, m);
  if (endo.dim() == 1) return true;
  return endo.dim() - trace_form_radical_dim(endo, m.field) == 1;
}

Representation restrict_to_subspaces(const Representation& m,
                                     const std::vector<Matrix>& bases) {
  const Quiver& q = m.alg->quiver;
  Representation r;
  r.alg = m.alg;
  r.field = m.field;
  r.dims.resize(static_cast<std::size_t>(q.nverts));
  for (int v = 0; v < q.nverts; ++v)
    r.dims[static_cast<std::size_t>(v)] = bases[static_cast<std::size_t>(v)].rows();
  for (std::size_t b = 0; b < q.arrows.size(); ++b) {
    const Arrow& a = q.arrows[b];
    const Matrix& Bs = bases[static_cast<std::size_t>(a.src)];
    const Matrix& Be = bases[static_cast<std::size_t>(a.dst)];
    Matrix image = Bs * m.mats[b];  // rows must lie in rowspan(Be)
    Matrix BeT = Be.transpose();
    Matrix mb(m.field, Bs.rows(), Be.rows());
    for (int i = 0; i < image.rows(); ++i) {
      Vec rhs(static_cast<std::size_t>(image.cols()), Scalar::zero(m.field));
      for (int j = 0; j < image.cols(); ++j) rhs[static_cast<std::size_t>(j)] = image.at(i, j);
      auto sol = solve(BeT, rhs);
      if (!sol) throw Error("restriction target is not arrow-closed");
      for (int j = 0; j < Be.rows(); ++j) mb.at(i, j) = (*sol)[static_cast<std::size_t>(j)];
    }
    r.mats.push_back(std::move(mb));
  }
  return r;
}

namespace {

// left kernel rows of a square matrix, stacked as a basis matrix
Matrix left_kernel_rows(const Matrix& a) {
  auto kb = kernel_basis(a.transpose());
  Matrix rows(a.field(), static_cast<int>(kb.size()), a.rows());
  for (std::size_t i = 0; i < kb.size(); ++i)
    for (int j = 0; j < a.rows(); ++j) rows.at(static_cast<int>(i), j) = kb[i][static_cast<std::size_t>(j)];
  return rows;
}

// try to split m along the coprime factors of the characteristic polynomial
// of the endomorphism phi; empty result means "no split from this phi"
std::vector<Representation> fitting_split(const Representation& m, const VertexMaps& phi) {
  Poly chi = Poly::constant(Scalar::one(m.field));
  for (const Matrix& fv : phi) chi = chi * charpoly(fv);
  std::vector<Poly> factors = coprime_split(chi);
  if (factors.size() < 2) return {};
  std::vector<Representation> parts;
  DimVector seen(m.dims.size(), 0);
  for (const Poly& f : factors) {
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < phi.size(); ++v)
      bases.push_back(left_kernel_rows(f.eval(phi[v])));
    Representation piece = restrict_to_subspaces(m, bases);
    for (std::size_t v = 0; v < seen.size(); ++v) seen[v] += piece.dims[v];
    if (piece.total_dim() > 0) parts.push_back(std::move(piece));
  }
  if (seen != m.dims) throw Error("fitting split lost dimensions");
  if (parts.size() < 2) return {};
  return parts;
}

}  // namespace

std::vector<Representation> krs_decompose(const Representation& m, Rng& rng) {
  std::vector<Representation> result;
  std::vector<Representation> stack;
  if (m.total_dim() > 0) stack.push_back(m);
  while (!stack.empty()) {
    Representation x = std::move(stack.back());
    stack.pop_back();
    HomBasis endo = hom_basis(x, x);
    if (endo.dim() == 1 ||
        endo.dim() - trace_form_radical_dim(endo, x.field) == 1) {
      result.push_back(std::move(x));
      continue;
    }
    // candidate endomorphisms: basis elements first (projection-like maps
    // split isotypic pieces immediately), then random integer combinations
    bool split = false;
    for (int cand = 0; cand < endo.dim() + 20 && !split; ++cand) {
      VertexMaps phi;
      if (cand < endo.dim()) {
        phi = endo.basis[static_cast<std::size_t>(cand)];
      } else {
        phi = random_hom(endo, rng, -9, 9);
      }
      auto parts = fitting_split(x, phi);
      if (!parts.empty()) {
        for (auto& p : parts) stack.push_back(std::move(p));
        split = true;
      }
    }
    if (!split)
      throw Error("krs_decompose: retry budget exhausted on a module certified decomposable");
  }
  return result;
}

IsoResult is_isomorphic(const Representation& m, const Representation& n, Rng& rng, int trials) {
  if (!same_algebra(*m.alg, *n.alg)) throw Error("is_isomorphic: algebra mismatch");
  if (m.field != n.field) throw Error("is_isomorphic: field mismatch");
  IsoResult res;
  if (m.dims != n.dims) return res;
  if (m.total_dim() == 0) {
    res.kind = IsoResult::Kind::Isomorphic;
    res.witness = VertexMaps{};
    return res;
  }
  HomBasis fwd = hom_basis(m, n);
  HomBasis bwd = hom_basis(n, m);
  if (fwd.dim() != bwd.dim() || fwd.dim() == 0) return res;
  for (int t = 0; t < trials; ++t) {
    VertexMaps f = random_hom(fwd, rng, -999, 999);
    bool invertible = true;
    for (const Matrix& fv : f)
      if (fv.rows() != fv.cols() || rank(fv) != fv.rows()) {
        invertible = false;
        break;
      }
    if (invertible) {
      res.kind = IsoResult::Kind::Isomorphic;
      res.witness = std::move(f);
      return res;
    }
  }
  res.kind = IsoResult::Kind::NoWitness;
  return res;
}

long orbit_dim(const Representation& m) { return gl_dim(m.dims) - dim_hom(m, m); }

}  // namespace qpa
