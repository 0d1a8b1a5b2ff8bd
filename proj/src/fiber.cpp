#include "fiber.hpp"

namespace qpa {

FiberSpace fiber_basis(const Representation& forward) {
  if (forward.alg->kind != AlgebraKind::Path)
    throw Error("fiber_basis: forward module must live over the path algebra");
  const Quiver& q = forward.alg->quiver;
  if (!classify_dynkin(q)) throw Error("fiber_basis: base quiver must be Dynkin");
  const Field& f = forward.field;
  const DimVector& d = forward.dims;
  int narr = static_cast<int>(q.arrows.size());

  // unknown layout: entries of the reversed matrix of arrow a, shape
  // d_{dst(a)} x d_{src(a)}
  std::vector<int> off(static_cast<std::size_t>(narr) + 1, 0);
  for (int a = 0; a < narr; ++a) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
    off[static_cast<std::size_t>(a) + 1] =
        off[static_cast<std::size_t>(a)] +
        d[static_cast<std::size_t>(ar.dst)] * d[static_cast<std::size_t>(ar.src)];
  }
  int unknowns = off.back();
  int eqs = 0;
  for (int v = 0; v < q.nverts; ++v)
    eqs += d[static_cast<std::size_t>(v)] * d[static_cast<std::size_t>(v)];
  Matrix sys(f, eqs, unknowns);
  int row0 = 0;
  for (int v = 0; v < q.nverts; ++v) {
    int dv = d[static_cast<std::size_t>(v)];
    // mesh relation at v: sum_{src(a)=v} M_a G_a - sum_{dst(a)=v} G_a M_a = 0
    for (int a = 0; a < narr; ++a) {
      const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
      const Matrix& M = forward.mats[static_cast<std::size_t>(a)];
      int rows = d[static_cast<std::size_t>(ar.dst)];
      int cols = d[static_cast<std::size_t>(ar.src)];
      if (ar.src == v) {
        // entry (r,c) of M_a G_a: sum_k M[r,k] G[k,c]
        for (int r = 0; r < dv; ++r)
          for (int c = 0; c < dv; ++c)
            for (int k = 0; k < rows; ++k)
              if (!M.at(r, k).is_zero()) {
                int col = off[static_cast<std::size_t>(a)] + k * cols + c;
                sys.at(row0 + r * dv + c, col) = sys.at(row0 + r * dv + c, col) + M.at(r, k);
              }
      }
      if (ar.dst == v) {
        // entry (r,c) of -G_a M_a: -sum_k G[r,k] M[k,c]
        for (int r = 0; r < dv; ++r)
          for (int c = 0; c < dv; ++c)
            for (int k = 0; k < cols; ++k)
              if (!M.at(k, c).is_zero()) {
                int col = off[static_cast<std::size_t>(a)] + r * cols + k;
                sys.at(row0 + r * dv + c, col) = sys.at(row0 + r * dv + c, col) - M.at(k, c);
              }
      }
    }
    row0 += dv * dv;
  }

  FiberSpace fs;
  fs.base = forward;
  for (const Vec& x : kernel_basis(sys)) {
    std::vector<Matrix> tup;
    for (int a = 0; a < narr; ++a) {
      const Arrow& ar = q.arrows[static_cast<std::size_t>(a)];
      int rows = d[static_cast<std::size_t>(ar.dst)];
      int cols = d[static_cast<std::size_t>(ar.src)];
      Matrix g(f, rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          g.at(r, c) = x[static_cast<std::size_t>(off[static_cast<std::size_t>(a)] + r * cols + c)];
      tup.push_back(std::move(g));
    }
    fs.basis.push_back(std::move(tup));
  }
  return fs;
}

Representation attach_fiber_point(const FiberSpace& fs, const std::vector<mpq_class>& coeffs) {
  if (coeffs.size() != fs.basis.size()) throw Error("fiber coefficient count mismatch");
  const Representation& fwd = fs.base;
  const Field& f = fwd.field;
  Representation m;
  m.alg = preprojective_algebra(fwd.alg->quiver);
  m.field = f;
  m.dims = fwd.dims;
  m.mats = fwd.mats;
  int narr = static_cast<int>(fwd.alg->quiver.arrows.size());
  for (int a = 0; a < narr; ++a) {
    const Arrow& ar = fwd.alg->quiver.arrows[static_cast<std::size_t>(a)];
    Matrix g(f, fwd.dims[static_cast<std::size_t>(ar.dst)], fwd.dims[static_cast<std::size_t>(ar.src)]);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      Scalar c = f.kind == FieldKind::Rationals
                     ? Scalar::from_mpq(coeffs[j])
                     : Scalar::from_mpz(f, coeffs[j].get_num()) / Scalar::from_mpz(f, coeffs[j].get_den());
      g = g + fs.basis[j][static_cast<std::size_t>(a)].scaled(c);
    }
    m.mats.push_back(std::move(g));
  }
  validate_shapes(m);
  if (!check_relations(m)) throw Error("fiber point violates the mesh relations");
  return m;
}

GenericSample sample_component_point(const RootSystem& rs, const Label& a, const Field& f,
                                     std::uint64_t seed) {
  Representation fwd = build_module(rs, a, f);
  FiberSpace fs = fiber_basis(fwd);
  Rng rng = Rng::derive(seed, 0xf1be);
  std::vector<mpq_class> coeffs(fs.basis.size());
  for (auto& c : coeffs) {
    if (f.kind == FieldKind::Rationals)
      c = mpq_class(rng.uniform(-20, 20));
    else
      c = mpq_class(static_cast<unsigned long>(rng.below(f.p)));
  }
  GenericSample gs;
  gs.module = attach_fiber_point(fs, coeffs);
  gs.label = a;
  gs.seed = seed;
  return gs;
}

long component_dim(const RootSystem& rs, const Label& a) {
  return rep_space_dim(rs.quiver, label_dim_vector(rs, a));
}

MuResult mu_g(const RootSystem& rs, const Label& a, const Field& f, int samples,
              std::uint64_t seed) {
  if (samples < 1) throw Error("mu_g needs at least one sample");
  MuResult r;
  r.comp_dim = component_dim(rs, a);
  r.samples = samples;
  r.seed = seed;
  r.max_orbit = 0;
  for (int i = 0; i < samples; ++i) {
    GenericSample gs = sample_component_point(rs, a, f, splitmix64(seed ^ splitmix64(i)));
    long od = orbit_dim(gs.module);
    if (i == 0 || od > r.max_orbit) r.max_orbit = od;
  }
  r.mu = r.comp_dim - r.max_orbit;
  return r;
}

bool component_is_indecomposable(const RootSystem& rs, const Label& a, const Field& f,
                                 int samples, std::uint64_t seed) {
  if (a.is_zero()) throw Error("component_is_indecomposable: zero label");
  if (samples < 1) throw Error("component_is_indecomposable needs at least one sample");
  std::optional<Representation> best;
  int best_end = 0;
  for (int i = 0; i < samples; ++i) {
    GenericSample gs = sample_component_point(rs, a, f, splitmix64(seed ^ splitmix64(i)));
    int e = dim_hom(gs.module, gs.module);
    if (!best || e < best_end) {
      best_end = e;
      best = std::move(gs.module);
    }
  }
  return is_indecomposable(*best);
}

}  // namespace qpa
