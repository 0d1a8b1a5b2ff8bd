#include "roots.hpp"

#include <algorithm>
#include <set>

namespace qpa {

int RootSystem::index_of(const DimVector& d) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == d) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(const Quiver& q) {
  std::vector<std::vector<int>> c(static_cast<std::size_t>(q.nverts),
                                  std::vector<int>(static_cast<std::size_t>(q.nverts), 0));
  for (int i = 0; i < q.nverts; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  for (const auto& a : q.arrows) {
    c[static_cast<std::size_t>(a.src)][static_cast<std::size_t>(a.dst)] -= 1;
    c[static_cast<std::size_t>(a.dst)][static_cast<std::size_t>(a.src)] -= 1;
  }
  return c;
}

DimVector reflect(const std::vector<std::vector<int>>& cartan, int i, const DimVector& v) {
  long pairing = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    pairing += static_cast<long>(cartan[static_cast<std::size_t>(i)][j]) * v[j];
  DimVector w = v;
  w[static_cast<std::size_t>(i)] -= static_cast<int>(pairing);
  return w;
}

bool is_positive(const DimVector& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

}  // namespace

RootSystem positive_roots(const Quiver& q) {
  auto cls = classify_dynkin(q);
  if (!cls) throw Error("positive_roots: quiver is not Dynkin");
  auto cartan = cartan_matrix(q);
  std::set<DimVector> found;
  std::vector<DimVector> frontier;
  for (int i = 0; i < q.nverts; ++i) {
    DimVector e(static_cast<std::size_t>(q.nverts), 0);
    e[static_cast<std::size_t>(i)] = 1;
    found.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<DimVector> next;
    for (const DimVector& v : frontier)
      for (int i = 0; i < q.nverts; ++i) {
        DimVector w = reflect(cartan, i, v);
        if (is_positive(w) && found.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  RootSystem rs;
  rs.quiver = q;
  if (cls->family == 'A' && cls->standard_chain) {
    // interval order: [i,j] sorted by start, then end
    for (int i = 0; i < q.nverts; ++i)
      for (int j = i; j < q.nverts; ++j) {
        DimVector d(static_cast<std::size_t>(q.nverts), 0);
        for (int l = i; l <= j; ++l) d[static_cast<std::size_t>(l)] = 1;
        rs.roots.push_back(std::move(d));
      }
    if (rs.roots.size() != found.size())
      throw Error("positive_roots: interval enumeration disagrees with reflection closure");
    for (const auto& r : rs.roots)
      if (!found.count(r)) throw Error("positive_roots: interval is not a root");
  } else {
    rs.roots.assign(found.begin(), found.end());
    std::sort(rs.roots.begin(), rs.roots.end(), [](const DimVector& a, const DimVector& b) {
      long ta = total(a), tb = total(b);
      if (ta != tb) return ta < tb;
      return a < b;
    });
  }
  return rs;
}

bool Label::is_zero() const {
  for (int x : counts)
    if (x != 0) return false;
  return true;
}

long Label::coord_sum() const {
  long s = 0;
  for (int x : counts) s += x;
  return s;
}

Label zero_label(const RootSystem& rs) {
  return Label{std::vector<int>(static_cast<std::size_t>(rs.count()), 0)};
}

Label unit_label(const RootSystem& rs, int root_index) {
  Label a = zero_label(rs);
  a.counts.at(static_cast<std::size_t>(root_index)) = 1;
  return a;
}

Label add(const Label& a, const Label& b) {
  if (a.counts.size() != b.counts.size()) throw Error("label length mismatch");
  Label r = a;
  for (std::size_t i = 0; i < r.counts.size(); ++i) r.counts[i] += b.counts[i];
  return r;
}

DimVector label_dim_vector(const RootSystem& rs, const Label& a) {
  if (static_cast<int>(a.counts.size()) != rs.count()) throw Error("label length mismatch");
  DimVector d(static_cast<std::size_t>(rs.quiver.nverts), 0);
  for (std::size_t i = 0; i < a.counts.size(); ++i)
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += a.counts[i] * rs.roots[i][v];
  return d;
}

namespace {

// order with every vertex a sink of the quiver reflected at all earlier
// vertices; for acyclic quivers: repeatedly remove a sink of what remains
std::vector<int> admissible_sink_order(const Quiver& q) {
  std::vector<int> order;
  std::vector<bool> removed(static_cast<std::size_t>(q.nverts), false);
  for (int step = 0; step < q.nverts; ++step) {
    int pick = -1;
    for (int v = 0; v < q.nverts && pick < 0; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      bool sink = true;
      for (const auto& a : q.arrows)
        if (a.src == v && !removed[static_cast<std::size_t>(a.dst)]) {
          sink = false;
          break;
        }
      if (sink) pick = v;
    }
    if (pick < 0) throw Error("admissible order requires an acyclic quiver");
    removed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
  }
  return order;
}

Quiver reflect_quiver(const Quiver& q, int v) {
  Quiver r = q;
  r.name.clear();
  for (auto& a : r.arrows)
    if (a.src == v || a.dst == v) std::swap(a.src, a.dst);
  return r;
}

// Inverse reflection functor at a source i of q: quotient by the image of
// the total out-map.  Returns the module over the quiver reflected at i.
Representation bgp_minus(const Representation& n, int i) {
  const Quiver& q = n.alg->quiver;
  std::vector<int> out;
  for (std::size_t b = 0; b < q.arrows.size(); ++b)
    if (q.arrows[b].src == i) out.push_back(static_cast<int>(b));
  std::vector<Matrix> blocks;
  for (int b : out) blocks.push_back(n.mats[static_cast<std::size_t>(b)]);
  Matrix c = blocks.empty() ? Matrix(n.field, n.dims[static_cast<std::size_t>(i)], 0)
                            : Matrix::hstack(blocks);
  auto kb = kernel_basis(c);  // columns of the quotient map
  int cdim = static_cast<int>(kb.size());
  Matrix p(n.field, c.cols(), cdim);
  for (int j = 0; j < cdim; ++j)
    for (int r = 0; r < c.cols(); ++r) p.at(r, j) = kb[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];

  Representation m;
  m.alg = path_algebra(reflect_quiver(q, i));
  m.field = n.field;
  m.dims = n.dims;
  m.dims[static_cast<std::size_t>(i)] = cdim;
  m.mats.resize(q.arrows.size(), Matrix());
  int offset = 0;
  std::vector<int> block_start(out.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    block_start[k] = offset;
    offset += n.mats[static_cast<std::size_t>(out[k])].cols();
  }
  for (std::size_t b = 0; b < q.arrows.size(); ++b) {
    const Arrow& a = q.arrows[b];
    if (a.src != i) {
      // untouched arrow (may end at i only if i had in-arrows; i is a source,
      // so only arrows away from i change)
      m.mats[b] = n.mats[b];
      continue;
    }
    // reversed arrow t -> i: rows of p belonging to component t
    auto k = static_cast<std::size_t>(
        std::find(out.begin(), out.end(), static_cast<int>(b)) - out.begin());
    int t = a.dst;
    int dt = n.dims[static_cast<std::size_t>(t)];
    Matrix mb(n.field, dt, cdim);
    for (int r = 0; r < dt; ++r)
      for (int j = 0; j < cdim; ++j) mb.at(r, j) = p.at(block_start[k] + r, j);
    m.mats[b] = std::move(mb);
  }
  validate_shapes(m);
  return m;
}

Representation bgp_construct(const Quiver& q, const DimVector& root, const Field& f) {
  auto cartan = cartan_matrix(q);
  std::vector<int> order = admissible_sink_order(q);
  int n = q.nverts;
  std::vector<int> steps;       // reflected vertex per step
  std::vector<Quiver> quivers;  // quivers[j] = orientation before step j
  Quiver cur = q;
  DimVector v = root;
  int stop_vertex = -1;
  for (int k = 0; k < 64 * n * n + 64; ++k) {
    int i = order[static_cast<std::size_t>(k % n)];
    DimVector w = reflect(cartan, i, v);
    if (!is_positive(w)) {
      stop_vertex = i;  // v == e_i
      break;
    }
    steps.push_back(i);
    quivers.push_back(cur);
    cur = reflect_quiver(cur, i);
    v = w;
  }
  if (stop_vertex < 0) throw Error("reflection walk failed to reach a simple root");
  DimVector ei(static_cast<std::size_t>(n), 0);
  ei[static_cast<std::size_t>(stop_vertex)] = 1;
  if (v != ei) throw Error("reflection walk reached a non-simple stop");
  Representation m = simple_module(path_algebra(cur), f, stop_vertex);
  for (int j = static_cast<int>(steps.size()) - 1; j >= 0; --j) {
    m = bgp_minus(m, steps[static_cast<std::size_t>(j)]);
    if (!(m.alg->quiver == quivers[static_cast<std::size_t>(j)]))
      throw Error("reflection unwind produced an unexpected orientation");
  }
  return m;
}

}  // namespace

Representation indec_kq_module(const RootSystem& rs, const DimVector& root, const Field& f) {
  if (rs.index_of(root) < 0) throw Error("indec_kq_module: not a root of this system");
  auto cls = classify_dynkin(rs.quiver);
  if (cls && cls->family == 'A' && cls->standard_chain) {
    Representation m = zero_representation(path_algebra(rs.quiver), f, root);
    for (std::size_t b = 0; b < rs.quiver.arrows.size(); ++b) {
      const Arrow& a = rs.quiver.arrows[b];
      if (root[static_cast<std::size_t>(a.src)] == 1 && root[static_cast<std::size_t>(a.dst)] == 1)
        m.mats[b].at(0, 0) = Scalar::one(f);
    }
    return m;
  }
  Representation m = bgp_construct(rs.quiver, root, f);
  if (m.dims != root) throw Error("indec_kq_module: constructed dimension vector is wrong");
  m.alg = path_algebra(rs.quiver);  // same arrows; restore the preset name
  return m;
}

Representation build_module(const RootSystem& rs, const Label& a, const Field& f) {
  if (static_cast<int>(a.counts.size()) != rs.count()) throw Error("label length mismatch");
  Representation acc =
      zero_representation(path_algebra(rs.quiver), f,
                          DimVector(static_cast<std::size_t>(rs.quiver.nverts), 0));
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    if (a.counts[i] < 0) throw Error("negative label entry");
    if (a.counts[i] == 0) continue;
    Representation root_mod = indec_kq_module(rs, rs.roots[i], f);
    for (int k = 0; k < a.counts[i]; ++k) acc = direct_sum(acc, root_mod);
  }
  return acc;
}

Label gabriel_label(const RootSystem& rs, const Representation& m, Rng& rng) {
  if (m.alg->kind != AlgebraKind::Path)
    throw Error("gabriel_label: module must be over the path algebra");
  if (!(m.alg->quiver == rs.quiver)) throw Error("gabriel_label: quiver mismatch");
  Label lab = zero_label(rs);
  for (const Representation& part : krs_decompose(m, rng)) {
    int idx = rs.index_of(part.dims);
    if (idx < 0)
      throw Error("gabriel_label: summand dimension vector is not a root (upstream bug)");
    lab.counts[static_cast<std::size_t>(idx)] += 1;
  }
  return lab;
}

}  // namespace qpa
