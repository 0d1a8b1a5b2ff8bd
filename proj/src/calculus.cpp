#include "calculus.hpp"

#include <algorithm>
#include <map>

namespace qpa {

namespace {

std::vector<Label> decompose_sample_labels(const RootSystem& rs, const GenericSample& gs,
                                           std::uint64_t seed) {
  Rng krng = Rng::derive(seed, 0xdec0);
  std::vector<Label> labels;
  for (const Representation& part : krs_decompose(gs.module, krng)) {
    Rng lrng = Rng::derive(seed, 0x1abe1 + labels.size());
    labels.push_back(gabriel_label(rs, forward_part(part), lrng));
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::optional<std::vector<Label>> agreed_decomposition(const RootSystem& rs, const Label& a,
                                                       const Field& f, int samples,
                                                       std::uint64_t seed) {
  std::optional<std::vector<Label>> common;
  for (int i = 0; i < samples; ++i) {
    std::uint64_t si = splitmix64(seed ^ splitmix64(i));
    GenericSample gs = sample_component_point(rs, a, f, si);
    auto labels = decompose_sample_labels(rs, gs, si);
    if (!common)
      common = std::move(labels);
    else if (*common != labels)
      return std::nullopt;
  }
  return common;
}

}  // namespace

CanonicalDecomposition canonical_decomposition(const RootSystem& rs, const Label& a,
                                               const Field& f, int samples, std::uint64_t seed) {
  if (a.is_zero()) throw Error("canonical_decomposition: zero label");
  if (samples < 1) throw Error("canonical_decomposition needs at least one sample");
  CanonicalDecomposition cd;
  cd.input = a;
  cd.seed = seed;
  if (auto parts = agreed_decomposition(rs, a, f, samples, seed)) {
    cd.parts = std::move(*parts);
    cd.agreed = true;
    cd.samples_used = samples;
    return cd;
  }
  // escalate once with twice the samples on a fresh stream
  if (auto parts = agreed_decomposition(rs, a, f, 2 * samples, splitmix64(seed ^ 0xe5ca1a7e))) {
    cd.parts = std::move(*parts);
    cd.agreed = true;
    cd.samples_used = 3 * samples;
    return cd;
  }
  // undetermined: report the first sample's answer with the flag down
  GenericSample gs = sample_component_point(rs, a, f, splitmix64(seed ^ splitmix64(0)));
  cd.parts = decompose_sample_labels(rs, gs, splitmix64(seed ^ splitmix64(0)));
  cd.agreed = false;
  cd.samples_used = 3 * samples;
  return cd;
}

std::optional<Label> direct_sum_is_component(const RootSystem& rs, const Label& a, const Label& b,
                                             const Field& f, int samples, std::uint64_t seed) {
  if (generic_ext(rs, a, b, f, samples, splitmix64(seed ^ 0xab)) != 0) return std::nullopt;
  if (generic_ext(rs, b, a, f, samples, splitmix64(seed ^ 0xba)) != 0) return std::nullopt;
  return add(a, b);
}

MuAdditivityReport mu_additivity_check(const RootSystem& rs, const std::vector<Label>& parts,
                                       const Field& f, int samples, std::uint64_t seed) {
  MuAdditivityReport rep;
  if (parts.empty()) throw Error("mu_additivity_check: no parts");
  rep.precondition_ok = true;
  for (std::size_t i = 0; i < parts.size() && rep.precondition_ok; ++i)
    for (std::size_t j = 0; j < parts.size() && rep.precondition_ok; ++j) {
      if (i == j) continue;
      std::uint64_t s = splitmix64(seed ^ splitmix64(i * 131 + j));
      if (generic_ext(rs, parts[i], parts[j], f, samples, s) != 0) rep.precondition_ok = false;
    }
  if (!rep.precondition_ok) return rep;  // skipped with note at the report layer
  Label sum = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) sum = add(sum, parts[i]);
  rep.mu_of_sum = mu_g(rs, sum, f, samples, splitmix64(seed ^ 0x5u)).mu;
  rep.sum_of_mu = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    rep.sum_of_mu += mu_g(rs, parts[i], f, samples, splitmix64(seed ^ splitmix64(1000 + i))).mu;
  rep.equal = rep.mu_of_sum == rep.sum_of_mu;
  return rep;
}

TheoremOneWitness theorem1_witness(const RootSystem& rs, const std::vector<Label>& labels) {
  int n = rs.count();
  if (static_cast<int>(labels.size()) != n + 1)
    throw Error("theorem1_witness needs exactly N+1 labels");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (static_cast<int>(labels[i].counts.size()) != n) throw Error("label length mismatch");
    if (labels[i].is_zero()) throw Error("theorem1_witness: labels must be nonzero");
    for (int c : labels[i].counts)
      if (c < 0) throw Error("theorem1_witness: labels must be natural vectors");
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw Error("theorem1_witness: labels must be pairwise distinct");
  }
  TheoremOneWitness w;
  Field f = Field::rationals();
  Matrix delta(f, n, n + 1);
  w.delta.assign(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n) + 1, 0));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i < n; ++i) {
      int v = labels[static_cast<std::size_t>(j)].counts[static_cast<std::size_t>(i)];
      delta.at(i, j) = Scalar::from_int(f, v);
      w.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  w.z = integer_nullvector(delta);
  bool nonneg = true;
  mpz_class minz = w.z[0];
  for (const auto& zi : w.z) {
    if (zi < 0) nonneg = false;
    if (zi < minz) minz = zi;
  }
  w.nonneg_z_branch = nonneg;
  mpz_class lambda = nonneg ? mpz_class(1) : mpz_class(-minz);
  w.m.assign(w.z.size(), lambda);
  w.l.resize(w.z.size());
  for (std::size_t i = 0; i < w.z.size(); ++i) w.l[i] = w.m[i] + w.z[i];
  w.d.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= n; ++j)
      w.d[static_cast<std::size_t>(i)] +=
          w.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * w.m[static_cast<std::size_t>(j)];
  return w;
}

namespace {

void enumerate_labels(const RootSystem& rs, long max_sum, const DimVector& max_dim,
                      std::size_t pos, Label cur, DimVector dim, long sum,
                      std::vector<Label>& out) {
  if (pos == cur.counts.size()) {
    if (sum > 0) out.push_back(cur);
    return;
  }
  enumerate_labels(rs, max_sum, max_dim, pos + 1, cur, dim, sum, out);
  const DimVector& root = rs.roots[pos];
  int mult = 0;
  while (sum + 1 <= max_sum) {
    bool fits = true;
    for (std::size_t v = 0; v < dim.size(); ++v) {
      dim[v] += root[v];
      if (dim[v] > max_dim[v]) fits = false;
    }
    if (!fits) break;
    ++mult;
    ++sum;
    cur.counts[pos] = mult;
    enumerate_labels(rs, max_sum, max_dim, pos + 1, cur, dim, sum, out);
  }
}

// maximal cliques; diagonal of adj is true, so the pivot keeps itself as a
// candidate explicitly
void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = !p.empty() ? p.front() : x.front();
  std::vector<int> candidates;
  for (int v : p)
    if (v == pivot || !adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)])
      candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> np, nx;
    for (int u : p)
      if (u != v && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) np.push_back(u);
    for (int u : x)
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(adj, r, np, nx, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

OrthogonalityGraph orthogonal_set_search(const RootSystem& rs, long max_sum,
                                         const DimVector& max_dim, const Field& f, int samples,
                                         std::uint64_t seed) {
  if (static_cast<int>(max_dim.size()) != rs.quiver.nverts)
    throw Error("orthogonal_set_search: max_dim length mismatch");
  OrthogonalityGraph g;
  g.max_sum = max_sum;
  g.max_dim = max_dim;
  std::vector<Label> candidates;
  enumerate_labels(rs, max_sum, max_dim, 0, zero_label(rs),
                   DimVector(static_cast<std::size_t>(rs.quiver.nverts), 0), 0, candidates);
  std::sort(candidates.begin(), candidates.end());
  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const Label& a = candidates[ci];
    std::uint64_t s = splitmix64(seed ^ splitmix64(0x90de + ci));
    if (generic_ext(rs, a, a, f, samples, s) != 0) continue;
    if (!component_is_indecomposable(rs, a, f, samples, splitmix64(s ^ 1))) continue;
    g.nodes.push_back(a);
  }
  int nn = static_cast<int>(g.nodes.size());
  g.edge.assign(static_cast<std::size_t>(nn), std::vector<bool>(static_cast<std::size_t>(nn), false));
  for (int i = 0; i < nn; ++i) g.edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      std::uint64_t s = splitmix64(seed ^ splitmix64(0xed6e + i * 4099 + j));
      bool ok = generic_ext(rs, g.nodes[static_cast<std::size_t>(i)],
                            g.nodes[static_cast<std::size_t>(j)], f, samples, s) == 0 &&
                generic_ext(rs, g.nodes[static_cast<std::size_t>(j)],
                            g.nodes[static_cast<std::size_t>(i)], f, samples,
                            splitmix64(s ^ 2)) == 0;
      g.edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ok;
      g.edge[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = ok;
    }
  for (int i = 0; i < nn; ++i)
    g.mu.push_back(mu_g(rs, g.nodes[static_cast<std::size_t>(i)], f, samples,
                        splitmix64(seed ^ splitmix64(0x3b9 + i)))
                       .mu);
  std::vector<int> r, p, x;
  for (int i = 0; i < nn; ++i) p.push_back(i);
  bron_kerbosch(g.edge, r, p, x, g.cliques);
  for (auto& c : g.cliques) std::sort(c.begin(), c.end());
  std::sort(g.cliques.begin(), g.cliques.end());
  for (const auto& c : g.cliques)
    if (static_cast<int>(c.size()) > rs.count())
      throw Error("orthogonal set larger than the positive-root count found");
  return g;
}

Conjecture7Report conjecture7_check(const RootSystem& rs, const OrthogonalityGraph& g,
                                    const std::vector<int>& clique) {
  Conjecture7Report rep;
  rep.clique_size = static_cast<int>(clique.size());
  for (int v : clique) rep.mu_sum += g.mu.at(static_cast<std::size_t>(v));
  rep.positive_roots = rs.count();
  rep.equality = rep.clique_size == rep.positive_roots - rep.mu_sum;
  return rep;
}

RigidSummandReport rigid_summand_bound(const RootSystem& rs, const Representation& m,
                                       std::uint64_t seed) {
  RigidSummandReport rep;
  rep.bound = rs.count();
  if (ext1_dim_direct(m, m) != 0) {
    rep.rigid = false;
    return rep;
  }
  rep.rigid = true;
  Rng rng = Rng::derive(seed, 0x416d);
  std::vector<Representation> parts = krs_decompose(m, rng);
  std::vector<Representation> reps;
  for (const Representation& p : parts) {
    bool known = false;
    for (const Representation& r : reps) {
      Rng irng = Rng::derive(seed, 0x15u + reps.size());
      if (is_isomorphic(p, r, irng).ok()) {
        known = true;
        break;
      }
    }
    if (!known) reps.push_back(p);
  }
  rep.distinct_summands = static_cast<int>(reps.size());
  rep.within_bound = rep.distinct_summands <= rep.bound;
  return rep;
}

}  // namespace qpa
