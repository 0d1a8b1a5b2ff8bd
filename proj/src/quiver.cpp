#include "quiver.hpp"

#include <algorithm>
#include <cctype>

namespace qpa {

int Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return static_cast<int>(i);
  throw Error("unknown arrow id: " + id);
}

namespace {

// undirected edges of the preset diagrams, 1-based, each oriented high -> low
std::vector<std::pair<int, int>> preset_edges(char family, int rank) {
  std::vector<std::pair<int, int>> e;
  switch (family) {
    case 'A':
      for (int i = 1; i < rank; ++i) e.emplace_back(i + 1, i);
      break;
    case 'D':
      if (rank < 4) throw Error("type D needs rank >= 4");
      e.emplace_back(3, 1);
      e.emplace_back(3, 2);
      for (int i = 3; i < rank; ++i) e.emplace_back(i + 1, i);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw Error("type E rank must be 6, 7 or 8");
      for (int i = 1; i < rank - 1; ++i) e.emplace_back(i + 1, i);
      e.emplace_back(rank, 3);
      break;
    default:
      throw Error("unknown Dynkin family");
  }
  return e;
}

}  // namespace

Quiver dynkin_quiver(const std::string& type) {
  if (type.size() < 2 || !std::isalpha(static_cast<unsigned char>(type[0])))
    throw Error("bad Dynkin type: " + type);
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  int rank = 0;
  try {
    rank = std::stoi(type.substr(1));
  } catch (const std::exception&) {
    throw Error("bad Dynkin type: " + type);
  }
  if (rank < 1 || rank > 9) throw Error("Dynkin rank out of the supported range: " + type);
  Quiver q;
  q.nverts = rank;
  q.name = std::string(1, family) + std::to_string(rank);
  int idx = 1;
  if (family == 'A' && rank == 1) return q;
  for (auto [hi, lo] : preset_edges(family, rank)) {
    q.arrows.push_back(Arrow{"a" + std::to_string(idx++), hi - 1, lo - 1});
  }
  return q;
}

bool is_acyclic(const Quiver& q) {
  std::vector<int> indeg(static_cast<std::size_t>(q.nverts), 0);
  for (const auto& a : q.arrows) indeg[static_cast<std::size_t>(a.dst)]++;
  std::vector<int> stack;
  for (int v = 0; v < q.nverts; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : q.arrows)
      if (a.src == v && --indeg[static_cast<std::size_t>(a.dst)] == 0) stack.push_back(a.dst);
  }
  return seen == q.nverts;
}

std::optional<DynkinClass> classify_dynkin(const Quiver& q) {
  int n = q.nverts;
  if (n < 1) return std::nullopt;
  if (static_cast<int>(q.arrows.size()) != n - 1) return std::nullopt;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& a : q.arrows) {
    if (a.src == a.dst) return std::nullopt;
    adj[static_cast<std::size_t>(a.src)].push_back(a.dst);
    adj[static_cast<std::size_t>(a.dst)].push_back(a.src);
  }
  // connectivity (n-1 edges + connected == tree)
  std::vector<bool> vis(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  vis[0] = true;
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!vis[static_cast<std::size_t>(w)]) {
        vis[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  if (seen != n) return std::nullopt;
  // multi-edges give a vertex pair listed twice
  for (int v = 0; v < n; ++v) {
    auto nb = adj[static_cast<std::size_t>(v)];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return std::nullopt;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  int hubs = 0, hub = -1;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (deg[static_cast<std::size_t>(v)] > 3) return std::nullopt;
    if (deg[static_cast<std::size_t>(v)] == 3) {
      ++hubs;
      hub = v;
    }
  }
  if (hubs > 1) return std::nullopt;
  DynkinClass c;
  c.rank = n;
  if (hubs == 0) {
    c.family = 'A';
    // standard chain: i adjacent to i+1 for all i
    c.standard_chain = true;
    for (int v = 0; v + 1 < n; ++v) {
      bool found = false;
      for (int w : adj[static_cast<std::size_t>(v)]) found |= (w == v + 1);
      if (!found) c.standard_chain = false;
    }
    return c;
  }
  // branch lengths from the hub
  std::vector<int> legs;
  for (int w : adj[static_cast<std::size_t>(hub)]) {
    int len = 1, prev = hub, cur = w;
    while (deg[static_cast<std::size_t>(cur)] == 2) {
      for (int nx : adj[static_cast<std::size_t>(cur)])
        if (nx != prev) {
          prev = cur;
          cur = nx;
          break;
        }
      ++len;
    }
    if (deg[static_cast<std::size_t>(cur)] == 3) return std::nullopt;  // cycle through hub
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] != 1) return std::nullopt;
  if (legs[1] == 1) {
    c.family = 'D';
    return c;
  }
  if (legs[1] == 2 && legs[2] <= 4) {
    c.family = 'E';
    return c;
  }
  return std::nullopt;
}

std::string bar_id(const std::string& id) {
  std::size_t split = id.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(id[split - 1]))) --split;
  if (split == 0 || split == id.size()) return id + "bar";
  return id.substr(0, split) + "bar" + id.substr(split);
}

Quiver double_quiver(const Quiver& q) {
  if (!is_acyclic(q)) throw Error("double quiver requires an acyclic quiver");
  Quiver d = q;
  d.name.clear();
  for (const auto& a : q.arrows) d.arrows.push_back(Arrow{bar_id(a.id), a.dst, a.src});
  return d;
}

AlgebraPtr path_algebra(const Quiver& q) {
  auto alg = std::make_shared<Algebra>();
  alg->kind = AlgebraKind::Path;
  alg->quiver = q;
  alg->base = q;
  alg->n_forward = static_cast<int>(q.arrows.size());
  return alg;
}

AlgebraPtr preprojective_algebra(const Quiver& q) {
  auto alg = std::make_shared<Algebra>();
  alg->kind = AlgebraKind::Preprojective;
  alg->base = q;
  alg->quiver = double_quiver(q);
  alg->n_forward = static_cast<int>(q.arrows.size());
  int m = alg->n_forward;
  // mesh relation at vertex v: sum over arrows starting at v of a abar(a)
  // minus sum over arrows ending at v of abar(a) a
  for (int v = 0; v < q.nverts; ++v) {
    Relation rel;
    rel.src = rel.dst = v;
    for (int i = 0; i < m; ++i) {
      const Arrow& a = q.arrows[static_cast<std::size_t>(i)];
      if (a.src == v) rel.terms.push_back(RelationTerm{mpq_class(1), {i, m + i}});
      if (a.dst == v) rel.terms.push_back(RelationTerm{mpq_class(-1), {m + i, i}});
    }
    if (!rel.terms.empty()) alg->relations.push_back(std::move(rel));
  }
  return alg;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  return a.kind == b.kind && a.quiver == b.quiver && a.n_forward == b.n_forward;
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (static_cast<int>(d.size()) != q.nverts || static_cast<int>(e.size()) != q.nverts)
    throw Error("dimension vector length mismatch");
  long v = 0;
  for (int i = 0; i < q.nverts; ++i)
    v += static_cast<long>(d[static_cast<std::size_t>(i)]) * e[static_cast<std::size_t>(i)];
  for (const auto& a : q.arrows)
    v -= static_cast<long>(d[static_cast<std::size_t>(a.src)]) * e[static_cast<std::size_t>(a.dst)];
  return v;
}

long sym_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  return euler_form(q, d, e) + euler_form(q, e, d);
}

long rep_space_dim(const Quiver& q, const DimVector& d) {
  if (static_cast<int>(d.size()) != q.nverts) throw Error("dimension vector length mismatch");
  long v = 0;
  for (const auto& a : q.arrows)
    v += static_cast<long>(d[static_cast<std::size_t>(a.src)]) * d[static_cast<std::size_t>(a.dst)];
  return v;
}

long gl_dim(const DimVector& d) {
  long v = 0;
  for (int x : d) v += static_cast<long>(x) * x;
  return v;
}

DimVector add(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw Error("dimension vector length mismatch");
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

long total(const DimVector& d) {
  long t = 0;
  for (int x : d) t += x;
  return t;
}

}  // namespace qpa
