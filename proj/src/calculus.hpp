#pragma once

#include "ext.hpp"

namespace qpa {

struct CanonicalDecomposition {
  Label input;
  std::vector<Label> parts;  // sorted; multiset of indecomposable part labels
  bool agreed = false;       // every sample produced the same multiset
  int samples_used = 0;
  std::uint64_t seed = 0;
};

// Samples generic points, splits each by Krull-Remak-Schmidt, and labels the
// summands' forward parts.  All samples must agree; on disagreement the run
// is retried with twice the samples and flagged "undetermined" if it still
// disagrees.
CanonicalDecomposition canonical_decomposition(const RootSystem& rs, const Label& a,
                                               const Field& f, int samples, std::uint64_t seed);

// a + b when the generic extension dimension vanishes in both orders
// (the closure of the direct sum is then a component), nullopt otherwise.
std::optional<Label> direct_sum_is_component(const RootSystem& rs, const Label& a, const Label& b,
                                             const Field& f, int samples, std::uint64_t seed);

struct MuAdditivityReport {
  bool precondition_ok = false;  // pairwise generic-ext vanishing of the parts
  long mu_of_sum = -1;
  long sum_of_mu = -1;
  bool equal = false;
};

MuAdditivityReport mu_additivity_check(const RootSystem& rs, const std::vector<Label>& parts,
                                       const Field& f, int samples, std::uint64_t seed);

// The contradiction witness: given N+1 pairwise distinct nonzero labels,
// assembles the N x (N+1) matrix with the labels as columns, extracts an
// integer null vector, and produces m != l in N^{N+1} with identical images.
struct TheoremOneWitness {
  std::vector<std::vector<long>> delta;  // N rows, N+1 columns
  std::vector<mpz_class> z;
  std::vector<mpz_class> m, l;
  std::vector<mpz_class> d;              // = delta * m = delta * l
  bool nonneg_z_branch = false;          // never taken on valid input
};

TheoremOneWitness theorem1_witness(const RootSystem& rs, const std::vector<Label>& labels);

// Nodes: labels within the bounds that name indecomposable components with
// vanishing generic self-extension.  Edges: generic-ext vanishing in both
// orders.  Cliques: all maximal ones (Bron-Kerbosch), sizes bounded by the
// number of positive roots.
struct OrthogonalityGraph {
  long max_sum = 0;
  DimVector max_dim;
  std::vector<Label> nodes;               // lex ascending
  std::vector<std::vector<bool>> edge;    // symmetric, diagonal true
  std::vector<long> mu;                   // per node
  std::vector<std::vector<int>> cliques;  // maximal, each ascending, list lex-sorted
};

OrthogonalityGraph orthogonal_set_search(const RootSystem& rs, long max_sum,
                                         const DimVector& max_dim, const Field& f, int samples,
                                         std::uint64_t seed);

struct Conjecture7Report {
  int clique_size = 0;
  long mu_sum = 0;
  int positive_roots = 0;
  bool equality = false;  // |I| == |R+| - sum mu, relative to the search frontier
};

Conjecture7Report conjecture7_check(const RootSystem& rs, const OrthogonalityGraph& g,
                                    const std::vector<int>& clique);

struct RigidSummandReport {
  bool rigid = false;
  int distinct_summands = 0;
  int bound = 0;  // |R+|
  bool within_bound = false;
};

RigidSummandReport rigid_summand_bound(const RootSystem& rs, const Representation& m,
                                       std::uint64_t seed);

}  // namespace qpa
