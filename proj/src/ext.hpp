#pragma once

#include "fiber.hpp"

namespace qpa {

// Extension cocycles for a pair (m, n): per-arrow tuples g_b of shape
// d^m_{s(b)} x d^n_{e(b)} satisfying the relation equations obtained by
// splicing g into each arrow slot of every relation path (the block matrix
// [[N,0],[g,M]] then satisfies the relations).  `classes` is a basis of a
// complement of the coboundaries inside the cocycles, so its elements
// represent a basis of Ext^1(m, n).
struct ExtCocycleSpace {
  std::vector<std::vector<Matrix>> classes;
  int cocycle_dim = 0;
  int coboundary_rank = 0;
  int dim() const { return cocycle_dim - coboundary_rank; }
};

ExtCocycleSpace ext_cocycles(const Representation& m, const Representation& n);

// dim Ext^1 by the cocycle computation: dim Z - (sum_i d^m_i d^n_i - dim Hom).
int ext1_dim_direct(const Representation& m, const Representation& n);

// dim Ext^1 by the preprojective-algebra identity
// dim Hom(m,n) + dim Hom(n,m) - sym(dim m, dim n); Dynkin preprojective only.
int ext1_dim_cb(const Representation& m, const Representation& n);

// Generic extension dimension between two components: minimum over
// independently sampled pairs (independent even when a == b).
int generic_ext(const RootSystem& rs, const Label& a, const Label& b, const Field& f,
                int samples, std::uint64_t seed);

// Total space of the extension of m by n along a cocycle: E_i = n_i + m_i,
// E_b = [[N_b, 0], [g_b, M_b]].  n embeds as a submodule with quotient m;
// the zero class yields the direct sum.  Faults if g is not a cocycle.
Representation extension_middle_term(const Representation& m, const Representation& n,
                                     const std::vector<Matrix>& g);

struct CensusEntry {
  std::vector<mpq_class> cls;            // coefficients over the Ext basis
  std::vector<DimVector> summand_dims;   // of the middle term's KRS parts
  std::vector<Label> summand_labels;     // labels of the forward parts
};

// Decomposes the middle term of one projective line of classes per grid
// point.  When the generic stratum hides special lines, the grid is extended
// by the exact degeneration points of the endomorphism-count of the family
// (rank-drop roots of an interpolated minor determinant).
std::vector<CensusEntry> self_extension_census(const RootSystem& rs, const Representation& m,
                                               std::uint64_t seed);

// Projectivity over the preprojective algebra: Ext^1(m, S_v) = 0 for every
// simple (vanishing on simples extends to all finite-dimensional modules).
bool is_projective(const Representation& m);

}  // namespace qpa
