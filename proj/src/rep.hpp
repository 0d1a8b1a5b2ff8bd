#pragma once

#include "matrix.hpp"
#include "quiver.hpp"
#include "rng.hpp"

namespace qpa {

// Right module over an algebra presentation: one matrix of shape
// d_{src} x d_{dst} per arrow, acting on row vectors, with paths composed
// left to right (M_p = M_{a_1} ... M_{a_l}).
struct Representation {
  AlgebraPtr alg;
  Field field;
  DimVector dims;
  std::vector<Matrix> mats;

  long total_dim() const { return total(dims); }
};

Representation zero_representation(AlgebraPtr alg, const Field& f, const DimVector& dims);
Representation simple_module(AlgebraPtr alg, const Field& f, int vertex);

// shape consistency of mats against dims; faults on mismatch
void validate_shapes(const Representation& m);

Matrix path_matrix(const Representation& m, const std::vector<int>& arrows, int start_vertex);

// true iff every relation of the algebra evaluates to the zero matrix
bool check_relations(const Representation& m);

// vertex-indexed matrix tuple f_i : d^M_i x d^N_i
using VertexMaps = std::vector<Matrix>;

struct HomBasis {
  DimVector src_dims, dst_dims;
  std::vector<VertexMaps> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Basis of Hom(m, n): solutions of M_b f_{e(b)} = f_{s(b)} N_b for all arrows.
HomBasis hom_basis(const Representation& m, const Representation& n);
int dim_hom(const Representation& m, const Representation& n);

// integer-coefficient combination of the basis, coefficients in [lo, hi]
VertexMaps hom_combination(const HomBasis& h, const std::vector<mpq_class>& coeffs);
VertexMaps random_hom(const HomBasis& h, Rng& rng, long lo, long hi);

Representation direct_sum(const Representation& m, const Representation& n);
Representation forward_part(const Representation& m);  // preprojective -> path algebra

// dim of rad End(m) via the kernel of the trace form (f,g) -> sum_i tr(f_i g_i).
// Certifying only in characteristic zero; faults over a prime field.
int endo_radical_dim(const Representation& m);

// local endomorphism ring test: dim End - dim rad End == 1.  Over a prime
// field the same trace-form computation is used but the result is heuristic;
// callers surface that through report provenance.
bool is_indecomposable(const Representation& m);

// Krull-Remak-Schmidt by repeated Fitting splits along coprime factors of
// characteristic polynomials of endomorphisms; faults if a module that the
// radical test says is decomposable survives the retry budget unsplit.
std::vector<Representation> krs_decompose(const Representation& m, Rng& rng);

struct IsoResult {
  enum class Kind { NonIsoCertified, Isomorphic, NoWitness };
  Kind kind = Kind::NonIsoCertified;
  std::optional<VertexMaps> witness;
  bool ok() const { return kind == Kind::Isomorphic; }
};

// Probabilistic isomorphism certificate: a random element of Hom(m, n) is
// vertex-wise invertible iff m and n are isomorphic, up to the (replayable)
// chance of missing a witness.
IsoResult is_isomorphic(const Representation& m, const Representation& n, Rng& rng,
                        int trials = 6);

long orbit_dim(const Representation& m);  // gl_dim(dims) - dim End(m)

// restriction of m to row subspaces bases[v] (closed under all arrows)
Representation restrict_to_subspaces(const Representation& m,
                                     const std::vector<Matrix>& bases);

}  // namespace qpa
