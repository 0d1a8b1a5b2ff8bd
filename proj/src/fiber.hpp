#pragma once

#include "roots.hpp"

namespace qpa {

// Solution space of the mesh relations in the reversed-arrow matrices, with
// the forward matrices frozen.  The relations are linear in the reversed
// matrices, so the fiber of the forgetful projection over a forward module
// is a linear space.
struct FiberSpace {
  Representation base;                      // forward module over the path algebra
  std::vector<std::vector<Matrix>> basis;   // reversed-arrow tuples, one Matrix per base arrow
  int dim() const { return static_cast<int>(basis.size()); }
};

FiberSpace fiber_basis(const Representation& forward);

// Forward module plus a chosen fiber point, as a module over the
// preprojective algebra.  Faults if the point fails the relations.
Representation attach_fiber_point(const FiberSpace& fs, const std::vector<mpq_class>& coeffs);

struct GenericSample {
  Representation module;  // over the preprojective algebra
  Label label;
  std::uint64_t seed = 0;
};

// Random integer point of the fiber over the label's canonical forward
// module.  Hom/Ext/End dimensions computed from it are generic for C_alpha
// with high probability.
GenericSample sample_component_point(const RootSystem& rs, const Label& a, const Field& f,
                                     std::uint64_t seed);

// All components of the nilpotent variety share the dimension of the
// forward representation space.
long component_dim(const RootSystem& rs, const Label& a);

struct MuResult {
  long mu = 0;
  long max_orbit = 0;
  long comp_dim = 0;
  int samples = 0;
  std::uint64_t seed = 0;
};

// Generic number of parameters: component dimension minus the maximal orbit
// dimension seen across samples.
MuResult mu_g(const RootSystem& rs, const Label& a, const Field& f, int samples,
              std::uint64_t seed);

// Generic indecomposability, decided on the most generic sample drawn (the
// one with minimal endomorphism dimension; dim End is upper semicontinuous).
bool component_is_indecomposable(const RootSystem& rs, const Label& a, const Field& f,
                                 int samples, std::uint64_t seed);

}  // namespace qpa
