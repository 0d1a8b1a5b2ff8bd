#pragma once

#include "rep.hpp"

namespace qpa {

// Positive roots of a Dynkin quiver in a fixed deterministic order.  For a
// type A quiver whose vertices are labelled along the chain the order is the
// interval order [1,1] < [1,2] < ... ; every other type uses graded-lex
// (total dimension, then lex on entries).
struct RootSystem {
  Quiver quiver;
  std::vector<DimVector> roots;

  int count() const { return static_cast<int>(roots.size()); }
  // index of a root, -1 when the vector is not a root
  int index_of(const DimVector& d) const;
};

RootSystem positive_roots(const Quiver& q);

// Multiplicity vector over the ordered root list; names the irreducible
// component C_alpha of the nilpotent variety.
struct Label {
  std::vector<int> counts;

  bool operator==(const Label&) const = default;
  bool operator<(const Label& o) const { return counts < o.counts; }
  bool is_zero() const;
  long coord_sum() const;
};

Label zero_label(const RootSystem& rs);
Label unit_label(const RootSystem& rs, int root_index);
Label add(const Label& a, const Label& b);
DimVector label_dim_vector(const RootSystem& rs, const Label& a);

// The indecomposable path-algebra module with the given root as dimension
// vector: interval modules for standard type A chains, BGP reflection
// functors from a simple module otherwise.
Representation indec_kq_module(const RootSystem& rs, const DimVector& root, const Field& f);

// Direct sum of root modules with the label's multiplicities.
Representation build_module(const RootSystem& rs, const Label& a, const Field& f);

// Krull-Remak-Schmidt class of a path-algebra module as a multiplicity
// vector over the roots.  Faults if a summand's dimension vector is not a
// root (impossible for valid Dynkin input).
Label gabriel_label(const RootSystem& rs, const Representation& m, Rng& rng);

}  // namespace qpa
