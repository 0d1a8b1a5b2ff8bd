#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace qpa {

using DimVector = std::vector<int>;

struct Arrow {
  std::string id;
  int src = 0;  // 0-based vertex indices
  int dst = 0;
  bool operator==(const Arrow&) const = default;
};

// Finite quiver.  Vertices are 0..nverts-1 internally and 1-based in all
// serialized forms.  `name` records the Dynkin preset ("A5", "D4", ...) when
// the quiver was built by one; explicit quivers leave it empty.
struct Quiver {
  int nverts = 0;
  std::vector<Arrow> arrows;
  std::string name;

  int arrow_index(const std::string& id) const;
  bool operator==(const Quiver& o) const { return nverts == o.nverts && arrows == o.arrows; }
};

// Orientation presets.  Type A uses the chain orientation a_i : i+1 -> i;
// D attaches the two fork vertices 1,2 to vertex 3; E attaches the branch
// vertex n to vertex 3 of a chain.  All arrows point toward the lower vertex.
Quiver dynkin_quiver(const std::string& type);  // "A1".."A9", "D4".."D9", "E6","E7","E8"

struct DynkinClass {
  char family = 0;  // 'A', 'D', 'E'
  int rank = 0;
  bool standard_chain = false;  // type A with vertices labelled along the chain
};

// Classifies the underlying graph; nullopt when it is not a simply-laced
// Dynkin diagram.
std::optional<DynkinClass> classify_dynkin(const Quiver& q);
bool is_acyclic(const Quiver& q);

struct RelationTerm {
  mpq_class coeff;                // field-independent; coerced on evaluation
  std::vector<int> arrows;        // path, composed left to right, length >= 2
};

struct Relation {
  int src = 0;  // common start vertex of all terms
  int dst = 0;  // common end vertex
  std::vector<RelationTerm> terms;
};

enum class AlgebraKind { Path, Preprojective };

// Path algebra or preprojective algebra presentation.  For the preprojective
// kind, `quiver` is the double of `base` with the reversed arrow of `a`
// appended as `abar(a)`, and `relations` holds the mesh relation of every
// vertex that meets an arrow.
struct Algebra {
  AlgebraKind kind = AlgebraKind::Path;
  Quiver quiver;
  Quiver base;
  int n_forward = 0;  // arrows [0, n_forward) are the base arrows
  std::vector<Relation> relations;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr path_algebra(const Quiver& q);
AlgebraPtr preprojective_algebra(const Quiver& q);
bool same_algebra(const Algebra& a, const Algebra& b);

std::string bar_id(const std::string& id);  // "a1" -> "abar1"
Quiver double_quiver(const Quiver& q);

// Euler form of the path algebra kQ and its symmetrization.
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
long sym_form(const Quiver& q, const DimVector& d, const DimVector& e);

long rep_space_dim(const Quiver& q, const DimVector& d);  // sum of d_s * d_e
long gl_dim(const DimVector& d);                          // sum of d_i^2

DimVector add(const DimVector& a, const DimVector& b);
long total(const DimVector& d);

}  // namespace qpa
