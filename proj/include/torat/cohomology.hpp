#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torat/glattice.hpp"

namespace torat {

// A finite abelian group by its invariant factors (each > 1, each dividing
// the next). The empty list is the trivial group.
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;

  bool trivial() const { return invariant_factors.empty(); }
  Int exponent() const {
    return trivial() ? Int(1) : invariant_factors.back();
  }
  Int order() const {
    Int n = 1;
    for (const Int& f : invariant_factors) n *= f;
    return n;
  }
  friend bool operator==(const FiniteAbelianGroup&,
                         const FiniteAbelianGroup&) = default;
};
std::string to_string(const FiniteAbelianGroup& a);

// Tate cohomology of the subgroup h acting on m, degree -1, 0, or 1:
//   -1: (kernel of the norm) / (span of (g-1)m)
//    0: fixed sublattice / (norm image)
//    1: cocycles mod coboundaries, by the element-table definition
// All three are finite for a lattice; the result lists invariant factors.
FiniteAbelianGroup tate(const GLattice& m, const Subgroup& h, int degree);

// Degree -1 vanishes on every subgroup / degree 1 vanishes on every
// subgroup. Both are conjugation-invariant, so representatives suffice.
bool is_flasque(const GLattice& m);
bool is_coflasque(const GLattice& m);

// Ext^1 of f by m in the category of lattices, as degree-1 cohomology of the
// full group on Hom(f, m).
FiniteAbelianGroup ext1(const GLattice& f, const GLattice& m);

// A short exact sequence 0 -> a -> b -> c -> 0 of lattices over one group.
// inject is rank(b) x rank(a), project is rank(c) x rank(b); both are maps
// of column vectors.
struct ExactTriple {
  GLattice a;
  GLattice b;
  GLattice c;
  IntMatrix inject;
  IntMatrix project;

  // Checks shapes, equivariance, injectivity, surjectivity, and exactness in
  // the middle (image = kernel as sublattices, not just up to finite index).
  GLattice::ValidationReport validate() const;
};

// Least d >= 1 such that d * id_c lifts through project to an equivariant
// map c -> b; equivalently the least d such that d * id_a extends through
// inject to an equivariant map b -> a. Always divides the group order.
Int extension_class_order(const ExactTriple& t);

// Whether the sequence splits equivariantly. Decided by a direct linear
// system over the raw matrix entries, independent of the class-order engine.
bool splits(const ExactTriple& t);

// An equivariant s with project * s = d * id_c, when one exists (exactly
// when the class order divides d).
std::optional<IntMatrix> section_witness(const ExactTriple& t, const Int& d);

// Z-basis of the equivariant maps b -> a for a permutation lattice b: one
// map per block and per basis vector of the fixed sublattice a^{H_block}.
std::vector<IntMatrix> equivariant_maps_from_permutation(const GLattice& b,
                                                         const GLattice& a);

// Z-basis of the equivariant maps c -> b for a permutation lattice b, from
// fixed vectors of the dual of c.
std::vector<IntMatrix> equivariant_maps_into_permutation(const GLattice& c,
                                                         const GLattice& b);

}  // namespace torat
