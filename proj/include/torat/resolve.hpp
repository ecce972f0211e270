#pragma once

#include "torat/cohomology.hpp"

namespace torat {

// 0 -> kernel -> cover -> m -> 0 where cover is a permutation lattice and
// cover^H -> m^H is onto for every subgroup H. The kernel is then
// automatically coflasque; the construction re-verifies both facts.
struct CoflasqueCover {
  ExactTriple triple;  // a = kernel, b = cover, c = m

  const GLattice& kernel() const { return triple.a; }
  const GLattice& cover() const { return triple.b; }
};
CoflasqueCover coflasque_cover(const GLattice& m);

// 0 -> m -> permutation -> flasque -> 0, obtained by dualizing a coflasque
// cover of the dual lattice. class_order is the order of the extension
// class: the least d such that d times the identity of the quotient lifts
// equivariantly through the projection.
struct FlasqueResolution {
  ExactTriple triple;  // a = m, b = permutation, c = flasque quotient
  Int class_order;

  const GLattice& flasque_quotient() const { return triple.c; }
};
FlasqueResolution flasque_resolution(const GLattice& m);

// Primes p at which m fails to be p-invertible: the prime divisors of the
// class order of its flasque resolution. Empty iff the resolution splits.
std::vector<Int> lattice_bad_primes(const GLattice& m);

bool is_p_invertible(const GLattice& m, const Int& p);

// Class order one. Cross-checked against an independent split test on the
// same sequence; disagreement is an internal error.
bool is_invertible(const GLattice& m);

}  // namespace torat
