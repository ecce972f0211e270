#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torat/exact.hpp"
#include "torat/groups.hpp"

namespace torat {

// One summand Z[G/H] of a permutation lattice: which subgroup, which coset
// representatives (least element index per coset, ascending), and where the
// block's coordinates start.
struct PermutationBlock {
  std::vector<std::size_t> subgroup_elements;
  std::vector<std::size_t> coset_reps;
  std::size_t offset = 0;

  std::size_t size() const { return coset_reps.size(); }
};

struct PermutationStructure {
  std::vector<PermutationBlock> blocks;
};

// A free Z-module of finite rank with a G-action by unimodular matrices.
// Vectors are columns and matrices act on the left, so the action matrix of
// g*h is action(g)*action(h).
class GLattice {
 public:
  GLattice(GroupPtr g, std::size_t rank, std::vector<IntMatrix> action_by_element,
           std::optional<PermutationStructure> perm = std::nullopt);

  // Extends matrices given for the group's generators (in generator order)
  // along the group's multiplication. Checks the result is consistent.
  static GLattice from_generator_actions(GroupPtr g,
                                         const std::vector<IntMatrix>& gen_actions);

  const GroupPtr& group() const { return group_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& action(std::size_t element) const {
    return action_[element];
  }
  const std::optional<PermutationStructure>& permutation_structure() const {
    return perm_;
  }

  struct ValidationReport {
    bool ok = true;
    std::string message;
  };
  // Checks shapes, unimodularity, and multiplicativity; reports the first
  // violation instead of throwing.
  ValidationReport validate() const;

 private:
  GroupPtr group_;
  std::size_t rank_;
  std::vector<IntMatrix> action_;
  std::optional<PermutationStructure> perm_;
};

// Z^rank with every element acting as the identity; permutation structure
// rank copies of Z[G/G].
GLattice trivial_lattice(GroupPtr g, std::size_t rank = 1);

// Z[G/H] for H = h inside h.parent: basis indexed by left cosets, g sending
// the coset xH to gxH.
GLattice permutation_lattice(const Subgroup& h);

// Z[G] = Z[G/1].
GLattice regular_lattice(const GroupPtr& g);

// Kernel of the coefficient-sum map out of Z[G], with basis g_i - e over the
// non-identity elements in element order.
GLattice augmentation_ideal(const GroupPtr& g);

// Dual lattice of the augmentation ideal; the character lattice of the
// norm-one torus of G.
GLattice norm_one_lattice(const GroupPtr& g);

// Contragredient action: g acts by transpose(action(g^{-1})). Permutation
// structure survives because permutation matrices are orthogonal.
GLattice dual(const GLattice& m);

GLattice direct_sum(const GLattice& a, const GLattice& b);

// Hom(M, N) with (g.f)(x) = g.f(g^{-1}.x). Coordinates are the row-major
// entries of the rank(N) x rank(M) matrix of f, so the action matrix is
// kron(action_N(g), dual action_M(g)).
GLattice hom_lattice(const GLattice& m, const GLattice& n);

// The same module seen as a lattice over the subgroup (materialized as its
// own group). Permutation structure is dropped: the blocks are G-orbits,
// not H-orbits.
GLattice restrict_lattice(const GLattice& m, const Subgroup& h);

// Canonical row basis of the fixed sublattice M^H. The span is saturated:
// M^H = M intersect (Q tensor span).
IntMatrix fixed_sublattice(const GLattice& m, const Subgroup& h);

}  // namespace torat
