#pragma once

#include <string>
#include <vector>

#include "torat/resolve.hpp"

namespace torat {

// A torus over a field, reduced to what the rationality criteria consume:
// the Galois group of a splitting field and the character lattice it acts
// on. No field arithmetic happens anywhere.
struct Torus {
  GroupPtr group;
  GLattice character_lattice;
  std::string label;

  std::size_t dimension() const { return character_lattice.rank(); }
};

// Validates the lattice and the group match before wrapping them.
Torus make_torus(GroupPtr g, GLattice character_lattice, std::string label = "");

struct Verdict {
  std::vector<Int> bad_primes;  // ascending
  bool retract_rational = false;
  std::string route;    // "class-order" or "sylow"
  std::string witness;  // resolution metadata, for reports
};

// The class-order route: resolve the character lattice, then measure the
// invertibility defect of the flasque quotient through a second resolution.
// The torus is p-retract rational exactly for primes outside bad_primes, and
// retract rational exactly when the set is empty. The test suite re-derives
// that equivalence by a direct split test across the whole torus catalog.
Verdict torus_bad_primes(const Torus& t);

bool is_p_retract_rational(const Torus& t, const Int& p);
bool is_retract_rational(const Torus& t);

// The Sylow route, an independent second path: restrict the flasque
// quotient to a p-Sylow subgroup and decide full invertibility there.
bool verdict_via_sylow(const Torus& t, const Int& p);

// Character lattice J_G, dimension |G| - 1.
Torus norm_one_torus(const GroupPtr& g);

// Norm-one torus of the direct product of (Z/p)^2 over p in s, realized as
// a permutation group of degree 2*sum(s). Its bad primes are exactly s.
Torus theorem13_torus(const std::vector<Int>& s);

Torus dual_torus(const Torus& t);

// Retract rationality of the classifying stack BT: resolve coflasquely,
// then run the torus criterion on the kernel. Must agree with the dual
// torus's verdict; disagreement is an internal error.
Verdict classifying_stack_verdict(const Torus& t);

// A group of multiplicative type, presented by its character module:
// ambient lattice modulo the row span of relations (which must be
// action-stable). An empty relations matrix (zero rows) presents a torus.
struct MultiplicativeTypePresentation {
  GroupPtr group;
  GLattice ambient;
  IntMatrix relations;
};

// The torus whose BG-queries answer for the presented group: embed the
// presented module under a free cover (one regular block per ambient basis
// vector); the character lattice is the preimage of the relation span, with
// the induced action written in its Hermite basis.
Torus multiplicative_type_torus(const MultiplicativeTypePresentation& pres);

}  // namespace torat
