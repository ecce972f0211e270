#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "torat/errors.hpp"
#include "torat/exact.hpp"

namespace torat {

// A permutation of {0, ..., degree-1}, stored as the image sequence.
using Permutation = std::vector<std::size_t>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group given by permutation generators, closed on construction.
// Elements are indexed deterministically: identity is index 0, the rest in
// breadth-first order over right multiplication by the generators. Products
// compose right to left: mul(a, b) applies b first.
class FiniteGroup {
 public:
  static GroupPtr from_generators(const std::vector<Permutation>& gens,
                                  std::string name = "",
                                  std::size_t order_cap = 100);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }

  static constexpr std::size_t kIdentity = 0;
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t mul(std::size_t a, std::size_t b) const {
    return table_[a * elements_.size() + b];
  }
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  std::size_t element_order(std::size_t a) const;
  std::size_t index_of(const Permutation& p) const;

  const std::vector<std::size_t>& generator_indices() const {
    return generator_indices_;
  }
  // Element i as a product of generators, leftmost factor first; empty for
  // the identity. Lets callers extend any map defined on generators.
  const std::vector<std::size_t>& word(std::size_t i) const {
    return words_[i];
  }

  bool is_abelian() const;

  // Element-index sets of all subgroups and of one representative per
  // conjugacy class, computed once per group and cached.
  const std::vector<std::vector<std::size_t>>& all_subgroup_elements() const;
  const std::vector<std::vector<std::size_t>>& subgroup_rep_elements() const;

 private:
  FiniteGroup() = default;

  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> generator_indices_;
  std::vector<std::vector<std::size_t>> words_;
  std::map<Permutation, std::size_t> index_;

  mutable std::vector<std::vector<std::size_t>> all_subgroups_;
  mutable std::vector<std::vector<std::size_t>> subgroup_reps_;
  mutable bool subgroups_done_ = false;
};

// A subgroup as a sorted set of element indices of a parent group.
struct Subgroup {
  GroupPtr parent;
  std::vector<std::size_t> elements;  // sorted, always contains index 0

  std::size_t order() const { return elements.size(); }
  bool contains(std::size_t gi) const;
  bool is_full() const { return elements.size() == parent->order(); }

  // A small generating set, chosen greedily by ascending element index.
  std::vector<std::size_t> generators() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.elements == b.elements;
  }
};

Subgroup full_subgroup(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup subgroup_closure(const GroupPtr& g, std::vector<std::size_t> seed);

// One subgroup per conjugacy class (the lexicographically least element set
// in its class), sorted by decreasing order and then lexicographically.
// First entry is the full group, last is the trivial subgroup.
std::vector<Subgroup> subgroup_representatives(const GroupPtr& g);

// A Sylow p-subgroup (the representative of the unique conjugacy class).
// Trivial when p does not divide the order.
Subgroup sylow_subgroup(const GroupPtr& g, const Int& p);

bool is_cyclic(const Subgroup& h);

// Left cosets of h: reps[k] is the least element index in coset k, and
// coset_of maps every element index to its coset. Coset 0 is h itself.
struct CosetDecomposition {
  std::vector<std::size_t> reps;
  std::vector<std::size_t> coset_of;
};
CosetDecomposition left_cosets(const Subgroup& h);

// The subgroup as a group in its own right, acting on the parent's points,
// with the index map from new element indices back into the parent.
struct MaterializedSubgroup {
  GroupPtr group;
  std::vector<std::size_t> to_parent;
};
MaterializedSubgroup materialize(const Subgroup& h);

}  // namespace torat
