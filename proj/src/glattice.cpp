#include "torat/glattice.hpp"

#include <sstream>

namespace torat {

GLattice::GLattice(GroupPtr g, std::size_t rank,
                   std::vector<IntMatrix> action_by_element,
                   std::optional<PermutationStructure> perm)
    : group_(std::move(g)),
      rank_(rank),
      action_(std::move(action_by_element)),
      perm_(std::move(perm)) {
  if (action_.size() != group_->order())
    throw validation_error("action table size does not match group order");
  for (const auto& a : action_)
    if (a.rows() != rank_ || a.cols() != rank_)
      throw validation_error("action matrix shape does not match rank");
}

GLattice GLattice::from_generator_actions(
    GroupPtr g, const std::vector<IntMatrix>& gen_actions) {
  const auto& gidx = g->generator_indices();
  if (gen_actions.size() != gidx.size())
    throw validation_error("need one action matrix per group generator");
  const std::size_t rank = gen_actions.empty() ? 0 : gen_actions.front().rows();
  std::vector<IntMatrix> act(g->order());
  std::vector<char> have(g->order(), 0);
  act[FiniteGroup::kIdentity] = IntMatrix::identity(rank);
  have[FiniteGroup::kIdentity] = 1;
  // Elements are in breadth-first order, so row i*gen is reachable with
  // everything before i already filled.
  for (std::size_t i = 0; i < g->order(); ++i) {
    if (!have[i]) throw internal_error("element order is not breadth-first");
    for (std::size_t k = 0; k < gen_actions.size(); ++k) {
      std::size_t j = g->mul(i, gidx[k]);
      if (have[j]) continue;
      act[j] = act[i] * gen_actions[k];
      have[j] = 1;
    }
  }
  GLattice m(std::move(g), rank, std::move(act));
  auto report = m.validate();
  if (!report.ok) throw validation_error(report.message);
  return m;
}

GLattice::ValidationReport GLattice::validate() const {
  ValidationReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.message = std::move(msg);
    return r;
  };
  if (action_[FiniteGroup::kIdentity] != IntMatrix::identity(rank_))
    return fail("identity does not act as the identity matrix");
  for (std::size_t i = 0; i < action_.size(); ++i) {
    Int d = determinant(action_[i]);
    if (d != 1 && d != -1) {
      std::ostringstream os;
      os << "action of element " << i << " has determinant " << d;
      return fail(os.str());
    }
  }
  // Multiplicativity against generators propagates to all products.
  for (std::size_t i = 0; i < group_->order(); ++i)
    for (std::size_t k : group_->generator_indices()) {
      if (action_[group_->mul(i, k)] != action_[i] * action_[k]) {
        std::ostringstream os;
        os << "action is not multiplicative at pair (" << i << ", " << k << ")";
        return fail(os.str());
      }
    }
  return r;
}

GLattice trivial_lattice(GroupPtr g, std::size_t rank) {
  std::vector<IntMatrix> act(g->order(), IntMatrix::identity(rank));
  PermutationStructure ps;
  std::vector<std::size_t> all(g->order());
  for (std::size_t i = 0; i < g->order(); ++i) all[i] = i;
  for (std::size_t k = 0; k < rank; ++k)
    ps.blocks.push_back({all, {FiniteGroup::kIdentity}, k});
  return GLattice(std::move(g), rank, std::move(act), std::move(ps));
}

GLattice permutation_lattice(const Subgroup& h) {
  const GroupPtr& g = h.parent;
  auto cosets = left_cosets(h);
  const std::size_t rank = cosets.reps.size();
  std::vector<IntMatrix> act(g->order());
  for (std::size_t e = 0; e < g->order(); ++e) {
    IntMatrix a(rank, rank);
    for (std::size_t k = 0; k < rank; ++k)
      a(cosets.coset_of[g->mul(e, cosets.reps[k])], k) = 1;
    act[e] = std::move(a);
  }
  PermutationStructure ps;
  ps.blocks.push_back({h.elements, cosets.reps, 0});
  return GLattice(g, rank, std::move(act), std::move(ps));
}

GLattice regular_lattice(const GroupPtr& g) {
  return permutation_lattice(trivial_subgroup(g));
}

GLattice augmentation_ideal(const GroupPtr& g) {
  const std::size_t n = g->order();
  if (n == 1) return GLattice(g, 0, {IntMatrix(0, 0)});
  const std::size_t rank = n - 1;
  // Basis vector i-1 is element_i - identity, i = 1..n-1.
  std::vector<IntMatrix> act(n);
  for (std::size_t e = 0; e < n; ++e) {
    IntMatrix a(rank, rank);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t target = g->mul(e, i);
      if (target != FiniteGroup::kIdentity) a(target - 1, i - 1) += 1;
      if (e != FiniteGroup::kIdentity) a(e - 1, i - 1) -= 1;
    }
    act[e] = std::move(a);
  }
  return GLattice(g, rank, std::move(act));
}

GLattice norm_one_lattice(const GroupPtr& g) {
  return dual(augmentation_ideal(g));
}

GLattice dual(const GLattice& m) {
  const GroupPtr& g = m.group();
  std::vector<IntMatrix> act(g->order());
  for (std::size_t e = 0; e < g->order(); ++e)
    act[e] = m.action(g->inverse(e)).transposed();
  return GLattice(g, m.rank(), std::move(act), m.permutation_structure());
}

GLattice direct_sum(const GLattice& a, const GLattice& b) {
  if (a.group() != b.group())
    throw validation_error("direct sum needs a common group");
  const std::size_t rank = a.rank() + b.rank();
  std::vector<IntMatrix> act(a.group()->order());
  for (std::size_t e = 0; e < act.size(); ++e) {
    IntMatrix s(rank, rank);
    const IntMatrix& x = a.action(e);
    const IntMatrix& y = b.action(e);
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j) s(i, j) = x(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j)
        s(a.rank() + i, a.rank() + j) = y(i, j);
    act[e] = std::move(s);
  }
  std::optional<PermutationStructure> ps;
  if (a.permutation_structure() && b.permutation_structure()) {
    ps.emplace(*a.permutation_structure());
    for (auto blk : b.permutation_structure()->blocks) {
      blk.offset += a.rank();
      ps->blocks.push_back(std::move(blk));
    }
  }
  return GLattice(a.group(), rank, std::move(act), std::move(ps));
}

GLattice hom_lattice(const GLattice& m, const GLattice& n) {
  if (m.group() != n.group())
    throw validation_error("hom lattice needs a common group");
  const GroupPtr& g = m.group();
  std::vector<IntMatrix> act(g->order());
  for (std::size_t e = 0; e < g->order(); ++e)
    act[e] = kronecker(n.action(e), m.action(g->inverse(e)).transposed());
  return GLattice(g, m.rank() * n.rank(), std::move(act));
}

GLattice restrict_lattice(const GLattice& m, const Subgroup& h) {
  auto mat = materialize(h);
  std::vector<IntMatrix> act(mat.group->order());
  for (std::size_t i = 0; i < act.size(); ++i)
    act[i] = m.action(mat.to_parent[i]);
  return GLattice(mat.group, m.rank(), std::move(act));
}

IntMatrix fixed_sublattice(const GLattice& m, const Subgroup& h) {
  auto gens = h.generators();
  if (gens.empty()) return IntMatrix::identity(m.rank());
  IntMatrix stacked;
  for (std::size_t gi : gens)
    stacked = vstack(stacked, m.action(gi) - IntMatrix::identity(m.rank()));
  // Column kernel of the stack, returned as rows.
  return kernel_basis(stacked.transposed());
}

}  // namespace torat
