#include "torat/resolve.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace torat {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// One summand Z[G/H] of the cover under construction. The map on the block
// sends the coset xH to action(x)*u, which is well defined because u is
// H-fixed.
struct BlockSpec {
  Subgroup stabilizer;
  CosetDecomposition cosets;
  IntMatrix u;  // rank(m) x 1, fixed by the stabilizer
};

IntMatrix column_of(const std::vector<Int>& v) {
  IntMatrix c(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
  return c;
}

// Orbits of h on the cosets of blk.stabilizer, as lists of coset indices.
std::vector<std::vector<std::size_t>> coset_orbits(const Subgroup& h,
                                                   const BlockSpec& blk) {
  const auto& g = *h.parent;
  const auto gens = h.generators();
  const std::size_t nc = blk.cosets.reps.size();
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(nc, false);
  for (std::size_t start = 0; start < nc; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (auto s : gens) {
        std::size_t img = blk.cosets.coset_of[g.mul(s, blk.cosets.reps[orbit[k]])];
        if (!seen[img]) {
          seen[img] = true;
          orbit.push_back(img);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// Accumulates into lat the coordinates, relative to the row basis fixed_h of
// m^H, of the images of the block's H-fixed basis (one orbit sum per H-orbit
// of cosets).
void add_block_images(RowLattice& lat, const GLattice& m, const IntMatrix& fixed_h,
                      const Subgroup& h, const BlockSpec& blk) {
  if (fixed_h.rows() == 0) return;
  for (const auto& orbit : coset_orbits(h, blk)) {
    IntMatrix img(m.rank(), 1);
    for (auto j : orbit) img = img + m.action(blk.cosets.reps[j]) * blk.u;
    auto sol = solve(fixed_h.transposed(), img);
    if (!sol) throw internal_error("cover block image escapes the fixed sublattice");
    lat.add_row(sol->particular.transposed().row(0));
  }
}

std::vector<Int> unit_row(std::size_t i, std::size_t dim) {
  std::vector<Int> v(dim);
  v[i] = 1;
  return v;
}

// Index of the first basis vector of m^H not yet in the accumulated image,
// npos when the whole fixed sublattice is covered.
std::size_t first_missing(const RowLattice& lat, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i)
    if (!lat.contains(unit_row(i, dim))) return i;
  return npos;
}

}  // namespace

CoflasqueCover coflasque_cover(const GLattice& m) {
  const GroupPtr& g = m.group();
  const auto reps = subgroup_representatives(g);
  std::vector<IntMatrix> fixed_of;
  fixed_of.reserve(reps.size());
  for (const auto& h : reps) fixed_of.push_back(fixed_sublattice(m, h));

  // Walk subgroups from the full group down. Whenever a basis vector of m^H
  // is not in the image of the partial cover's H-fixed points, adjoin a
  // block Z[G/H] sending the identity coset to it. Coverage never shrinks,
  // and the new block covers the vector it was aimed at, so every m^H ends
  // up covered; H = 1 makes the whole map surjective. Among several missing
  // vectors, one whose block covers m^H single-handedly is preferred: for
  // m = Z[G/K] that finds the coset bijection and keeps the cover
  // kernel-free, where "completes the current image" would settle for an
  // orbit sum that only works jointly with blocks the delete pass removes.
  std::vector<BlockSpec> blocks;
  std::vector<RowLattice> images;
  for (const auto& fh : fixed_of) images.emplace_back(fh.rows());
  for (std::size_t ri = 0; ri < reps.size(); ++ri) {
    const std::size_t k = fixed_of[ri].rows();
    auto cosets = left_cosets(reps[ri]);
    while (first_missing(images[ri], k) != npos) {
      std::size_t fallback = npos;
      std::size_t choice = npos;
      for (std::size_t i = 0; i < k && choice == npos; ++i) {
        if (images[ri].contains(unit_row(i, k))) continue;
        if (fallback == npos) fallback = i;
        BlockSpec blk{reps[ri], cosets, column_of(fixed_of[ri].row(i))};
        RowLattice trial(k);
        add_block_images(trial, m, fixed_of[ri], reps[ri], blk);
        if (first_missing(trial, k) == npos) choice = i;
      }
      if (choice == npos) choice = fallback;
      BlockSpec blk{reps[ri], cosets, column_of(fixed_of[ri].row(choice))};
      for (std::size_t rj = 0; rj < reps.size(); ++rj)
        add_block_images(images[rj], m, fixed_of[rj], reps[rj], blk);
      blocks.push_back(std::move(blk));
    }
  }

  // Drop any block whose removal keeps every m^H covered, latest first. The
  // forward pass alone can leave redundant early blocks: a block added for a
  // large subgroup is often subsumed once smaller subgroups force bigger
  // blocks in, and without this pass the cover of a permutation lattice
  // would pick up a spurious kernel.
  auto covered = [&](const std::vector<char>& alive) {
    for (std::size_t ri = 0; ri < reps.size(); ++ri) {
      const std::size_t k = fixed_of[ri].rows();
      if (k == 0) continue;
      RowLattice lat(k);
      for (std::size_t bi = 0; bi < blocks.size(); ++bi)
        if (alive[bi])
          add_block_images(lat, m, fixed_of[ri], reps[ri], blocks[bi]);
      if (first_missing(lat, k) != npos) return false;
    }
    return true;
  };
  std::vector<char> alive(blocks.size(), 1);
  for (std::size_t bi = blocks.size(); bi-- > 0;) {
    alive[bi] = 0;
    if (!covered(alive)) alive[bi] = 1;
  }

  std::optional<GLattice> cover;
  IntMatrix project(m.rank(), 0);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    if (!alive[bi]) continue;
    const BlockSpec& blk = blocks[bi];
    GLattice part = permutation_lattice(blk.stabilizer);
    cover = cover ? direct_sum(*cover, part) : std::move(part);
    IntMatrix cols(m.rank(), blk.cosets.reps.size());
    for (std::size_t j = 0; j < blk.cosets.reps.size(); ++j) {
      IntMatrix col = m.action(blk.cosets.reps[j]) * blk.u;
      for (std::size_t i = 0; i < m.rank(); ++i) cols(i, j) = col(i, 0);
    }
    project = hstack(project, cols);
  }
  if (!cover) {
    std::vector<IntMatrix> acts(g->order(), IntMatrix(0, 0));
    cover.emplace(g, 0, std::move(acts), PermutationStructure{});
  }

  // Kernel of the projection in its canonical saturated basis, with the
  // action written in kernel coordinates.
  IntMatrix kb = kernel_basis(project.transposed());
  IntMatrix kbt = kb.transposed();
  std::vector<IntMatrix> kernel_action;
  kernel_action.reserve(g->order());
  for (std::size_t e = 0; e < g->order(); ++e) {
    auto sol = solve(kbt, cover->action(e) * kbt);
    if (!sol) throw internal_error("cover kernel is not stable under the action");
    kernel_action.push_back(std::move(sol->particular));
  }
  GLattice kernel(g, kb.rows(), std::move(kernel_action));

  CoflasqueCover result{
      ExactTriple{std::move(kernel), std::move(*cover), m, kbt, project}};

  auto report = result.triple.validate();
  if (!report.ok)
    throw internal_error("coflasque cover failed validation: " + report.message);
  // Re-verify surjectivity on fixed points directly from the assembled map,
  // independent of the incremental bookkeeping above.
  for (std::size_t ri = 0; ri < reps.size(); ++ri) {
    if (fixed_of[ri].rows() == 0) continue;
    IntMatrix fp = fixed_sublattice(result.triple.b, reps[ri]);
    auto sol = solve(fixed_of[ri].transposed(),
                     result.triple.project * fp.transposed());
    if (!sol || !cokernel_invariants(sol->particular.transposed()).trivial())
      throw internal_error("cover misses fixed points of a subgroup");
  }
  if (!is_coflasque(result.triple.a))
    throw internal_error("cover kernel is not coflasque");
  return result;
}

FlasqueResolution flasque_resolution(const GLattice& m) {
  auto cd = coflasque_cover(dual(m));
  ExactTriple t{dual(cd.triple.c), dual(cd.triple.b), dual(cd.triple.a),
                cd.triple.project.transposed(), cd.triple.inject.transposed()};
  auto report = t.validate();
  if (!report.ok)
    throw internal_error("flasque resolution failed validation: " + report.message);
  if (!is_flasque(t.c))
    throw internal_error("flasque resolution quotient is not flasque");
  FlasqueResolution r{std::move(t), Int(0)};
  r.class_order = extension_class_order(r.triple);
  return r;
}

std::vector<Int> lattice_bad_primes(const GLattice& m) {
  return distinct_prime_factors(flasque_resolution(m).class_order);
}

bool is_p_invertible(const GLattice& m, const Int& p) {
  if (!is_prime(p)) throw validation_error("is_p_invertible needs a prime");
  return flasque_resolution(m).class_order % p != 0;
}

bool is_invertible(const GLattice& m) {
  auto r = flasque_resolution(m);
  bool by_order = r.class_order == 1;
  if (splits(r.triple) != by_order)
    throw internal_error("split test and class order disagree");
  return by_order;
}

}  // namespace torat
