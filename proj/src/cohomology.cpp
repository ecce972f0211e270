#include "torat/cohomology.hpp"

#include <set>
#include <sstream>

namespace torat {

namespace {

IntMatrix norm_matrix(const GLattice& m, const std::vector<std::size_t>& elems) {
  IntMatrix n(m.rank(), m.rank());
  for (std::size_t e : elems) n = n + m.action(e);
  return n;
}

// Invariants of L / span(rows of w), where k is a saturated row basis of L
// and every row of w lies in L. The quotient must be finite.
FiniteAbelianGroup quotient_in_basis(const IntMatrix& k, const IntMatrix& w,
                                     const char* what) {
  auto sol = solve(k.transposed(), w.transposed());
  if (!sol)
    throw internal_error(std::string(what) +
                         ": denominator escapes the ambient lattice");
  auto q = cokernel_invariants(sol->particular.transposed());
  if (q.free_rank != 0)
    throw internal_error(std::string(what) + ": quotient has a free part");
  return FiniteAbelianGroup{std::move(q.factors)};
}

FiniteAbelianGroup tate_neg1(const GLattice& m, const Subgroup& h) {
  if (h.order() == 1) return {};
  IntMatrix n = norm_matrix(m, h.elements);
  IntMatrix ker = kernel_basis(n.transposed());
  IntMatrix w;
  // (g-1)M over generators spans (h-1)M over all of h.
  for (std::size_t gi : h.generators())
    w = vstack(w,
               (m.action(gi) - IntMatrix::identity(m.rank())).transposed());
  if (w.rows() == 0) w = IntMatrix(0, m.rank());
  return quotient_in_basis(ker, w, "tate degree -1");
}

FiniteAbelianGroup tate_0(const GLattice& m, const Subgroup& h) {
  IntMatrix fixed = fixed_sublattice(m, h);
  IntMatrix n = norm_matrix(m, h.elements);
  return quotient_in_basis(fixed, n.transposed(), "tate degree 0");
}

FiniteAbelianGroup tate_1(const GLattice& m, const Subgroup& h) {
  auto sub = materialize(h);
  const auto& k = sub.group;
  const std::size_t mo = k->order();
  const std::size_t r = m.rank();
  if (mo == 1 || r == 0) return {};
  auto sigma = [&](std::size_t i) -> const IntMatrix& {
    return m.action(sub.to_parent[i]);
  };

  // Cocycle conditions c(g*h) = c(g) + g.c(h) for generators g and all h;
  // every pair follows by induction on the word length of the left factor.
  // Unknowns are the values on the non-identity elements, flattened.
  std::set<std::size_t> gens(k->generator_indices().begin(),
                             k->generator_indices().end());
  const std::size_t unknowns = (mo - 1) * r;
  IntMatrix az(gens.size() * mo * r, unknowns);
  std::size_t base = 0;
  for (std::size_t g : gens) {
    for (std::size_t h2 = 0; h2 < mo; ++h2, base += r) {
      std::size_t prod = k->mul(g, h2);
      if (prod != FiniteGroup::kIdentity)
        for (std::size_t l = 0; l < r; ++l) az(base + l, (prod - 1) * r + l) += 1;
      for (std::size_t l = 0; l < r; ++l) az(base + l, (g - 1) * r + l) -= 1;
      if (h2 != FiniteGroup::kIdentity) {
        const IntMatrix& sg = sigma(g);
        for (std::size_t l = 0; l < r; ++l)
          for (std::size_t j = 0; j < r; ++j)
            az(base + l, (h2 - 1) * r + j) -= sg(l, j);
      }
    }
  }
  IntMatrix cocycles = kernel_basis(az.transposed());

  IntMatrix cob(r, unknowns);
  for (std::size_t i = 1; i < mo; ++i) {
    const IntMatrix& si = sigma(i);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t l = 0; l < r; ++l)
        cob(j, (i - 1) * r + l) = si(l, j) - (l == j ? 1 : 0);
  }
  return quotient_in_basis(cocycles, cob, "tate degree 1");
}

}  // namespace

std::string to_string(const FiniteAbelianGroup& a) {
  if (a.trivial()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.invariant_factors.size(); ++i)
    os << (i ? " x " : "") << "Z/" << a.invariant_factors[i];
  return os.str();
}

FiniteAbelianGroup tate(const GLattice& m, const Subgroup& h, int degree) {
  if (h.parent != m.group())
    throw validation_error("subgroup belongs to a different group");
  switch (degree) {
    case -1:
      return tate_neg1(m, h);
    case 0:
      return tate_0(m, h);
    case 1:
      return tate_1(m, h);
    default:
      throw validation_error("tate degree must be -1, 0, or 1");
  }
}

bool is_flasque(const GLattice& m) {
  for (const auto& h : subgroup_representatives(m.group()))
    if (!tate(m, h, -1).trivial()) return false;
  return true;
}

bool is_coflasque(const GLattice& m) {
  // Degree 1 on m has the invariant factors of degree -1 on the dual, and
  // the latter avoids the quadratic cocycle table. Cross-checked in tests.
  GLattice md = dual(m);
  for (const auto& h : subgroup_representatives(m.group()))
    if (!tate(md, h, -1).trivial()) return false;
  return true;
}

FiniteAbelianGroup ext1(const GLattice& f, const GLattice& m) {
  if (f.group() != m.group())
    throw validation_error("ext needs lattices over one group");
  return tate(hom_lattice(f, m), full_subgroup(f.group()), 1);
}

GLattice::ValidationReport ExactTriple::validate() const {
  GLattice::ValidationReport r;
  auto fail = [&](const char* msg) {
    r.ok = false;
    r.message = msg;
    return r;
  };
  if (a.group() != b.group() || b.group() != c.group())
    return fail("triple spans different groups");
  if (inject.rows() != b.rank() || inject.cols() != a.rank())
    return fail("inject has the wrong shape");
  if (project.rows() != c.rank() || project.cols() != b.rank())
    return fail("project has the wrong shape");
  if (kernel_basis(inject.transposed()).rows() != 0)
    return fail("inject is not injective");
  if (!cokernel_invariants(project.transposed()).trivial())
    return fail("project is not surjective");
  if (!(project * inject).is_zero())
    return fail("project after inject is not zero");
  IntMatrix ker = kernel_basis(project.transposed());
  auto im = hermite_normal_form(inject.transposed());
  IntMatrix imh(im.pivots.size(), b.rank());
  for (std::size_t i = 0; i < im.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) imh(i, j) = im.h(i, j);
  if (ker != imh) return fail("image and kernel differ in the middle");
  for (std::size_t k : a.group()->generator_indices()) {
    if (inject * a.action(k) != b.action(k) * inject)
      return fail("inject is not equivariant");
    if (project * b.action(k) != c.action(k) * project)
      return fail("project is not equivariant");
  }
  return r;
}

std::vector<IntMatrix> equivariant_maps_from_permutation(const GLattice& b,
                                                         const GLattice& a) {
  if (!b.permutation_structure())
    throw validation_error("source has no permutation structure");
  if (a.group() != b.group())
    throw validation_error("lattices over different groups");
  std::vector<IntMatrix> out;
  for (const auto& blk : b.permutation_structure()->blocks) {
    Subgroup hb{b.group(), blk.subgroup_elements};
    IntMatrix fixed = fixed_sublattice(a, hb);
    for (std::size_t fi = 0; fi < fixed.rows(); ++fi) {
      IntMatrix u(a.rank(), 1);
      for (std::size_t i = 0; i < a.rank(); ++i) u(i, 0) = fixed(fi, i);
      IntMatrix tau(a.rank(), b.rank());
      for (std::size_t kk = 0; kk < blk.coset_reps.size(); ++kk) {
        IntMatrix col = a.action(blk.coset_reps[kk]) * u;
        for (std::size_t i = 0; i < a.rank(); ++i)
          tau(i, blk.offset + kk) = col(i, 0);
      }
      out.push_back(std::move(tau));
    }
  }
  return out;
}

std::vector<IntMatrix> equivariant_maps_into_permutation(const GLattice& c,
                                                         const GLattice& b) {
  if (!b.permutation_structure())
    throw validation_error("target has no permutation structure");
  if (c.group() != b.group())
    throw validation_error("lattices over different groups");
  GLattice cd = dual(c);
  std::vector<IntMatrix> out;
  for (const auto& blk : b.permutation_structure()->blocks) {
    Subgroup hb{b.group(), blk.subgroup_elements};
    IntMatrix fixed = fixed_sublattice(cd, hb);
    for (std::size_t fi = 0; fi < fixed.rows(); ++fi) {
      IntMatrix w(c.rank(), 1);
      for (std::size_t j = 0; j < c.rank(); ++j) w(j, 0) = fixed(fi, j);
      IntMatrix sigma(b.rank(), c.rank());
      for (std::size_t kk = 0; kk < blk.coset_reps.size(); ++kk) {
        IntMatrix row = cd.action(blk.coset_reps[kk]) * w;
        for (std::size_t j = 0; j < c.rank(); ++j)
          sigma(blk.offset + kk, j) = row(j, 0);
      }
      out.push_back(std::move(sigma));
    }
  }
  return out;
}

namespace {

// Raw linear system for sections: unknowns are the entries of s (row-major),
// equations force equivariance and project*s = d*id. Returns the coefficient
// matrix; the right side is zeros followed by d*vec(id).
IntMatrix raw_section_system(const ExactTriple& t) {
  const std::size_t rb = t.b.rank(), rc = t.c.rank();
  IntMatrix sys(0, rb * rc);
  for (std::size_t k : t.a.group()->generator_indices()) {
    IntMatrix block =
        kronecker(IntMatrix::identity(rb), t.c.action(k).transposed()) -
        kronecker(t.b.action(k), IntMatrix::identity(rc));
    sys = vstack(sys, block);
  }
  return vstack(sys, kronecker(t.project, IntMatrix::identity(rc)));
}

IntMatrix raw_retraction_system(const ExactTriple& t) {
  const std::size_t ra = t.a.rank(), rb = t.b.rank();
  IntMatrix sys(0, ra * rb);
  for (std::size_t k : t.a.group()->generator_indices()) {
    IntMatrix block =
        kronecker(IntMatrix::identity(ra), t.b.action(k).transposed()) -
        kronecker(t.a.action(k), IntMatrix::identity(rb));
    sys = vstack(sys, block);
  }
  return vstack(sys, kronecker(IntMatrix::identity(ra), t.inject.transposed()));
}

IntMatrix raw_rhs(std::size_t total_rows, std::size_t idrank, const Int& d) {
  IntMatrix rhs(total_rows, 1);
  const std::size_t start = total_rows - idrank * idrank;
  for (std::size_t i = 0; i < idrank; ++i)
    rhs(start + i * idrank + i, 0) = d;
  return rhs;
}

Int class_order_raw(const ExactTriple& t) {
  const bool retraction = t.a.rank() <= t.c.rank();
  IntMatrix full =
      retraction ? raw_retraction_system(t) : raw_section_system(t);
  const std::size_t idrank = retraction ? t.a.rank() : t.c.rank();
  for (const Int& d : sorted_divisors(t.a.group()->order())) {
    if (solve(full, raw_rhs(full.rows(), idrank, d))) return d;
  }
  throw internal_error("class order does not divide the group order");
}

long long inverse_mod(long long u, long long m) {
  long long r0 = m, r1 = ((u % m) + m) % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    s0 -= q * s1;
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  return ((s0 % m) + m) % m;
}

// p-part of the least d with d*id in the row span of the candidate maps.
// The class order divides the group order, so its p-part is at most p^a with
// a = v_p(|G|), and is detected by homomorphisms Z^(n*n) -> Z/p^a that kill
// the span: the largest order taken by such a character at vec(id) is the
// p-part. Characters killing the span are kernel vectors of the generator
// matrix mod p^a, read off from a diagonalization over Z/p^a. Only the dot
// of each column-transform column with vec(id) is ever needed, so the
// transform is tracked as that single vector. All arithmetic is word-sized.
Int class_order_p_part(const std::vector<std::vector<Int>>& gens,
                       std::size_t n, long long p, std::size_t a) {
  const std::size_t m = n * n;
  long long mod = 1;
  for (std::size_t i = 0; i < a; ++i) mod *= p;
  auto val = [&](long long x) {
    if (x % mod == 0) return a;
    std::size_t v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };

  const std::size_t ng = gens.size();
  std::vector<std::vector<long long>> A(ng, std::vector<long long>(m));
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < m; ++j)
      A[i][j] = ((gens[i][j] % mod) + mod).convert_to<long long>() % mod;

  // Dot of vec(id) with each column of the (implicit) column transform.
  std::vector<long long> tw(m, 0);
  for (std::size_t i = 0; i < n; ++i) tw[i * n + i] = 1;

  std::vector<char> row_used(ng, 0), col_used(m, 0);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // column, valuation
  while (true) {
    std::size_t bi = ng, bj = m, bv = a;
    for (std::size_t i = 0; i < ng && bv > 0; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (col_used[j] || A[i][j] == 0) continue;
        std::size_t v = val(A[i][j]);
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
          if (bv == 0) break;
        }
      }
    }
    if (bi == ng) break;
    long long pv = 1;
    for (std::size_t i = 0; i < bv; ++i) pv *= p;
    long long inv = inverse_mod(A[bi][bj] / pv, mod);
    for (std::size_t r = 0; r < ng; ++r)
      if (!row_used[r]) A[r][bj] = (A[r][bj] * inv) % mod;
    tw[bj] = (tw[bj] * inv) % mod;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == bj || col_used[j] || A[bi][j] == 0) continue;
      long long q = A[bi][j] / pv;
      for (std::size_t r = 0; r < ng; ++r)
        if (!row_used[r])
          A[r][j] = ((A[r][j] - q * A[r][bj]) % mod + mod) % mod;
      tw[j] = ((tw[j] - q * tw[bj]) % mod + mod) % mod;
    }
    for (std::size_t r = 0; r < ng; ++r)
      if (!row_used[r]) A[r][bj] = 0;
    A[bi][bj] = pv % mod;
    row_used[bi] = 1;
    col_used[bj] = 1;
    pivots.emplace_back(bj, bv);
  }

  // Kernel of the diagonalized matrix: free columns outright, pivot columns
  // scaled by p^(a-v). Track the smallest valuation any character gives to
  // vec(id).
  std::size_t best = a;
  for (std::size_t j = 0; j < m && best > 0; ++j)
    if (!col_used[j]) best = std::min(best, val(tw[j]));
  for (const auto& [j, v] : pivots) {
    if (v == 0 || best == 0) continue;
    long long scale = 1;
    for (std::size_t i = 0; i < a - v; ++i) scale *= p;
    best = std::min(best, val((tw[j] * scale) % mod));
  }

  Int part = 1;
  for (std::size_t i = 0; i < a - best; ++i) part *= p;
  return part;
}

}  // namespace

Int extension_class_order(const ExactTriple& t) {
  if (!t.b.permutation_structure()) return class_order_raw(t);
  const bool retraction = t.a.rank() <= t.c.rank();
  const std::size_t n = retraction ? t.a.rank() : t.c.rank();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> gens;
  if (retraction) {
    for (const auto& tau : equivariant_maps_from_permutation(t.b, t.a))
      gens.push_back(vec_rowmajor(tau * t.inject));
  } else {
    for (const auto& sg : equivariant_maps_into_permutation(t.c, t.b))
      gens.push_back(vec_rowmajor(t.project * sg));
  }
  if (gens.empty())
    throw internal_error("no candidate maps to parametrize the class order");
  const Int order(t.a.group()->order());
  Int d = 1;
  for (const Int& p : distinct_prime_factors(order)) {
    std::size_t a = 0;
    Int q = order;
    while (q % p == 0) {
      q /= p;
      ++a;
    }
    d *= class_order_p_part(gens, n, p.convert_to<long long>(), a);
  }
  return d;
}

bool splits(const ExactTriple& t) {
  // A section of project and a retraction of inject exist together; solve
  // whichever raw system is smaller.
  const bool retraction = t.a.rank() <= t.c.rank();
  IntMatrix full =
      retraction ? raw_retraction_system(t) : raw_section_system(t);
  const std::size_t idrank = retraction ? t.a.rank() : t.c.rank();
  return solve(full, raw_rhs(full.rows(), idrank, 1)).has_value();
}

std::optional<IntMatrix> section_witness(const ExactTriple& t, const Int& d) {
  if (d < 1) throw validation_error("witness scale must be positive");
  const std::size_t rb = t.b.rank(), rc = t.c.rank();
  std::optional<IntMatrix> s;
  if (t.b.permutation_structure()) {
    auto basis = equivariant_maps_into_permutation(t.c, t.b);
    IntMatrix msys(rc * rc, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto v = vec_rowmajor(t.project * basis[i]);
      for (std::size_t j = 0; j < v.size(); ++j) msys(j, i) = v[j];
    }
    IntMatrix rhs(rc * rc, 1);
    for (std::size_t i = 0; i < rc; ++i) rhs(i * rc + i, 0) = d;
    auto sol = solve(msys, rhs);
    if (!sol) return std::nullopt;
    IntMatrix acc(rb, rc);
    for (std::size_t i = 0; i < basis.size(); ++i)
      acc = acc + sol->particular(i, 0) * basis[i];
    s = std::move(acc);
  } else {
    IntMatrix full = raw_section_system(t);
    auto sol = solve(full, raw_rhs(full.rows(), rc, d));
    if (!sol) return std::nullopt;
    IntMatrix acc(rb, rc);
    for (std::size_t i = 0; i < rb; ++i)
      for (std::size_t j = 0; j < rc; ++j) acc(i, j) = sol->particular(i * rc + j, 0);
    s = std::move(acc);
  }
  if (t.project * *s != d * IntMatrix::identity(rc))
    throw internal_error("witness does not scale the identity");
  for (std::size_t k : t.a.group()->generator_indices())
    if (*s * t.c.action(k) != t.b.action(k) * *s)
      throw internal_error("witness is not equivariant");
  return s;
}

}  // namespace torat
