#include "torat/tori.hpp"

#include <algorithm>
#include <utility>

namespace torat {

namespace {

void require_prime(const Int& p, const char* who) {
  if (!is_prime(p)) throw validation_error(std::string(who) + " needs a prime");
}

IntMatrix column_of(const std::vector<Int>& v) {
  IntMatrix c(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
  return c;
}

std::string prime_set_label(const std::vector<Int>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ",";
    s += ps[i].str();
  }
  return s + "}";
}

}  // namespace

Torus make_torus(GroupPtr g, GLattice character_lattice, std::string label) {
  if (!g) throw validation_error("torus needs a Galois group");
  if (character_lattice.group() != g)
    throw validation_error("character lattice belongs to a different group");
  auto report = character_lattice.validate();
  if (!report.ok)
    throw validation_error("character lattice invalid: " + report.message);
  return Torus{std::move(g), std::move(character_lattice), std::move(label)};
}

Verdict torus_bad_primes(const Torus& t) {
  // The obstruction lives two levels down: resolve the character lattice,
  // then resolve the flasque quotient itself and read off its class order.
  FlasqueResolution first = flasque_resolution(t.character_lattice);
  FlasqueResolution second = flasque_resolution(first.flasque_quotient());
  Verdict v;
  v.bad_primes = distinct_prime_factors(second.class_order);
  v.retract_rational = v.bad_primes.empty();
  v.route = "class-order";
  v.witness = "flasque quotient rank " +
              std::to_string(first.flasque_quotient().rank()) +
              ", its own resolution has class order " +
              second.class_order.str();
  return v;
}

bool is_retract_rational(const Torus& t) {
  return torus_bad_primes(t).retract_rational;
}

bool is_p_retract_rational(const Torus& t, const Int& p) {
  require_prime(p, "is_p_retract_rational");
  Verdict v = torus_bad_primes(t);
  return std::find(v.bad_primes.begin(), v.bad_primes.end(), p) ==
         v.bad_primes.end();
}

bool verdict_via_sylow(const Torus& t, const Int& p) {
  require_prime(p, "verdict_via_sylow");
  FlasqueResolution first = flasque_resolution(t.character_lattice);
  Subgroup syl = sylow_subgroup(t.group, p);
  return is_invertible(restrict_lattice(first.flasque_quotient(), syl));
}

Torus norm_one_torus(const GroupPtr& g) {
  if (!g) throw validation_error("norm-one torus needs a group");
  std::string label =
      g->name().empty() ? "norm_one" : "norm_one:" + g->name();
  return make_torus(g, norm_one_lattice(g), std::move(label));
}

Torus theorem13_torus(const std::vector<Int>& s) {
  std::vector<Int> ps = s;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (const Int& p : ps) require_prime(p, "theorem13_torus");

  std::size_t degree = 0;
  Int order = 1;
  for (const Int& p : ps) {
    degree += 2 * p.convert_to<std::size_t>();
    order *= p * p;
  }
  if (order > 4096)
    throw validation_error("prime set yields a group of order " + order.str() +
                           ", past the supported size");

  // One pair of disjoint p-cycles per prime: the group is the product of the
  // squares (Z/p)^2, whose p-Sylow is visibly non-cyclic for every p in s.
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const Int& p : ps) {
    const std::size_t pp = p.convert_to<std::size_t>();
    for (std::size_t half = 0; half < 2; ++half) {
      Permutation perm(degree);
      for (std::size_t i = 0; i < degree; ++i) perm[i] = i;
      const std::size_t base = offset + half * pp;
      for (std::size_t i = 0; i < pp; ++i) perm[base + i] = base + (i + 1) % pp;
      gens.push_back(std::move(perm));
    }
    offset += 2 * pp;
  }
  if (gens.empty()) gens.push_back(Permutation{0});

  std::string name = "theorem13:" + prime_set_label(ps);
  GroupPtr g = FiniteGroup::from_generators(
      gens, name, order.convert_to<std::size_t>());
  return make_torus(g, norm_one_lattice(g), name);
}

Torus dual_torus(const Torus& t) {
  std::string label = t.label.empty() ? "dual" : "dual(" + t.label + ")";
  return make_torus(t.group, dual(t.character_lattice), std::move(label));
}

Verdict classifying_stack_verdict(const Torus& t) {
  CoflasqueCover cc = coflasque_cover(t.character_lattice);
  FlasqueResolution res = flasque_resolution(cc.kernel());
  std::vector<Int> bad = lattice_bad_primes(res.flasque_quotient());

  Verdict via_dual = torus_bad_primes(dual_torus(t));
  if (bad != via_dual.bad_primes)
    throw internal_error("stack pipeline disagrees with the dual torus route");

  Verdict v;
  v.bad_primes = std::move(bad);
  v.retract_rational = v.bad_primes.empty();
  v.route = "class-order";
  v.witness = "coflasque kernel rank " + std::to_string(cc.kernel().rank()) +
              ", agrees with the dual torus verdict";
  return v;
}

Torus multiplicative_type_torus(const MultiplicativeTypePresentation& pres) {
  const GroupPtr& g = pres.group;
  if (!g) throw validation_error("presentation needs a group");
  const GLattice& amb = pres.ambient;
  if (amb.group() != g)
    throw validation_error("ambient lattice belongs to a different group");
  auto report = amb.validate();
  if (!report.ok)
    throw validation_error("ambient lattice invalid: " + report.message);
  const IntMatrix& rel = pres.relations;
  if (rel.rows() > 0 && rel.cols() != amb.rank())
    throw validation_error("relation width differs from the ambient rank");

  const std::size_t n = amb.rank();
  const std::size_t go = g->order();

  // The relation span must be a sublattice the action preserves, else the
  // quotient is not a module at all.
  RowLattice span(n);
  for (std::size_t i = 0; i < rel.rows(); ++i) span.add_row(rel.row(i));
  for (std::size_t k : g->generator_indices()) {
    for (std::size_t i = 0; i < rel.rows(); ++i) {
      IntMatrix img = amb.action(k) * column_of(rel.row(i));
      std::vector<Int> row(n);
      for (std::size_t r = 0; r < n; ++r) row[r] = img(r, 0);
      if (!span.contains(std::move(row)))
        throw validation_error("relations are not stable under the action");
    }
  }

  // Free cover: one regular block per ambient basis vector, mapped by
  // psi(block i, position e) = action(e) applied to basis vector i. The
  // character lattice of the presented group is the full preimage of the
  // relation span, computed as a kernel over the stacked matrix.
  std::optional<GLattice> cover;
  for (std::size_t i = 0; i < n; ++i) {
    GLattice block = regular_lattice(g);
    cover = cover ? direct_sum(*cover, std::move(block)) : std::move(block);
  }
  if (!cover) {
    std::vector<IntMatrix> acts(go, IntMatrix(0, 0));
    cover.emplace(g, 0, std::move(acts), PermutationStructure{});
  }

  IntMatrix psi(n, n * go);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t e = 0; e < go; ++e)
      for (std::size_t r = 0; r < n; ++r)
        psi(r, i * go + e) = amb.action(e)(r, i);

  HermiteForm relhnf = hermite_normal_form(rel.rows() ? rel : IntMatrix(0, n));
  const std::size_t nr = relhnf.pivots.size();
  IntMatrix rbase(nr, n);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < n; ++j) rbase(i, j) = relhnf.h(i, j);

  IntMatrix stacked = vstack(psi.transposed(), Int(-1) * rbase);
  IntMatrix ker = kernel_basis(stacked);
  IntMatrix xpart(ker.rows(), n * go);
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t j = 0; j < n * go; ++j) xpart(i, j) = ker(i, j);

  HermiteForm basis_hnf = hermite_normal_form(xpart);
  const std::size_t rank = basis_hnf.pivots.size();
  IntMatrix basis(rank, n * go);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < n * go; ++j) basis(i, j) = basis_hnf.h(i, j);

  IntMatrix bt = basis.transposed();
  std::vector<IntMatrix> acts;
  acts.reserve(go);
  for (std::size_t e = 0; e < go; ++e) {
    auto sol = solve(bt, cover->action(e) * bt);
    if (!sol)
      throw internal_error("preimage lattice is not stable under the action");
    acts.push_back(std::move(sol->particular));
  }
  GLattice tchar(g, rank, std::move(acts));
  return make_torus(g, std::move(tchar), "multiplicative-type");
}

}  // namespace torat
