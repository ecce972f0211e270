#include "torat/groups.hpp"

#include <algorithm>
#include <set>

namespace torat {

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a*b)(x) = a(b(x)): b acts first.
  Permutation c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

GroupPtr FiniteGroup::from_generators(const std::vector<Permutation>& gens,
                                      std::string name,
                                      std::size_t order_cap) {
  if (gens.empty()) throw validation_error("group needs at least one generator");
  const std::size_t deg = gens.front().size();
  if (deg == 0) throw validation_error("permutation degree must be positive");
  for (const auto& g : gens) {
    if (g.size() != deg)
      throw validation_error("generators act on different point sets");
    if (!is_permutation(g))
      throw validation_error("generator is not a permutation");
  }

  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->degree_ = deg;
  grp->name_ = std::move(name);

  Permutation id(deg);
  for (std::size_t x = 0; x < deg; ++x) id[x] = x;
  grp->elements_.push_back(id);
  grp->words_.push_back({});
  grp->index_[id] = 0;

  for (std::size_t cur = 0; cur < grp->elements_.size(); ++cur) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation next = compose(grp->elements_[cur], gens[k]);
      if (grp->index_.count(next)) continue;
      if (grp->elements_.size() >= order_cap)
        throw validation_error("group closure exceeds the order cap");
      grp->index_[next] = grp->elements_.size();
      grp->elements_.push_back(std::move(next));
      auto w = grp->words_[cur];
      w.push_back(k);
      grp->words_.push_back(std::move(w));
    }
  }

  const std::size_t n = grp->elements_.size();
  grp->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      grp->table_[a * n + b] =
          grp->index_.at(compose(grp->elements_[a], grp->elements_[b]));

  grp->inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (grp->table_[a * n + b] == kIdentity) {
        grp->inverses_[a] = b;
        break;
      }

  for (const auto& g : gens) grp->generator_indices_.push_back(grp->index_.at(g));
  return grp;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t x = a, k = 1;
  while (x != kIdentity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw validation_error("permutation is not an element of the group");
  return it->second;
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

const std::vector<std::vector<std::size_t>>&
FiniteGroup::all_subgroup_elements() const {
  subgroup_rep_elements();
  return all_subgroups_;
}

const std::vector<std::vector<std::size_t>>&
FiniteGroup::subgroup_rep_elements() const {
  if (subgroups_done_) return subgroup_reps_;
  const std::size_t n = order();

  auto closure = [&](std::vector<std::size_t> seed) {
    std::vector<char> in(n, 0);
    std::vector<std::size_t> mem;
    auto add = [&](std::size_t x) {
      if (!in[x]) {
        in[x] = 1;
        mem.push_back(x);
      }
    };
    add(kIdentity);
    for (std::size_t s : seed) add(s);
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        add(mul(mem[i], mem[j]));
        add(mul(mem[j], mem[i]));
      }
    std::sort(mem.begin(), mem.end());
    return mem;
  };

  // Every subgroup arises by repeatedly adjoining one element, starting from
  // the trivial subgroup, so a worklist over (known subgroup, element) pairs
  // reaches all of them.
  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> work;
  found.insert({kIdentity});
  work.push_back({kIdentity});
  while (!work.empty()) {
    auto h = std::move(work.back());
    work.pop_back();
    for (std::size_t g = 1; g < n; ++g) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      auto seed = h;
      seed.push_back(g);
      auto k = closure(std::move(seed));
      if (found.insert(k).second) work.push_back(std::move(k));
    }
  }

  all_subgroups_.assign(found.begin(), found.end());
  auto by_order_then_lex = [](const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  };
  std::sort(all_subgroups_.begin(), all_subgroups_.end(), by_order_then_lex);

  std::set<std::vector<std::size_t>> unclassified(found.begin(), found.end());
  for (const auto& h : all_subgroups_) {
    if (!unclassified.count(h)) continue;
    std::vector<std::size_t> best = h;
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::size_t> conj;
      conj.reserve(h.size());
      for (std::size_t s : h) conj.push_back(mul(g, mul(s, inverse(g))));
      std::sort(conj.begin(), conj.end());
      unclassified.erase(conj);
      if (conj < best) best = std::move(conj);
    }
    subgroup_reps_.push_back(std::move(best));
  }
  std::sort(subgroup_reps_.begin(), subgroup_reps_.end(), by_order_then_lex);
  subgroups_done_ = true;
  return subgroup_reps_;
}

bool Subgroup::contains(std::size_t gi) const {
  return std::binary_search(elements.begin(), elements.end(), gi);
}

std::vector<std::size_t> Subgroup::generators() const {
  std::vector<std::size_t> gens;
  Subgroup span = trivial_subgroup(parent);
  for (std::size_t gi : elements) {
    if (span.contains(gi)) continue;
    gens.push_back(gi);
    auto seed = span.elements;
    seed.push_back(gi);
    span = subgroup_closure(parent, std::move(seed));
    if (span.order() == order()) break;
  }
  return gens;
}

Subgroup full_subgroup(const GroupPtr& g) {
  Subgroup h{g, {}};
  h.elements.resize(g->order());
  for (std::size_t i = 0; i < g->order(); ++i) h.elements[i] = i;
  return h;
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return Subgroup{g, {FiniteGroup::kIdentity}};
}

Subgroup subgroup_closure(const GroupPtr& g, std::vector<std::size_t> seed) {
  const std::size_t n = g->order();
  std::vector<char> in(n, 0);
  std::vector<std::size_t> mem;
  auto add = [&](std::size_t x) {
    if (x >= n) throw validation_error("element index out of range");
    if (!in[x]) {
      in[x] = 1;
      mem.push_back(x);
    }
  };
  add(FiniteGroup::kIdentity);
  for (std::size_t s : seed) add(s);
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(g->mul(mem[i], mem[j]));
      add(g->mul(mem[j], mem[i]));
    }
  std::sort(mem.begin(), mem.end());
  return Subgroup{g, std::move(mem)};
}

std::vector<Subgroup> subgroup_representatives(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (const auto& elems : g->subgroup_rep_elements())
    out.push_back(Subgroup{g, elems});
  return out;
}

Subgroup sylow_subgroup(const GroupPtr& g, const Int& p) {
  if (p < 2 || distinct_prime_factors(p).size() != 1 ||
      distinct_prime_factors(p)[0] != p)
    throw validation_error("sylow subgroup asked for a non-prime");
  std::size_t pk = 1;
  Int n = g->order();
  while (n % p == 0) {
    n /= p;
    pk *= static_cast<std::size_t>(p);
  }
  if (pk == 1) return trivial_subgroup(g);
  for (const auto& elems : g->subgroup_rep_elements())
    if (elems.size() == pk) return Subgroup{g, elems};
  throw internal_error("no subgroup of full prime power order");
}

bool is_cyclic(const Subgroup& h) {
  for (std::size_t gi : h.elements)
    if (h.parent->element_order(gi) == h.order()) return true;
  return false;
}

CosetDecomposition left_cosets(const Subgroup& h) {
  const std::size_t n = h.parent->order();
  CosetDecomposition d;
  d.coset_of.assign(n, n);
  for (std::size_t gi = 0; gi < n; ++gi) {
    if (d.coset_of[gi] != n) continue;
    const std::size_t k = d.reps.size();
    d.reps.push_back(gi);
    for (std::size_t s : h.elements) d.coset_of[h.parent->mul(gi, s)] = k;
  }
  return d;
}

MaterializedSubgroup materialize(const Subgroup& h) {
  std::vector<Permutation> gens;
  for (std::size_t gi : h.generators()) gens.push_back(h.parent->element(gi));
  if (gens.empty()) {
    Permutation id(h.parent->degree());
    for (std::size_t x = 0; x < id.size(); ++x) id[x] = x;
    gens.push_back(id);
  }
  MaterializedSubgroup m;
  m.group = FiniteGroup::from_generators(gens, "", h.parent->order() + 1);
  if (m.group->order() != h.order())
    throw internal_error("materialized subgroup has wrong order");
  m.to_parent.resize(m.group->order());
  for (std::size_t i = 0; i < m.group->order(); ++i)
    m.to_parent[i] = h.parent->index_of(m.group->element(i));
  return m;
}

}  // namespace torat
