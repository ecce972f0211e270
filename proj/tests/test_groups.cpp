#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "torat/groups.hpp"

using namespace torat;

namespace {

GroupPtr klein4() {
  return FiniteGroup::from_generators({{1, 0, 2, 3}, {0, 1, 3, 2}}, "klein4");
}
GroupPtr s3() { return FiniteGroup::from_generators({{1, 0, 2}, {1, 2, 0}}, "s3"); }
GroupPtr a4() {
  return FiniteGroup::from_generators({{1, 2, 0, 3}, {1, 0, 3, 2}}, "a4");
}

}  // namespace

TEST_CASE("closure, identity index, multiplication convention") {
  auto g = s3();
  CHECK(g->order() == 6);
  CHECK(g->degree() == 3);
  CHECK(g->element(FiniteGroup::kIdentity) == Permutation{0, 1, 2});
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      const auto& pa = g->element(a);
      const auto& pb = g->element(b);
      const auto& pc = g->element(g->mul(a, b));
      for (std::size_t x = 0; x < 3; ++x) CHECK(pc[x] == pa[pb[x]]);
    }
  for (std::size_t a = 0; a < 6; ++a)
    CHECK(g->mul(a, g->inverse(a)) == FiniteGroup::kIdentity);
}

TEST_CASE("words rebuild elements from generators") {
  auto g = a4();
  CHECK(g->order() == 12);
  for (std::size_t i = 0; i < g->order(); ++i) {
    std::size_t acc = FiniteGroup::kIdentity;
    for (std::size_t k : g->word(i))
      acc = g->mul(acc, g->generator_indices()[k]);
    CHECK(acc == i);
  }
}

TEST_CASE("element orders and abelianness") {
  auto v = klein4();
  CHECK(v->is_abelian());
  for (std::size_t i = 1; i < 4; ++i) CHECK(v->element_order(i) == 2);
  auto g = s3();
  CHECK(!g->is_abelian());
  std::size_t n2 = 0, n3 = 0;
  for (std::size_t i = 1; i < 6; ++i) {
    auto o = g->element_order(i);
    if (o == 2) ++n2;
    if (o == 3) ++n3;
  }
  CHECK(n2 == 3);
  CHECK(n3 == 2);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(FiniteGroup::from_generators({}), validation_error);
  CHECK_THROWS_AS(FiniteGroup::from_generators({{0, 0, 1}}), validation_error);
  CHECK_THROWS_AS(FiniteGroup::from_generators({{1, 0}, {0, 2, 1}}),
                  validation_error);
  CHECK_THROWS_AS(FiniteGroup::from_generators({{1, 0, 2}, {1, 2, 0}}, "", 5),
                  validation_error);
  CHECK_THROWS_AS(s3()->index_of({2, 1, 0, 3}), validation_error);
}

TEST_CASE("subgroup representatives match the known counts") {
  CHECK(subgroup_representatives(klein4()).size() == 5);
  CHECK(subgroup_representatives(s3()).size() == 4);
  CHECK(subgroup_representatives(a4()).size() == 5);

  auto reps = subgroup_representatives(s3());
  CHECK(reps.front().is_full());
  CHECK(reps.back().order() == 1);
  for (std::size_t i = 0; i + 1 < reps.size(); ++i)
    CHECK(reps[i].order() >= reps[i + 1].order());

  // s3 has six subgroups in total: 1, three of order 2, one of order 3, s3.
  CHECK(s3()->all_subgroup_elements().size() == 6);
  CHECK(klein4()->all_subgroup_elements().size() == 5);
}

TEST_CASE("representatives are least in their conjugacy class") {
  auto g = s3();
  auto reps = subgroup_representatives(g);
  for (const auto& h : reps) {
    for (std::size_t c = 0; c < g->order(); ++c) {
      std::vector<std::size_t> conj;
      for (std::size_t s : h.elements)
        conj.push_back(g->mul(c, g->mul(s, g->inverse(c))));
      std::sort(conj.begin(), conj.end());
      CHECK(h.elements <= conj);
    }
  }
}

TEST_CASE("subgroup generators regenerate the subgroup") {
  for (auto g : {klein4(), s3(), a4()}) {
    for (const auto& h : subgroup_representatives(g)) {
      auto back = subgroup_closure(g, h.generators());
      CHECK(back.elements == h.elements);
      if (h.order() == 1) CHECK(h.generators().empty());
    }
  }
}

TEST_CASE("sylow subgroups") {
  auto g = s3();
  CHECK(sylow_subgroup(g, 2).order() == 2);
  CHECK(sylow_subgroup(g, 3).order() == 3);
  CHECK(sylow_subgroup(g, 5).order() == 1);
  CHECK_THROWS_AS(sylow_subgroup(g, 4), validation_error);

  auto v = sylow_subgroup(a4(), 2);
  CHECK(v.order() == 4);
  CHECK(!is_cyclic(v));
  CHECK(is_cyclic(sylow_subgroup(a4(), 3)));
  CHECK(is_cyclic(trivial_subgroup(g)));
}

TEST_CASE("left cosets partition the group") {
  auto g = s3();
  auto reps = subgroup_representatives(g);
  for (const auto& h : reps) {
    auto d = left_cosets(h);
    CHECK(d.reps.size() * h.order() == g->order());
    CHECK(d.reps[0] == FiniteGroup::kIdentity);
    for (std::size_t i = 0; i + 1 < d.reps.size(); ++i)
      CHECK(d.reps[i] < d.reps[i + 1]);
    // Every element is in the coset of its rep.
    for (std::size_t x = 0; x < g->order(); ++x) {
      std::size_t k = d.coset_of[x];
      bool found = false;
      for (std::size_t s : h.elements)
        if (g->mul(d.reps[k], s) == x) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("materialized subgroups are honest groups") {
  auto g = a4();
  for (const auto& h : subgroup_representatives(g)) {
    auto m = materialize(h);
    CHECK(m.group->order() == h.order());
    for (std::size_t i = 0; i < m.group->order(); ++i) {
      CHECK(h.contains(m.to_parent[i]));
      CHECK(g->element(m.to_parent[i]) == m.group->element(i));
    }
    // The index map is a homomorphism.
    for (std::size_t a = 0; a < m.group->order(); ++a)
      for (std::size_t b = 0; b < m.group->order(); ++b)
        CHECK(m.to_parent[m.group->mul(a, b)] ==
              g->mul(m.to_parent[a], m.to_parent[b]));
  }
}
