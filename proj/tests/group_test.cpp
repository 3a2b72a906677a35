#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "corpus.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/group.hpp"

using namespace jordanlab;
using namespace jordanlab::group;

namespace {

// Conjugacy orbits computed from element arithmetic alone (no Cayley table).
std::multiset<std::size_t> brute_class_sizes(const FiniteGroup& g) {
  std::set<std::string> done;
  std::multiset<std::size_t> sizes;
  for (const auto& x : g.elements()) {
    if (done.count(x.key())) continue;
    std::set<std::string> orbit;
    for (const auto& y : g.elements()) orbit.insert((y * x * y.inverse()).key());
    done.insert(orbit.begin(), orbit.end());
    sizes.insert(orbit.size());
  }
  return sizes;
}

// Closure of all commutators using element arithmetic alone.
std::size_t brute_commutator_order(const FiniteGroup& g) {
  std::map<std::string, GroupElement> seeds;
  for (const auto& a : g.elements())
    for (const auto& b : g.elements()) {
      GroupElement c = a * b * a.inverse() * b.inverse();
      seeds.emplace(c.key(), c);
    }
  std::map<std::string, GroupElement> span;
  const GroupElement id = g.element(0);
  span.emplace(id.key(), id);
  std::vector<GroupElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& [k, s] : seeds) {
        GroupElement y = x * s;
        if (span.emplace(y.key(), y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return span.size();
}

}  // namespace

TEST_CASE("closure orders") {
  CHECK(corpus::s3().order() == 6);
  CHECK(corpus::perm_group(5, {{{1, 3, 4, 5, 2}}}).order() == 5);
  CHECK(corpus::perm_group(5, {{{1, 3, 4, 5, 2}}, {{3, 2}, {4, 5}}}).order() == 10);
  CHECK(corpus::q8().order() == 8);
  CHECK(corpus::s5().order() == 120);
  CHECK(corpus::a5().order() == 60);
}

TEST_CASE("identity is element zero and inverses are consistent") {
  for (const auto& [name, g] : corpus::small_groups()) {
    CAPTURE(name);
    CHECK(g.element(0) == g.element(0).identity_like());
    for (Index i = 0; i < g.order(); ++i) {
      CHECK(g.mul(i, g.inverse(i)) == 0);
      CHECK(g.element(g.inverse(i)) == g.element(i).inverse());
    }
  }
}

TEST_CASE("Cayley table is a Latin square and matches element arithmetic") {
  for (const auto& [name, g] : corpus::small_groups()) {
    CAPTURE(name);
    const std::size_t k = g.order();
    for (Index i = 0; i < k; ++i) {
      std::vector<bool> row(k), col(k);
      for (Index j = 0; j < k; ++j) {
        row[g.mul(i, j)] = true;
        col[g.mul(j, i)] = true;
      }
      CHECK(std::all_of(row.begin(), row.end(), [](bool b) { return b; }));
      CHECK(std::all_of(col.begin(), col.end(), [](bool b) { return b; }));
    }
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
      Index a = rng() % k, b = rng() % k;
      CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
    }
  }
}

TEST_CASE("Lagrange spot check on random elements") {
  const FiniteGroup h = lemma52::build_group(5);
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    Index a = rng() % h.order();
    CHECK(h.order() % h.element_order(a) == 0);
  }
}

TEST_CASE("closure is deterministic") {
  CHECK(corpus::s4().serialize() == corpus::s4().serialize());
  CHECK(lemma52::build_group(3).serialize() == lemma52::build_group(3).serialize());
}

TEST_CASE("closure errors") {
  std::vector<GroupElement> gens{corpus::perm(5, {{1, 2, 3, 4, 5}}), corpus::perm(5, {{1, 2}})};
  try {
    close_generators(gens, 100);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  std::vector<GroupElement> mixed{corpus::perm(3, {{1, 2}}), GroupElement(ModMatrix{2, 3, {0, 1, 1, 0}})};
  try {
    close_generators(mixed);
    FAIL("expected IncompatiblePayloads");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatiblePayloads);
  }
  std::vector<GroupElement> degrees{corpus::perm(3, {{1, 2}}), corpus::perm(4, {{1, 2}})};
  CHECK_THROWS_AS(close_generators(degrees), Error);
  CHECK_THROWS_AS(close_generators(std::vector<GroupElement>{}), Error);
}

TEST_CASE("matrix payloads generate SL(2,3)") {
  std::vector<GroupElement> gens{GroupElement(ModMatrix{2, 3, {1, 1, 0, 1}}),
                                 GroupElement(ModMatrix{2, 3, {1, 0, 1, 1}})};
  const FiniteGroup g = close_generators(gens);
  CHECK(g.order() == 24);
  CHECK(sign_characters(g).size() == 1);
}

TEST_CASE("canonical keys separate payload kinds") {
  GroupElement p = corpus::perm(2, {});
  GroupElement m(ModMatrix{1, 2, {1}});
  CHECK(p.key() != m.key());
  CHECK(p.key()[0] != m.key()[0]);
}

TEST_CASE("conjugacy classes") {
  SUBCASE("S3") {
    const FiniteGroup g = corpus::s3();
    auto classes = conjugacy_classes(g);
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == std::vector<Index>{0});
    std::multiset<std::size_t> sizes;
    for (const auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  }
  SUBCASE("abelian groups have singleton classes") {
    for (const FiniteGroup& g : {corpus::c6(), corpus::c4xc2()}) CHECK(conjugacy_classes(g).size() == g.order());
  }
  SUBCASE("dihedral group of order 12 against a brute-force orbit count") {
    const FiniteGroup g = corpus::d12();
    auto oracle = brute_class_sizes(g);
    CHECK(oracle.size() == 6);
    auto classes = conjugacy_classes(g);
    CHECK(classes.size() == 6);
    std::multiset<std::size_t> sizes;
    for (const auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == oracle);
  }
  SUBCASE("ordering and divisibility") {
    for (const auto& [name, g] : corpus::small_groups()) {
      CAPTURE(name);
      auto classes = conjugacy_classes(g);
      CHECK(classes[0] == std::vector<Index>{0});
      std::size_t total = 0;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        total += classes[i].size();
        CHECK(g.order() % classes[i].size() == 0);
        if (i > 1) CHECK(classes[i - 1].size() <= classes[i].size());
      }
      CHECK(total == g.order());
    }
  }
}

TEST_CASE("commutator subgroup") {
  CHECK(commutator_subgroup(corpus::c4xc2()).order() == 1);
  CHECK(commutator_subgroup(corpus::s5()).order() == 60);
  const FiniteGroup g10 = corpus::perm_group(5, {{{1, 3, 4, 5, 2}}, {{3, 2}, {4, 5}}});
  CHECK(brute_commutator_order(g10) == 5);
  CHECK(commutator_subgroup(g10).order() == 5);
  for (const auto& [name, g] : corpus::small_groups()) {
    CAPTURE(name);
    auto d = commutator_subgroup(g);
    CHECK(d.order() == brute_commutator_order(g));
    CHECK(is_normal(g, d));
  }
}

TEST_CASE("sign characters") {
  CHECK(sign_characters(corpus::a5()).size() == 1);
  CHECK(sign_characters(corpus::s5()).size() == 2);
  CHECK(sign_characters(corpus::c4()).size() == 2);
  CHECK(sign_characters(corpus::c4xc2()).size() == 4);
  for (const auto& [name, g] : corpus::small_groups()) {
    CAPTURE(name);
    auto chars = sign_characters(g);
    auto d = commutator_subgroup(g);
    REQUIRE_FALSE(chars.empty());
    CHECK(std::all_of(chars[0].begin(), chars[0].end(), [](int v) { return v == 1; }));
    for (const auto& chi : chars) {
      for (Index x : d.members) CHECK(chi[x] == 1);
      for (Index a = 0; a < g.order(); ++a)
        for (Index b = 0; b < g.order(); ++b) REQUIRE(chi[g.mul(a, b)] == chi[a] * chi[b]);
    }
    // Count is 2^s with s the 2-rank of G/[G,G]; here checked via index-2 subgroups.
    std::size_t index_two = 0;
    for (std::size_t i = 1; i < chars.size(); ++i) {
      std::size_t kernel = std::count(chars[i].begin(), chars[i].end(), 1);
      CHECK(kernel * 2 == g.order());
      ++index_two;
    }
    CHECK(chars.size() == index_two + 1);
    CHECK((chars.size() & (chars.size() - 1)) == 0);
  }
}

TEST_CASE("subgroup helpers") {
  const FiniteGroup g = corpus::s4();
  auto all = whole_group(g);
  CHECK(is_subgroup(g, all.members));
  auto gens = reduced_generators(g, all);
  CHECK(generated_subgroup(g, gens).order() == 24);
  CHECK(gens.size() <= 3);
  const FiniteGroup copy = subgroup_as_group(g, all);
  CHECK(copy.order() == 24);
  CHECK_FALSE(is_abelian(g));
  CHECK(is_abelian(corpus::c4xc2()));
}
