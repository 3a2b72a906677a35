#include <doctest.h>

#include <algorithm>
#include <random>
#include <utility>

#include "jordanlab/dual_complex.hpp"
#include "jordanlab/error.hpp"

using namespace jordanlab;
using namespace jordanlab::dual_complex;

namespace {

std::vector<int> labels(const PoleCycle& c) {
  std::vector<int> out;
  for (const auto& x : c.components) out.push_back(x.self_int);
  return out;
}

const PoleCycle& base(const std::string& name) {
  static const auto bases = base_pairs();
  for (const auto& b : bases)
    if (b.base == name) return b;
  throw std::runtime_error("no base " + name);
}

std::vector<BlowUpStep> random_word(std::mt19937& rng, const PoleCycle& start, std::size_t length) {
  std::vector<BlowUpStep> word;
  PoleCycle c = start;
  for (std::size_t i = 0; i < length; ++i) {
    BlowUpStep s{rng() % 2 ? BlowUpStep::Kind::Node : BlowUpStep::Kind::Smooth, rng() % c.length()};
    c = dual_complex::apply(c, s);
    word.push_back(s);
  }
  return word;
}

// Blow-up target named by component lineage rather than position.
struct Target {
  bool node;
  int a, b;  // component ids; b unused for smooth points
};

PoleCycle apply_by_lineage(const PoleCycle& start, const std::vector<Target>& targets) {
  PoleCycle c = start;
  std::vector<int> ids(c.length());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  int next_id = static_cast<int>(ids.size());
  for (const auto& t : targets) {
    const std::size_t L = ids.size();
    if (!t.node) {
      auto pos = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), t.a) - ids.begin());
      c = blow_up_smooth(c, pos);
      continue;
    }
    for (std::size_t i = 0; i < L; ++i) {
      int x = ids[i], y = ids[(i + 1) % L];
      if ((x == t.a && y == t.b) || (x == t.b && y == t.a)) {
        c = blow_up_node(c, i);
        ids.insert(ids.begin() + static_cast<std::ptrdiff_t>(i + 1), next_id++);
        break;
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("base pairs") {
  auto bases = base_pairs();
  REQUIRE(bases.size() == 3);
  CHECK(labels(base("triangle")) == std::vector<int>{1, 1, 1});
  CHECK(base("triangle").self_int_sum() == 3);
  CHECK(labels(base("conic+line")) == std::vector<int>{4, 1});
  CHECK(labels(base("nodal cubic")) == std::vector<int>{9});
  CHECK(base("nodal cubic").components[0].genus == 1);
  for (const auto& b : bases) {
    CHECK(b.k2 == 9);
    CHECK(b.conservation_defect() == 0);
  }
}

TEST_CASE("node blow-ups") {
  const auto t1 = blow_up_node(base("triangle"), 0);
  CHECK(labels(t1) == std::vector<int>{0, -1, 0, 1});
  CHECK(t1.k2 == 8);
  CHECK(t1.conservation_defect() == 0);

  const auto hexagon = dual_complex::apply(base("triangle"), {{BlowUpStep::Kind::Node, 0},
                                                {BlowUpStep::Kind::Node, 2},
                                                {BlowUpStep::Kind::Node, 4}});
  CHECK(labels(hexagon) == std::vector<int>(6, -1));
  CHECK(hexagon.k2 == 6);

  const auto loop = blow_up_node(base("nodal cubic"), 0);
  CHECK(labels(loop) == std::vector<int>{5, -1});
  CHECK(loop.components[0].genus == 0);
  CHECK(loop.components[1].genus == 0);
  CHECK(loop.k2 == 8);

  CHECK_THROWS_AS(blow_up_node(base("triangle"), 3), Error);
  CHECK_THROWS_AS(blow_up_smooth(base("triangle"), 5), Error);
}

TEST_CASE("smooth blow-ups") {
  const auto t = blow_up_smooth(base("triangle"), 0);
  CHECK(labels(t) == std::vector<int>{0, 1, 1});
  CHECK(t.k2 == 8);

  std::vector<BlowUpStep> word(5, {BlowUpStep::Kind::Smooth, 0});
  word.insert(word.end(), 2, {BlowUpStep::Kind::Smooth, 1});
  const auto d2 = dual_complex::apply(base("conic+line"), word);
  CHECK(labels(d2) == std::vector<int>{-1, -1});
  CHECK(d2.k2 == 2);
  CHECK(symmetry_group(d2).order == 4);
  CHECK(symmetry_group(d2).kind == SymmetryGroup::Kind::Klein4);

  const auto d1 = dual_complex::apply(base("nodal cubic"), std::vector<BlowUpStep>(8, {BlowUpStep::Kind::Smooth, 0}));
  CHECK(labels(d1) == std::vector<int>{1});
  CHECK(d1.components[0].genus == 1);
  CHECK(d1.k2 == 1);
  CHECK(fano_admissible(d1));
}

TEST_CASE("symmetry groups") {
  PoleCycle hexagon{std::vector<Component>(6, {-1, 0}), 6, "", {}};
  CHECK(symmetry_group(hexagon).order == 12);
  CHECK(symmetry_group(hexagon).describe() == "dihedral(6)");
  CHECK(symmetry_group(base("nodal cubic")).order == 2);
  CHECK(symmetry_group(base("nodal cubic")).kind == SymmetryGroup::Kind::C2);
  CHECK(symmetry_group(base("triangle")).order == 6);
  CHECK(symmetry_group(base("conic+line")).order == 2);
  PoleCycle path{{{0, 0}, {-1, 0}, {0, 0}, {1, 0}}, 8, "", {}};
  CHECK(symmetry_group(path).order == 2);
  CHECK(symmetry_group(path).kind == SymmetryGroup::Kind::Dihedral);
  PoleCycle chiral{{{0, 0}, {-1, 0}, {1, 0}}, 0, "", {}};
  CHECK(symmetry_group(chiral).order == 1);
  CHECK(symmetry_group(chiral).kind == SymmetryGroup::Kind::Trivial);
  PoleCycle rot{{{0, 0}, {1, 0}, {-1, 0}, {0, 0}, {1, 0}, {-1, 0}}, 0, "", {}};
  CHECK(symmetry_group(rot).kind == SymmetryGroup::Kind::Cyclic);
  CHECK(symmetry_group(rot).order == 2);
}

TEST_CASE("enumeration by degree") {
  SUBCASE("degree 6 contains the hexagon") {
    auto configs = enumerate(6);
    std::size_t best = 0;
    bool hexagon = false;
    for (const auto& e : configs) {
      best = std::max(best, e.symmetry.order);
      if (labels(e.cycle) == std::vector<int>(6, -1)) {
        hexagon = true;
        CHECK(e.symmetry.order == 12);
      }
    }
    CHECK(hexagon);
    CHECK(best == 12);
  }
  SUBCASE("degree 5 contains the pentagon built from the triangle") {
    bool found = false;
    for (const auto& e : enumerate(5))
      if (labels(e.cycle) == std::vector<int>(5, -1)) {
        found = true;
        CHECK(e.symmetry.order == 10);
        CHECK(e.cycle.base == "triangle");
        auto nodes = std::count_if(e.cycle.word.begin(), e.cycle.word.end(),
                                   [](const BlowUpStep& s) { return s.kind == BlowUpStep::Kind::Node; });
        CHECK(nodes == 2);
      }
    CHECK(found);
  }
  SUBCASE("degree 4 contains the square") {
    bool found = false;
    for (const auto& e : enumerate(4))
      if (labels(e.cycle) == std::vector<int>(4, -1)) {
        found = true;
        CHECK(e.symmetry.order == 8);
      }
    CHECK(found);
  }
  SUBCASE("invalid degrees") {
    CHECK_THROWS_AS(enumerate(0), Error);
    CHECK_THROWS_AS(enumerate(9), Error);
    try {
      enumerate(-2);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidDegree);
    }
  }
}

TEST_CASE("enumerated configurations are well formed") {
  for (int d = 1; d <= 8; ++d) {
    CAPTURE(d);
    auto configs = enumerate(d);
    CHECK_FALSE(configs.empty());
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const auto& c = configs[i].cycle;
      CHECK(c.k2 == d);
      CHECK(c.conservation_defect() == 0);
      CHECK(fano_admissible(c));
      CHECK(c.word.size() == static_cast<std::size_t>(9 - d));
      // The witness word replays from its base pair.
      CHECK(canonical_labels(dual_complex::apply(base(c.base), c.word)) == canonical_labels(c));
      if (i > 0) CHECK(canonical_labels(configs[i - 1].cycle) < canonical_labels(c));
      if (c.length() >= 3) CHECK((2 * c.length()) % configs[i].symmetry.order == 0);
    }
  }
}

TEST_CASE("pruning does not change the enumeration") {
  for (int d = 5; d <= 8; ++d) {
    CAPTURE(d);
    auto pruned = enumerate(d);
    auto full = enumerate(d, EnumerationOptions{false});
    REQUIRE(pruned.size() == full.size());
    for (std::size_t i = 0; i < pruned.size(); ++i)
      CHECK(canonical_labels(pruned[i].cycle) == canonical_labels(full[i].cycle));
  }
}

TEST_CASE("maximum symmetry by degree") {
  auto table = max_symmetry_by_degree();
  CHECK(table == std::map<int, std::size_t>{{1, 2}, {2, 4}, {3, 6}, {4, 8}, {5, 10}, {6, 12}});
}

TEST_CASE("conservation and cycle length under random blow-up words") {
  std::mt19937 rng(44);
  for (const auto& b : base_pairs()) {
    for (int t = 0; t < 1000; ++t) {
      PoleCycle c = b;
      auto word = random_word(rng, b, 1 + rng() % 8);
      for (const auto& s : word) {
        const std::size_t before = c.length();
        c = dual_complex::apply(c, s);
        REQUIRE(c.conservation_defect() == 0);
        REQUIRE(c.length() >= 1);
        REQUIRE(c.length() == before + (s.kind == BlowUpStep::Kind::Node ? 1 : 0));
      }
    }
  }
}

TEST_CASE("blow-up order independence") {
  std::mt19937 rng(9);
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}};
  for (int t = 0; t < 300; ++t) {
    std::vector<Target> targets;
    for (const auto& [a, b] : edges)
      if (rng() % 2) targets.push_back({true, a, b});
    const int smooth = static_cast<int>(rng() % 5);
    for (int i = 0; i < smooth; ++i) targets.push_back({false, static_cast<int>(rng() % 3), -1});
    const auto reference = apply_by_lineage(base("triangle"), targets);
    std::shuffle(targets.begin(), targets.end(), rng);
    const auto permuted = apply_by_lineage(base("triangle"), targets);
    CHECK(canonical_labels(reference) == canonical_labels(permuted));
    CHECK(reference.k2 == permuted.k2);
  }
}
