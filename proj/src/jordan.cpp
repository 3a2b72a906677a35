#include "jordanlab/jordan.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace jordanlab::jordan {

using group::FiniteGroup;
using group::Index;
using group::Subgroup;

namespace {

std::vector<std::string> sorted_keys(const FiniteGroup& g, const Subgroup& h) {
  std::vector<std::string> keys;
  keys.reserve(h.order());
  for (Index i : h.members) keys.push_back(g.element(i).key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

NormalSubgroupLattice normal_subgroups(const FiniteGroup& g) {
  std::map<std::vector<Index>, std::size_t> seen;
  std::vector<Subgroup> found;
  auto insert = [&](Subgroup h) {
    auto [it, fresh] = seen.emplace(h.members, found.size());
    if (fresh) found.push_back(std::move(h));
    return it->second;
  };

  insert(group::trivial_subgroup(g));
  for (const auto& cls : group::conjugacy_classes(g)) insert(group::generated_subgroup(g, cls));

  // Join closure to a fixpoint. Joins of normal subgroups are generated by
  // the union of their members.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Index> seeds;
      std::set_union(found[i].members.begin(), found[i].members.end(), found[j].members.begin(),
                     found[j].members.end(), std::back_inserter(seeds));
      if (seeds.size() == std::max(found[i].order(), found[j].order())) continue;  // nested
      auto gens = group::reduced_generators(g, Subgroup{&g, seeds});
      insert(group::generated_subgroup(g, gens));
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });

  NormalSubgroupLattice lattice;
  lattice.parent = &g;
  std::map<std::vector<Index>, std::size_t> position;
  for (auto& h : found) {
    position.emplace(h.members, lattice.subgroups.size());
    bool abelian = group::is_abelian(g, h);
    lattice.subgroups.push_back({std::move(h), abelian});
  }
  const std::size_t n = lattice.subgroups.size();
  lattice.join.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto& a = lattice.subgroups[i].subgroup.members;
      const auto& b = lattice.subgroups[j].subgroup.members;
      std::size_t k;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        k = j;
      } else if (std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        k = i;
      } else {
        std::vector<Index> seeds;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(seeds));
        auto gens = group::reduced_generators(g, Subgroup{&g, seeds});
        k = position.at(group::generated_subgroup(g, gens).members);
      }
      lattice.join[i][j] = lattice.join[j][i] = k;
    }
  }
  return lattice;
}

JordanCertificate jordan_index(const FiniteGroup& g) { return jordan_index(g, normal_subgroups(g)); }

JordanCertificate jordan_index(const FiniteGroup& g, const NormalSubgroupLattice& lattice) {
  const NormalSubgroup* best = nullptr;
  std::vector<std::string> best_keys;
  for (const auto& entry : lattice.subgroups) {
    if (!entry.abelian) continue;
    if (best == nullptr || entry.subgroup.order() > best->subgroup.order()) {
      best = &entry;
      best_keys = sorted_keys(g, entry.subgroup);
    } else if (entry.subgroup.order() == best->subgroup.order()) {
      auto keys = sorted_keys(g, entry.subgroup);
      if (keys < best_keys) {
        best = &entry;
        best_keys = std::move(keys);
      }
    }
  }
  // The trivial subgroup is always listed, so best is never null.
  JordanCertificate cert;
  cert.group_order = g.order();
  cert.witness = best->subgroup;
  cert.jordan_index = g.order() / best->subgroup.order();
  cert.witness_abelian = group::is_abelian(g, cert.witness);
  cert.witness_normal = group::is_normal(g, cert.witness);
  cert.normal_subgroup_count = lattice.subgroups.size();
  return cert;
}

}  // namespace jordanlab::jordan
