#pragma once

#include <cstddef>
#include <vector>

#include "jordanlab/group.hpp"

namespace jordanlab::jordan {

struct NormalSubgroup {
  group::Subgroup subgroup;
  bool abelian = false;
};

/// All normal subgroups, sorted by (order, member indices). `join[i][j]` is
/// the position of the join of entries i and j.
struct NormalSubgroupLattice {
  const group::FiniteGroup* parent = nullptr;
  std::vector<NormalSubgroup> subgroups;
  std::vector<std::vector<std::size_t>> join;
};

/// Normal closures of conjugacy classes, closed under pairwise joins.
NormalSubgroupLattice normal_subgroups(const group::FiniteGroup& g);

struct JordanCertificate {
  std::size_t group_order = 0;
  std::size_t jordan_index = 0;
  group::Subgroup witness;
  bool witness_abelian = false;
  bool witness_normal = false;
  std::size_t normal_subgroup_count = 0;
};

/// Minimal index of an abelian normal subgroup. Ties go to the subgroup
/// whose sorted member keys compare smallest.
JordanCertificate jordan_index(const group::FiniteGroup& g);
JordanCertificate jordan_index(const group::FiniteGroup& g, const NormalSubgroupLattice& lattice);

}  // namespace jordanlab::jordan
