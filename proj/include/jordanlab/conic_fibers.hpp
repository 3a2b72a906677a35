#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jordanlab/group.hpp"

// Combinatorial model of a finite abelian group acting on the singular fibers
// of a conic bundle: each fiber is a pair of components, some fibers lie over
// the fixed points 0 and infinity of the base, and the action on the others
// factors through a cyclic quotient.
namespace jordanlab::conic {

struct AbelianType {
  std::vector<int> factors;  // cyclic orders, any order, 1s allowed

  /// Invariant factors d1 | d2 | ... with trivial ones dropped.
  std::vector<int> invariant_factors() const;
  std::size_t order() const;
  /// Number of even invariant factors.
  int two_rank() const;
  /// One of Z/m x Z/n, Z/2n x (Z/2)^2, (Z/4)^2 x Z/2, (Z/3)^3, (Z/2)^4.
  bool admissible() const;
  std::string describe() const;
};

/// One representative per admissible family, with the given parameters.
std::vector<AbelianType> representative_types();

/// Admissible type from family `family % 5` with random parameters.
AbelianType random_type(std::mt19937_64& rng, std::size_t family);

enum class FiberMarker : std::uint8_t { None, Zero, Infinity };

/// Fiber f owns components 2f and 2f + 1. Generator i of A is the unit vector
/// of the i-th factor of `type`.
struct FiberActionModel {
  AbelianType type;
  std::vector<FiberMarker> markers;
  std::vector<std::vector<std::uint16_t>> generator_actions;  // component images
  int base_order = 1;                                         // |A_B|
  std::vector<int> base_images;                               // generator i maps to base_images[i] in Z/base_order

  // Filled by validate().
  std::shared_ptr<const group::FiniteGroup> group;
  std::vector<std::vector<std::uint16_t>> element_actions;  // per element of group
  std::vector<std::vector<int>> coordinates;                // per element, in Z/f_i
  std::vector<int> base_projection;                         // per element, in Z/base_order

  std::size_t fiber_count() const { return markers.size(); }
  std::size_t component_count() const { return 2 * markers.size(); }
  bool marked(std::size_t fiber) const { return markers[fiber] != FiberMarker::None; }
  bool swaps(group::Index g, std::size_t fiber) const { return element_actions[g][2 * fiber] == 2 * fiber + 1; }
  std::size_t fiber_image(group::Index g, std::size_t fiber) const { return element_actions[g][2 * fiber] / 2; }
};

/// Checks the model invariants and fills the derived fields. Throws
/// InvalidArgument when the pairing is not preserved, a marked fiber moves,
/// more than two fibers are marked or the unmarked action does not factor
/// through the base quotient; HomomorphismFailure when the generators do not
/// define an action of A.
void validate(FiberActionModel& model);

FiberActionModel make_model(AbelianType type, std::vector<FiberMarker> markers,
                            std::vector<std::vector<std::uint16_t>> generator_actions, int base_order = 1,
                            std::vector<int> base_images = {});

/// Random valid model with at most `max_fibers` fibers.
FiberActionModel random_model(std::mt19937_64& rng, const AbelianType& type, std::size_t max_fibers = 6);

/// Same model with fibers renamed by `fiber_perm` (old -> new) and the two
/// components of fiber f exchanged when flip[f] is set.
FiberActionModel relabel(const FiberActionModel& model, const std::vector<std::size_t>& fiber_perm,
                         const std::vector<bool>& flip);

/// Swap signature of an element at the given fibers.
std::vector<int> swap_signature(const FiberActionModel& model, group::Index g, const std::vector<std::size_t>& fibers);

struct SelectionResult {
  bool success = false;
  std::vector<std::size_t> components;  // one per fiber, sorted, on success
  std::optional<group::Index> witness;  // element exchanging the two components of `fiber`
  std::optional<std::size_t> fiber;
};

/// Repeatedly takes the orbit of a component of the first uncovered fiber.
SelectionResult greedy_selection(const FiberActionModel& model, const group::Subgroup& sub);

/// Exhaustive oracle: first element of `sub` exchanging the components of some fiber.
std::optional<std::pair<group::Index, std::size_t>> find_swap(const FiberActionModel& model,
                                                              const group::Subgroup& sub);

struct NoSwapSubgroup {
  group::Subgroup subgroup;
  std::size_t index = 0;
  bool clean_lift = true;             // false: no valid lift exists, best fallback used
  std::optional<group::Index> lift;   // the element a
  std::size_t a0_order = 0;           // no swap at marked fibers
  std::size_t s_order = 0;            // additionally fixes each fiber without swapping
  int two_rank = 0;
  bool within_rank_bound = false;     // index <= 2^two_rank
};

NoSwapSubgroup construct_no_swap_subgroup(const FiberActionModel& model);

inline constexpr long long kSubgroupIndexBound = 288;

/// Largest 2^(2-rank) over the admissible families.
long long worst_rank_factor();

/// kSubgroupIndexBound times the worst rank factor.
long long weak_geometric_constant();

struct TrialResult {
  std::uint64_t trial = 0;
  std::string type;
  std::size_t fibers = 0;
  std::size_t marked = 0;
  int base_order = 1;
  std::size_t index = 0;
  int two_rank = 0;
  bool clean_lift = true;
  bool within_rank_bound = true;
  bool no_swap = true;          // exhaustive scan of the constructed subgroup
  bool selection_found = true;  // greedy selection on the constructed subgroup
};

struct SimulationSummary {
  std::uint64_t seed = 0;
  std::vector<TrialResult> trials;  // sorted by trial number
  std::size_t max_index = 0;
  std::size_t swap_failures = 0;
  std::size_t selection_failures = 0;
  std::size_t no_clean_lift = 0;
  std::size_t rank_bound_exceeded = 0;
};

/// Runs `trials` random models, cycling through the representative types.
/// Trial t draws from its own generator seeded by (seed, t), so results do
/// not depend on `parallel`.
SimulationSummary simulate(std::uint64_t seed, std::size_t trials, bool parallel = false);

}  // namespace jordanlab::conic
