#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

// Boundary cycles of log Calabi-Yau surface pairs, reduced to labeled
// cycles of curves, and the two blow-up rewrite rules acting on them.
namespace jordanlab::dual_complex {

struct Component {
  int self_int = 0;
  int genus = 0;  // arithmetic genus, 0 or 1

  auto operator<=>(const Component&) const = default;
};

struct BlowUpStep {
  enum class Kind { Node, Smooth };
  Kind kind = Kind::Smooth;
  std::size_t index = 0;

  bool operator==(const BlowUpStep&) const = default;
};

std::string to_string(const std::vector<BlowUpStep>& word);

/// Cyclic sequence of boundary components. Node i joins component i and
/// component (i + 1) mod L; a length-1 cycle is a loop through its node.
struct PoleCycle {
  std::vector<Component> components;
  int k2 = 9;
  std::string base;
  std::vector<BlowUpStep> word;

  std::size_t length() const { return components.size(); }
  int self_int_sum() const;
  int genus_sum() const;

  /// sum(self_int) - K^2 + 2L - 2 sum(genus); zero for every valid cycle.
  int conservation_defect() const;
};

/// Triangle of lines, conic plus line, nodal cubic (all with K^2 = 9).
std::vector<PoleCycle> base_pairs();

/// Blows up node `node_index`. On a loop the self-intersection drops by 4 and
/// the result is a 2-cycle. Throws InvalidArgument for a missing node.
PoleCycle blow_up_node(const PoleCycle& c, std::size_t node_index);

/// Blows up a smooth point of the boundary on component `component_index`.
PoleCycle blow_up_smooth(const PoleCycle& c, std::size_t component_index);

PoleCycle apply(const PoleCycle& c, const BlowUpStep& step);
PoleCycle apply(const PoleCycle& c, const std::vector<BlowUpStep>& word);

/// Every rational component has self-intersection >= -1 and every genus-1
/// component has self-intersection >= 1.
bool fano_admissible(const PoleCycle& c);

struct SymmetryGroup {
  enum class Kind { Trivial, Cyclic, Dihedral, Klein4, C2 };
  std::size_t order = 1;
  Kind kind = Kind::Trivial;
  std::size_t rotations = 1;  // k in cyclic(k) and dihedral(k)

  std::string describe() const;
};

SymmetryGroup symmetry_group(const PoleCycle& c);

/// Lexicographically least rotation/reflection of the label sequence.
std::vector<Component> canonical_labels(const PoleCycle& c);

struct EnumeratedConfig {
  PoleCycle cycle;
  SymmetryGroup symmetry;
};

struct EnumerationOptions {
  // Drop a configuration as soon as it fails the Fano test. Labels never
  // increase under blow-up, so this does not change the result.
  bool prune = true;
};

/// All configurations reachable by (9 - degree) blow-ups of a base pair that
/// pass the Fano test, deduplicated up to rotation/reflection and sorted by
/// canonical labels. Throws InvalidDegree outside 1..8.
std::vector<EnumeratedConfig> enumerate(int degree, const EnumerationOptions& options = {});

/// Maximum symmetry order for each del Pezzo degree 1..6.
std::map<int, std::size_t> max_symmetry_by_degree();

}  // namespace jordanlab::dual_complex
