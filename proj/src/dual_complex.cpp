#include "jordanlab/dual_complex.hpp"

#include <algorithm>
#include <numeric>

#include "jordanlab/error.hpp"

namespace jordanlab::dual_complex {

std::string to_string(const std::vector<BlowUpStep>& word) {
  std::string out;
  for (const auto& s : word) {
    if (!out.empty()) out += ' ';
    out += s.kind == BlowUpStep::Kind::Node ? 'N' : 'S';
    out += std::to_string(s.index);
  }
  return out;
}

int PoleCycle::self_int_sum() const {
  return std::accumulate(components.begin(), components.end(), 0,
                         [](int acc, const Component& c) { return acc + c.self_int; });
}

int PoleCycle::genus_sum() const {
  return std::accumulate(components.begin(), components.end(), 0,
                         [](int acc, const Component& c) { return acc + c.genus; });
}

int PoleCycle::conservation_defect() const {
  return self_int_sum() - k2 + 2 * static_cast<int>(length()) - 2 * genus_sum();
}

std::vector<PoleCycle> base_pairs() {
  return {PoleCycle{{{1, 0}, {1, 0}, {1, 0}}, 9, "triangle", {}},
          PoleCycle{{{4, 0}, {1, 0}}, 9, "conic+line", {}},
          PoleCycle{{{9, 1}}, 9, "nodal cubic", {}}};
}

PoleCycle blow_up_node(const PoleCycle& c, std::size_t node_index) {
  const std::size_t L = c.length();
  if (node_index >= L)
    throw Error(ErrorCode::InvalidArgument, "node " + std::to_string(node_index) + " not in cycle of length " +
                                                std::to_string(L));
  PoleCycle out = c;
  out.k2 -= 1;
  out.word.push_back({BlowUpStep::Kind::Node, node_index});
  if (L == 1) {
    if (c.components[0].genus != 1) throw Error(ErrorCode::InvalidArgument, "loop component must have genus 1");
    out.components = {{c.components[0].self_int - 4, 0}, {-1, 0}};
    return out;
  }
  out.components[node_index].self_int -= 1;
  out.components[(node_index + 1) % L].self_int -= 1;
  out.components.insert(out.components.begin() + static_cast<std::ptrdiff_t>(node_index + 1), Component{-1, 0});
  return out;
}

PoleCycle blow_up_smooth(const PoleCycle& c, std::size_t component_index) {
  if (component_index >= c.length())
    throw Error(ErrorCode::InvalidArgument, "component " + std::to_string(component_index) + " not in cycle");
  PoleCycle out = c;
  out.k2 -= 1;
  out.components[component_index].self_int -= 1;
  out.word.push_back({BlowUpStep::Kind::Smooth, component_index});
  return out;
}

PoleCycle apply(const PoleCycle& c, const BlowUpStep& step) {
  return step.kind == BlowUpStep::Kind::Node ? blow_up_node(c, step.index) : blow_up_smooth(c, step.index);
}

PoleCycle apply(const PoleCycle& c, const std::vector<BlowUpStep>& word) {
  PoleCycle out = c;
  for (const auto& s : word) out = apply(out, s);
  return out;
}

bool fano_admissible(const PoleCycle& c) {
  return std::all_of(c.components.begin(), c.components.end(), [](const Component& x) {
    return x.genus == 0 ? x.self_int >= -1 : x.self_int >= 1;
  });
}

namespace {

// Label sequence after applying the dihedral element (rotation by `shift`,
// optionally reversed).
std::vector<Component> transformed(const std::vector<Component>& labels, std::size_t shift, bool reflect) {
  const std::size_t L = labels.size();
  std::vector<Component> out(L);
  for (std::size_t i = 0; i < L; ++i) {
    std::size_t src = reflect ? (shift + L - i) % L : (shift + i) % L;
    out[i] = labels[src];
  }
  return out;
}

}  // namespace

std::vector<Component> canonical_labels(const PoleCycle& c) {
  const auto& labels = c.components;
  if (labels.size() <= 1) return labels;
  std::vector<Component> best = labels;
  for (std::size_t shift = 0; shift < labels.size(); ++shift)
    for (bool reflect : {false, true}) best = std::min(best, transformed(labels, shift, reflect));
  return best;
}

std::string SymmetryGroup::describe() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Cyclic: return "cyclic(" + std::to_string(rotations) + ")";
    case Kind::Dihedral: return "dihedral(" + std::to_string(rotations) + ")";
    case Kind::Klein4: return "klein4";
    case Kind::C2: return "c2";
  }
  return "unknown";
}

SymmetryGroup symmetry_group(const PoleCycle& c) {
  const std::size_t L = c.length();
  SymmetryGroup g;
  if (L == 1) {
    // Exchange of the two branches at the node.
    g.order = 2;
    g.kind = SymmetryGroup::Kind::C2;
    return g;
  }
  if (L == 2) {
    // The swap of the two nodes is always available; exchanging the two
    // components needs equal labels.
    const bool equal = c.components[0] == c.components[1];
    g.order = equal ? 4 : 2;
    g.kind = equal ? SymmetryGroup::Kind::Klein4 : SymmetryGroup::Kind::C2;
    return g;
  }
  std::size_t rotations = 0, reflections = 0;
  for (std::size_t shift = 0; shift < L; ++shift) {
    if (transformed(c.components, shift, false) == c.components) ++rotations;
    if (transformed(c.components, shift, true) == c.components) ++reflections;
  }
  g.order = rotations + reflections;
  g.rotations = rotations;
  if (reflections > 0) g.kind = SymmetryGroup::Kind::Dihedral;
  else if (rotations > 1) g.kind = SymmetryGroup::Kind::Cyclic;
  else g.kind = SymmetryGroup::Kind::Trivial;
  return g;
}

std::vector<EnumeratedConfig> enumerate(int degree, const EnumerationOptions& options) {
  if (degree < 1 || degree > 8) throw Error(ErrorCode::InvalidDegree, "degree " + std::to_string(degree));
  using Key = std::vector<Component>;
  std::map<Key, PoleCycle> level;
  for (auto& b : base_pairs()) level.emplace(canonical_labels(b), std::move(b));

  for (int step = 0; step < 9 - degree; ++step) {
    std::map<Key, PoleCycle> next;
    for (const auto& [key, c] : level) {
      const std::size_t L = c.length();
      auto visit = [&](PoleCycle child) {
        if (options.prune && !fano_admissible(child)) return;
        next.emplace(canonical_labels(child), std::move(child));
      };
      for (std::size_t i = 0; i < L; ++i)
        if (L > 1 || c.components[0].genus == 1) visit(blow_up_node(c, i));
      for (std::size_t i = 0; i < L; ++i) visit(blow_up_smooth(c, i));
    }
    level = std::move(next);
  }

  std::vector<EnumeratedConfig> out;
  for (auto& [key, c] : level) {
    if (!fano_admissible(c)) continue;
    SymmetryGroup sym = symmetry_group(c);
    out.push_back({std::move(c), sym});
  }
  return out;
}

std::map<int, std::size_t> max_symmetry_by_degree() {
  std::map<int, std::size_t> out;
  for (int d = 1; d <= 6; ++d) {
    std::size_t best = 0;
    for (const auto& e : enumerate(d)) best = std::max(best, e.symmetry.order);
    out[d] = best;
  }
  return out;
}

}  // namespace jordanlab::dual_complex
