#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace jordanlab::group {

inline constexpr std::size_t kDefaultCap = 100000;

/// Largest order for which a full Cayley table is materialized.
inline constexpr std::size_t kMaxTableOrder = 16384;

using Index = std::uint32_t;

/// Permutation of {0..k-1} stored as its image array. Composition is
/// functional: (p * q)(x) = p(q(x)).
struct Permutation {
  std::vector<std::uint16_t> image;

  std::size_t degree() const { return image.size(); }
};

/// Builds a permutation of {1..degree} from 1-based cycles.
Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<int>>& cycles);

/// Square matrix over Z/nZ, row-major, entries in [0, n).
struct ModMatrix {
  int dim = 0;
  int modulus = 0;
  std::vector<int> entries;
};

/// Action of a finite "twist" group T on (Z/nZ)^2. Twists are indexed
/// 0..count-1 with 0 the identity; matrices are row-major 2x2 over Z/nZ.
struct TwistAction {
  int modulus = 0;
  int count = 0;
  std::vector<int> mul;      // count x count
  std::vector<int> inverse;  // count
  std::vector<std::array<int, 4>> matrices;
};

/// Element (v, t) of (Z/nZ)^2 x| T with (v1, t1)(v2, t2) = (v1 + rho(t1) v2, t1 t2).
struct SemidirectPair {
  std::array<int, 2> translation{0, 0};
  int twist = 0;
  std::shared_ptr<const TwistAction> action;
};

enum class PayloadKind : std::uint8_t { Permutation = 1, Semidirect = 2, ModMatrix = 3 };

class GroupElement {
 public:
  using Payload = std::variant<Permutation, SemidirectPair, ModMatrix>;

  explicit GroupElement(Payload payload);

  PayloadKind kind() const;
  const Payload& payload() const { return payload_; }

  /// Serialized canonical form: kind tag followed by payload bytes.
  /// Equal keys if and only if equal elements.
  const std::string& key() const { return key_; }

  /// this * rhs. Throws IncompatiblePayloads on mismatched kinds or shapes.
  GroupElement operator*(const GroupElement& rhs) const;

  GroupElement identity_like() const;
  GroupElement inverse() const;

  bool operator==(const GroupElement& other) const { return key_ == other.key_; }

  const Permutation& as_permutation() const { return std::get<Permutation>(payload_); }
  const SemidirectPair& as_semidirect() const { return std::get<SemidirectPair>(payload_); }
  const ModMatrix& as_matrix() const { return std::get<ModMatrix>(payload_); }

 private:
  Payload payload_;
  std::string key_;
};

/// Finite group materialized as an element list plus Cayley table.
/// Element 0 is the identity. Immutable once built.
class FiniteGroup {
 public:
  std::size_t order() const { return elements_.size(); }
  const GroupElement& element(Index i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }

  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  static constexpr Index identity() { return 0; }
  const std::vector<Index>& generators() const { return generators_; }

  std::optional<Index> index_of(const GroupElement& e) const;
  std::optional<Index> index_of_key(const std::string& key) const;

  Index conjugate(Index g, Index x) const { return mul(mul(g, x), inverse(g)); }
  Index commutator(Index a, Index b) const { return mul(mul(a, b), mul(inverse(a), inverse(b))); }
  Index power(Index a, long long e) const;
  std::size_t element_order(Index a) const;

  /// Byte string of element keys and the Cayley table; identical across
  /// runs for the same generator list.
  std::string serialize() const;

  friend FiniteGroup close_generators(std::span<const GroupElement> gens, std::size_t cap);

 private:
  std::vector<GroupElement> elements_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  std::unordered_map<std::string, Index> index_;
};

/// Breadth-first closure of the generators; each new layer is ordered by
/// canonical key. Throws CapExceeded or IncompatiblePayloads.
FiniteGroup close_generators(std::span<const GroupElement> gens, std::size_t cap = kDefaultCap);

/// Subset of a parent group closed under multiplication and inverses.
/// Members are sorted element indices. The parent must outlive it.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Index> members;

  std::size_t order() const { return members.size(); }
  bool contains(Index i) const;
  bool operator==(const Subgroup& other) const { return members == other.members; }
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Index> seeds);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Index> seeds);

bool is_subgroup(const FiniteGroup& g, std::span<const Index> members);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const FiniteGroup& g);

/// Greedy generating set: a member is kept when it is not already in the
/// span of the previously kept ones. Candidates are tried in `hint` order
/// first, then in member order.
std::vector<Index> reduced_generators(const FiniteGroup& g, const Subgroup& h,
                                      std::span<const Index> hint = {});

/// Rebuilds a subgroup as a standalone group (closure of reduced generators).
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

/// Conjugacy classes. The identity class comes first; the rest are sorted by
/// (size, smallest member key). Members within a class are sorted by index.
std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g);

Subgroup commutator_subgroup(const FiniteGroup& g);

/// All homomorphisms to {+1, -1}, each a value array over element indices.
/// The trivial character is first.
std::vector<std::vector<int>> sign_characters(const FiniteGroup& g);

}  // namespace jordanlab::group
