#include "jordanlab/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "jordanlab/error.hpp"

namespace jordanlab::group {

namespace {

void put_u16(std::string& out, unsigned v) {
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xff));
}

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::string make_key(const GroupElement::Payload& payload) {
  std::string key;
  std::visit(
      [&key](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Permutation>) {
          key.push_back(static_cast<char>(PayloadKind::Permutation));
          put_u16(key, static_cast<unsigned>(p.image.size()));
          for (auto x : p.image) put_u16(key, x);
        } else if constexpr (std::is_same_v<T, SemidirectPair>) {
          key.push_back(static_cast<char>(PayloadKind::Semidirect));
          put_u32(key, static_cast<std::uint32_t>(p.action ? p.action->modulus : 0));
          put_u32(key, static_cast<std::uint32_t>(p.translation[0]));
          put_u32(key, static_cast<std::uint32_t>(p.translation[1]));
          put_u16(key, static_cast<unsigned>(p.twist));
        } else {
          key.push_back(static_cast<char>(PayloadKind::ModMatrix));
          put_u16(key, static_cast<unsigned>(p.dim));
          put_u32(key, static_cast<std::uint32_t>(p.modulus));
          for (int x : p.entries) put_u32(key, static_cast<std::uint32_t>(x));
        }
      },
      payload);
  return key;
}

std::array<int, 2> apply(const std::array<int, 4>& m, const std::array<int, 2>& v, int n) {
  return {mod(static_cast<long long>(m[0]) * v[0] + static_cast<long long>(m[1]) * v[1], n),
          mod(static_cast<long long>(m[2]) * v[0] + static_cast<long long>(m[3]) * v[1], n)};
}

ModMatrix matmul(const ModMatrix& a, const ModMatrix& b) {
  ModMatrix c{a.dim, a.modulus, std::vector<int>(a.entries.size(), 0)};
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      long long s = 0;
      for (int k = 0; k < a.dim; ++k)
        s += static_cast<long long>(a.entries[i * a.dim + k]) * b.entries[k * a.dim + j];
      c.entries[i * a.dim + j] = mod(s, a.modulus);
    }
  return c;
}

ModMatrix identity_matrix(int dim, int modulus) {
  ModMatrix m{dim, modulus, std::vector<int>(static_cast<std::size_t>(dim) * dim, 0)};
  for (int i = 0; i < dim; ++i) m.entries[i * dim + i] = 1 % modulus;
  return m;
}

[[noreturn]] void incompatible(const std::string& what) {
  throw Error(ErrorCode::IncompatiblePayloads, what);
}

}  // namespace

Permutation permutation_from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p;
  p.image.resize(degree);
  std::iota(p.image.begin(), p.image.end(), std::uint16_t{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (int x : cycle) {
      if (x < 1 || static_cast<std::size_t>(x) > degree)
        throw Error(ErrorCode::InvalidArgument, "cycle point " + std::to_string(x) + " outside 1.." +
                                                    std::to_string(degree));
      if (used[x - 1]) throw Error(ErrorCode::InvalidArgument, "cycles are not disjoint");
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.image[cycle[i] - 1] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()] - 1);
  }
  return p;
}

GroupElement::GroupElement(Payload payload) : payload_(std::move(payload)) {
  if (auto* m = std::get_if<ModMatrix>(&payload_)) {
    if (m->modulus < 1 || m->dim < 1 || m->entries.size() != static_cast<std::size_t>(m->dim) * m->dim)
      throw Error(ErrorCode::InvalidArgument, "malformed matrix payload");
    for (int& x : m->entries) x = mod(x, m->modulus);
  } else if (auto* s = std::get_if<SemidirectPair>(&payload_)) {
    if (!s->action) throw Error(ErrorCode::InvalidArgument, "semidirect payload without action");
    if (s->twist < 0 || s->twist >= s->action->count)
      throw Error(ErrorCode::InvalidArgument, "twist index out of range");
    for (int& x : s->translation) x = mod(x, s->action->modulus);
  }
  key_ = make_key(payload_);
}

PayloadKind GroupElement::kind() const {
  switch (payload_.index()) {
    case 0: return PayloadKind::Permutation;
    case 1: return PayloadKind::Semidirect;
    default: return PayloadKind::ModMatrix;
  }
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  if (payload_.index() != rhs.payload_.index()) incompatible("payload kinds differ");
  switch (kind()) {
    case PayloadKind::Permutation: {
      const auto& p = as_permutation();
      const auto& q = rhs.as_permutation();
      if (p.degree() != q.degree()) incompatible("permutation degrees differ");
      Permutation r;
      r.image.resize(p.degree());
      for (std::size_t x = 0; x < p.degree(); ++x) r.image[x] = p.image[q.image[x]];
      return GroupElement(std::move(r));
    }
    case PayloadKind::Semidirect: {
      const auto& a = as_semidirect();
      const auto& b = rhs.as_semidirect();
      if (a.action != b.action) incompatible("semidirect elements use different actions");
      const auto& act = *a.action;
      auto moved = apply(act.matrices[a.twist], b.translation, act.modulus);
      SemidirectPair r{{mod(static_cast<long long>(a.translation[0]) + moved[0], act.modulus),
                        mod(static_cast<long long>(a.translation[1]) + moved[1], act.modulus)},
                       act.mul[a.twist * act.count + b.twist],
                       a.action};
      return GroupElement(std::move(r));
    }
    case PayloadKind::ModMatrix: {
      const auto& a = as_matrix();
      const auto& b = rhs.as_matrix();
      if (a.dim != b.dim || a.modulus != b.modulus) incompatible("matrix shapes or moduli differ");
      return GroupElement(matmul(a, b));
    }
  }
  incompatible("unknown payload");
}

GroupElement GroupElement::identity_like() const {
  switch (kind()) {
    case PayloadKind::Permutation: {
      Permutation p;
      p.image.resize(as_permutation().degree());
      std::iota(p.image.begin(), p.image.end(), std::uint16_t{0});
      return GroupElement(std::move(p));
    }
    case PayloadKind::Semidirect:
      return GroupElement(SemidirectPair{{0, 0}, 0, as_semidirect().action});
    case PayloadKind::ModMatrix:
      return GroupElement(identity_matrix(as_matrix().dim, as_matrix().modulus));
  }
  incompatible("unknown payload");
}

GroupElement GroupElement::inverse() const {
  switch (kind()) {
    case PayloadKind::Permutation: {
      const auto& p = as_permutation();
      Permutation r;
      r.image.resize(p.degree());
      for (std::size_t x = 0; x < p.degree(); ++x) r.image[p.image[x]] = static_cast<std::uint16_t>(x);
      return GroupElement(std::move(r));
    }
    case PayloadKind::Semidirect: {
      const auto& s = as_semidirect();
      const auto& act = *s.action;
      int tinv = act.inverse[s.twist];
      auto moved = apply(act.matrices[tinv], s.translation, act.modulus);
      return GroupElement(SemidirectPair{{mod(-moved[0], act.modulus), mod(-moved[1], act.modulus)}, tinv,
                                         s.action});
    }
    case PayloadKind::ModMatrix: {
      const GroupElement id = identity_like();
      GroupElement prev = id;
      GroupElement cur = *this;
      for (int step = 0; step < 1000000; ++step) {
        if (cur == id) return prev;
        prev = cur;
        cur = cur * *this;
      }
      throw Error(ErrorCode::InvalidArgument, "matrix is not of finite order");
    }
  }
  incompatible("unknown payload");
}

std::optional<Index> FiniteGroup::index_of(const GroupElement& e) const { return index_of_key(e.key()); }

std::optional<Index> FiniteGroup::index_of_key(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index FiniteGroup::power(Index a, long long e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  Index result = identity();
  Index base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t n = 1;
  for (Index x = a; x != identity(); x = mul(x, a)) ++n;
  return n;
}

std::string FiniteGroup::serialize() const {
  std::string out;
  put_u32(out, static_cast<std::uint32_t>(order()));
  for (const auto& e : elements_) {
    put_u32(out, static_cast<std::uint32_t>(e.key().size()));
    out += e.key();
  }
  for (Index x : table_) put_u32(out, x);
  for (Index x : generators_) put_u32(out, x);
  return out;
}

FiniteGroup close_generators(std::span<const GroupElement> gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "empty generator list");
  const GroupElement id = gens.front().identity_like();
  for (const auto& g : gens) (void)(id * g);  // payload compatibility

  FiniteGroup group;
  auto add = [&group](GroupElement e) {
    group.index_.emplace(e.key(), static_cast<Index>(group.elements_.size()));
    group.elements_.push_back(std::move(e));
  };
  add(id);

  std::size_t layer_begin = 0;
  while (layer_begin < group.elements_.size()) {
    const std::size_t layer_end = group.elements_.size();
    std::vector<GroupElement> fresh;
    std::unordered_map<std::string, bool> fresh_keys;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& g : gens) {
        GroupElement y = group.elements_[i] * g;
        if (group.index_.count(y.key()) || fresh_keys.count(y.key())) continue;
        fresh_keys.emplace(y.key(), true);
        fresh.push_back(std::move(y));
        if (group.elements_.size() + fresh.size() > cap)
          throw Error(ErrorCode::CapExceeded, "closure exceeds cap " + std::to_string(cap));
      }
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const GroupElement& a, const GroupElement& b) { return a.key() < b.key(); });
    for (auto& y : fresh) add(std::move(y));
    layer_begin = layer_end;
  }

  const std::size_t k = group.elements_.size();
  if (k > kMaxTableOrder)
    throw Error(ErrorCode::CapExceeded, "group of order " + std::to_string(k) + " exceeds Cayley table limit");

  // Right multiplication by each generator.
  std::vector<std::vector<Index>> right(gens.size(), std::vector<Index>(k));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < k; ++i) right[g][i] = group.index_.at((group.elements_[i] * gens[g]).key());

  // Spanning tree of the right Cayley graph: element j = parent[j] * gens[via[j]].
  std::vector<Index> parent(k, 0), via(k, 0), bfs;
  std::vector<bool> seen(k, false);
  seen[0] = true;
  bfs.push_back(0);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    Index x = bfs[head];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Index y = right[g][x];
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        via[y] = static_cast<Index>(g);
        bfs.push_back(y);
      }
    }
  }

  group.table_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) group.table_[i * k] = static_cast<Index>(i);
  for (std::size_t pos = 1; pos < bfs.size(); ++pos) {
    Index j = bfs[pos];
    const auto& r = right[via[j]];
    for (std::size_t i = 0; i < k; ++i) group.table_[i * k + j] = r[group.table_[i * k + parent[j]]];
  }

  group.inverse_.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (group.table_[i * k + j] == 0) {
        group.inverse_[i] = static_cast<Index>(j);
        break;
      }

  for (const auto& g : gens) group.generators_.push_back(group.index_.at(g.key()));
  return group;
}

bool Subgroup::contains(Index i) const { return std::binary_search(members.begin(), members.end(), i); }

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{&g, {FiniteGroup::identity()}}; }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup h{&g, std::vector<Index>(g.order())};
  std::iota(h.members.begin(), h.members.end(), Index{0});
  return h;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Index> seeds) {
  std::vector<Index> gens(seeds.begin(), seeds.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<bool> in(g.order(), false);
  std::vector<Index> members{FiniteGroup::identity()};
  in[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    Index x = members[head];
    for (Index s : gens) {
      Index y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{&g, std::move(members)};
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Index> seeds) {
  std::vector<bool> in(g.order(), false);
  std::vector<Index> orbit;
  for (Index s : seeds)
    if (!in[s]) {
      in[s] = true;
      orbit.push_back(s);
    }
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (Index x : g.generators()) {
      Index y = g.conjugate(x, orbit[head]);
      if (!in[y]) {
        in[y] = true;
        orbit.push_back(y);
      }
    }
  }
  return generated_subgroup(g, orbit);
}

bool is_subgroup(const FiniteGroup& g, std::span<const Index> members) {
  std::vector<bool> in(g.order(), false);
  for (Index m : members) in[m] = true;
  if (!in[FiniteGroup::identity()]) return false;
  for (Index a : members) {
    if (!in[g.inverse(a)]) return false;
    for (Index b : members)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Index x : g.generators())
    for (Index m : h.members)
      if (!h.contains(g.conjugate(x, m))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
  const auto& m = h.members;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (g.mul(m[i], m[j]) != g.mul(m[j], m[i])) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  for (Index a : g.generators())
    for (Index b : g.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<Index> reduced_generators(const FiniteGroup& g, const Subgroup& h, std::span<const Index> hint) {
  std::vector<Index> kept;
  Subgroup span = trivial_subgroup(g);
  auto consider = [&](Index c) {
    if (!h.contains(c) || span.contains(c)) return;
    kept.push_back(c);
    span = generated_subgroup(g, kept);
  };
  for (Index c : hint) consider(c);
  for (Index c : h.members) {
    if (span.order() == h.order()) break;
    consider(c);
  }
  return kept;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  std::vector<GroupElement> gens;
  for (Index i : reduced_generators(g, h)) gens.push_back(g.element(i));
  if (gens.empty()) gens.push_back(g.element(FiniteGroup::identity()));
  return close_generators(gens, h.order());
}

std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t k = g.order();
  std::vector<bool> assigned(k, false);
  std::vector<std::vector<Index>> classes;
  for (Index i = 0; i < k; ++i) {
    if (assigned[i]) continue;
    std::vector<Index> cls;
    for (Index x = 0; x < k; ++x) {
      Index y = g.conjugate(x, i);
      if (!assigned[y]) {
        assigned[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  auto min_key = [&g](const std::vector<Index>& c) {
    const std::string* best = &g.element(c.front()).key();
    for (Index x : c)
      if (g.element(x).key() < *best) best = &g.element(x).key();
    return *best;
  };
  std::sort(classes.begin() + 1, classes.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return min_key(a) < min_key(b);
  });
  return classes;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<Index> seeds;
  const auto& gens = g.generators();
  for (Index a : gens)
    for (Index b : gens) seeds.push_back(g.commutator(a, b));
  return normal_closure(g, seeds);
}

std::vector<std::vector<int>> sign_characters(const FiniteGroup& g) {
  const Subgroup all = whole_group(g);
  const std::vector<Index> gens = reduced_generators(g, all, g.generators());
  const std::size_t k = g.order();
  std::vector<std::vector<int>> result;
  const std::size_t combos = std::size_t{1} << gens.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<int> value(k, 0);
    value[0] = 1;
    std::vector<Index> queue{0};
    bool consistent = true;
    for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
      Index x = queue[head];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Index y = g.mul(x, gens[j]);
        int v = value[x] * (((mask >> j) & 1) ? -1 : 1);
        if (value[y] == 0) {
          value[y] = v;
          queue.push_back(y);
        } else if (value[y] != v) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) result.push_back(std::move(value));
  }
  return result;
}

}  // namespace jordanlab::group
