#include "jordanlab/conic_fibers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "jordanlab/error.hpp"

namespace jordanlab::conic {

namespace {

std::map<int, std::vector<int>> prime_exponents(const std::vector<int>& factors) {
  std::map<int, std::vector<int>> out;
  for (int f : factors) {
    if (f < 1) throw Error(ErrorCode::InvalidArgument, "cyclic factor must be positive");
    for (int p = 2; f > 1; ++p) {
      int e = 0;
      while (f % p == 0) {
        f /= p;
        ++e;
      }
      if (e) out[p].push_back(e);
    }
  }
  return out;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

std::vector<int> AbelianType::invariant_factors() const {
  auto primes = prime_exponents(factors);
  std::size_t len = 0;
  for (auto& [p, es] : primes) {
    std::sort(es.begin(), es.end(), std::greater<>());
    len = std::max(len, es.size());
  }
  std::vector<int> out(len, 1);
  for (const auto& [p, es] : primes)
    for (std::size_t j = 0; j < es.size(); ++j) out[len - 1 - j] *= ipow(p, es[j]);
  return out;
}

std::size_t AbelianType::order() const {
  std::size_t n = 1;
  for (int f : factors) n *= static_cast<std::size_t>(f);
  return n;
}

int AbelianType::two_rank() const {
  int r = 0;
  for (int d : invariant_factors()) r += d % 2 == 0;
  return r;
}

bool AbelianType::admissible() const {
  const auto d = invariant_factors();
  if (d.size() <= 2) return true;
  if (d.size() == 3)
    return (d[0] == 2 && d[1] == 2 && d[2] % 2 == 0) || d == std::vector<int>{2, 4, 4} ||
           d == std::vector<int>{3, 3, 3};
  return d == std::vector<int>{2, 2, 2, 2};
}

std::string AbelianType::describe() const {
  const auto d = invariant_factors();
  if (d.empty()) return "1";
  std::string out;
  for (int x : d) out += (out.empty() ? "Z/" : " x Z/") + std::to_string(x);
  return out;
}

std::vector<AbelianType> representative_types() {
  return {AbelianType{{2, 2}}, AbelianType{{4, 2, 2}}, AbelianType{{4, 4, 2}}, AbelianType{{3, 3, 3}},
          AbelianType{{2, 2, 2, 2}}};
}

void validate(FiberActionModel& model) {
  const std::size_t m = model.fiber_count();
  const std::size_t ncomp = model.component_count();
  const auto& factors = model.type.factors;
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "group needs at least one cyclic factor");
  if (std::count_if(model.markers.begin(), model.markers.end(), [](FiberMarker x) { return x != FiberMarker::None; }) > 2)
    throw Error(ErrorCode::InvalidArgument, "at most two fibers lie over fixed points of the base");
  if (model.generator_actions.size() != factors.size())
    throw Error(ErrorCode::InvalidArgument, "one component action per cyclic factor required");
  if (model.base_images.empty()) model.base_images.assign(factors.size(), 0);
  if (model.base_order < 1 || model.base_images.size() != factors.size())
    throw Error(ErrorCode::InvalidArgument, "base quotient data has the wrong shape");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    model.base_images[i] = mod(model.base_images[i], model.base_order);
    if (mod(1LL * model.base_images[i] * factors[i], model.base_order) != 0)
      throw Error(ErrorCode::InvalidArgument, "base images do not define a homomorphism");
    const auto& act = model.generator_actions[i];
    if (act.size() != ncomp) throw Error(ErrorCode::InvalidArgument, "component action has the wrong length");
    std::vector<bool> hit(ncomp, false);
    for (auto x : act) {
      if (x >= ncomp || hit[x]) throw Error(ErrorCode::InvalidArgument, "component action is not a permutation");
      hit[x] = true;
    }
    for (std::size_t f = 0; f < m; ++f) {
      if (act[2 * f] / 2 != act[2 * f + 1] / 2) throw Error(ErrorCode::InvalidArgument, "fiber pairing not preserved");
      if (model.marked(f) && act[2 * f] / 2 != f) throw Error(ErrorCode::InvalidArgument, "marked fiber is moved");
    }
  }

  // Generator i acts on a block of factors[i] points by a cycle and on the
  // components as given. The closure has order |A| exactly when the
  // component action is an action of A.
  std::size_t block_total = 0;
  std::vector<std::size_t> offsets;
  for (int f : factors) {
    offsets.push_back(block_total);
    block_total += static_cast<std::size_t>(f);
  }
  const std::size_t degree = block_total + ncomp;
  std::vector<group::GroupElement> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    group::Permutation p;
    p.image.resize(degree);
    std::iota(p.image.begin(), p.image.end(), 0);
    for (int j = 0; j < factors[i]; ++j)
      p.image[offsets[i] + static_cast<std::size_t>(j)] =
          static_cast<std::uint16_t>(offsets[i] + static_cast<std::size_t>((j + 1) % factors[i]));
    for (std::size_t c = 0; c < ncomp; ++c)
      p.image[block_total + c] = static_cast<std::uint16_t>(block_total + model.generator_actions[i][c]);
    gens.emplace_back(std::move(p));
  }
  const std::size_t order = model.type.order();
  try {
    model.group = std::make_shared<const group::FiniteGroup>(group::close_generators(gens, order));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    throw Error(ErrorCode::HomomorphismFailure, "component action does not factor through " + model.type.describe());
  }
  if (model.group->order() != order)
    throw Error(ErrorCode::HomomorphismFailure, "closure order differs from the group order");

  const auto& g = *model.group;
  model.element_actions.assign(order, {});
  model.coordinates.assign(order, {});
  model.base_projection.assign(order, 0);
  for (group::Index x = 0; x < order; ++x) {
    const auto& img = g.element(x).as_permutation().image;
    auto& act = model.element_actions[x];
    for (std::size_t c = 0; c < ncomp; ++c) act.push_back(static_cast<std::uint16_t>(img[block_total + c] - block_total));
    long long pi = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const int a = static_cast<int>(img[offsets[i]] - offsets[i]);
      model.coordinates[x].push_back(a);
      pi += 1LL * a * model.base_images[i];
    }
    model.base_projection[x] = mod(pi, model.base_order);
  }
  for (group::Index x = 0; x < order; ++x) {
    if (model.base_projection[x] != 0) continue;
    for (std::size_t f = 0; f < m; ++f)
      if (model.fiber_image(x, f) != f)
        throw Error(ErrorCode::InvalidArgument, "fiber action does not factor through the base quotient");
  }
}

FiberActionModel make_model(AbelianType type, std::vector<FiberMarker> markers,
                            std::vector<std::vector<std::uint16_t>> generator_actions, int base_order,
                            std::vector<int> base_images) {
  FiberActionModel model;
  model.type = std::move(type);
  model.markers = std::move(markers);
  model.generator_actions = std::move(generator_actions);
  model.base_order = base_order;
  model.base_images = std::move(base_images);
  validate(model);
  return model;
}

FiberActionModel random_model(std::mt19937_64& rng, const AbelianType& type, std::size_t max_fibers) {
  if (max_fibers < 1) throw Error(ErrorCode::InvalidArgument, "need at least one fiber");
  const auto& factors = type.factors;
  const std::size_t n = factors.size();
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  // Base quotient: a random homomorphism onto a cyclic group.
  int exponent = 1;
  for (int f : factors) exponent = std::lcm(exponent, f);
  std::vector<int> divisors;
  for (int d = 1; d <= exponent; ++d)
    if (exponent % d == 0) divisors.push_back(d);
  int k = divisors[static_cast<std::size_t>(uniform(0, static_cast<int>(divisors.size()) - 1))];
  std::vector<int> pi(n);
  int g = k;
  for (std::size_t i = 0; i < n; ++i) {
    const int d = std::gcd(k, factors[i]);
    pi[i] = (k / d) * uniform(0, d - 1);
    g = std::gcd(g, pi[i]);
  }
  k /= g;
  for (auto& c : pi) c /= g;

  // Abstract copy of A to draw characters of the base kernel from.
  FiberActionModel abstract =
      make_model(type, {}, std::vector<std::vector<std::uint16_t>>(n), k, pi);
  const auto& a = *abstract.group;
  group::Subgroup kernel{&a, {}};
  for (group::Index x = 0; x < a.order(); ++x)
    if (abstract.base_projection[x] == 0) kernel.members.push_back(x);
  const auto kernel_group = group::subgroup_as_group(a, kernel);
  const auto characters = group::sign_characters(kernel_group);
  std::vector<group::Index> coset_rep(static_cast<std::size_t>(k), 0);
  std::vector<bool> have(static_cast<std::size_t>(k), false);
  for (group::Index x = 0; x < a.order(); ++x) {
    auto j = static_cast<std::size_t>(abstract.base_projection[x]);
    if (!have[j]) coset_rep[j] = x, have[j] = true;
  }
  auto index_of_coords = [&](const std::vector<int>& c) {
    for (group::Index x = 0; x < a.order(); ++x)
      if (abstract.coordinates[x] == c) return x;
    throw Error(ErrorCode::InvalidArgument, "coordinates outside the group");
  };

  const int marked = uniform(0, static_cast<int>(std::min<std::size_t>(2, max_fibers)));
  const int orbits_max = static_cast<int>((max_fibers - static_cast<std::size_t>(marked)) / static_cast<std::size_t>(k));
  int orbits = uniform(0, orbits_max);
  int marked_count = marked;
  if (marked_count + orbits == 0) marked_count = 1;
  const std::size_t m = static_cast<std::size_t>(marked_count) + static_cast<std::size_t>(orbits * k);

  std::vector<FiberMarker> markers(m, FiberMarker::None);
  std::vector<std::vector<std::uint16_t>> actions(n, std::vector<std::uint16_t>(2 * m));
  for (std::size_t f = 0; f < static_cast<std::size_t>(marked_count); ++f) {
    markers[f] = f == 0 ? FiberMarker::Zero : FiberMarker::Infinity;
    for (std::size_t i = 0; i < n; ++i) {
      const bool swap = factors[i] % 2 == 0 && uniform(0, 1) == 1;
      actions[i][2 * f] = static_cast<std::uint16_t>(2 * f + swap);
      actions[i][2 * f + 1] = static_cast<std::uint16_t>(2 * f + !swap);
    }
  }
  // Each unmarked orbit is the set of components induced from a character
  // chi of the base kernel: component (c, s) goes to (c + pi(e_i), s + chi(h))
  // with h = e_i + rep_c - rep_{c + pi(e_i)}.
  for (int o = 0; o < orbits; ++o) {
    const auto& chi = characters[static_cast<std::size_t>(uniform(0, static_cast<int>(characters.size()) - 1))];
    const std::size_t base = static_cast<std::size_t>(marked_count) + static_cast<std::size_t>(o * k);
    for (std::size_t i = 0; i < n; ++i)
      for (int c = 0; c < k; ++c) {
        const int target = mod(c + pi[i], k);
        std::vector<int> h(n);
        const auto& rc = abstract.coordinates[coset_rep[static_cast<std::size_t>(c)]];
        const auto& rt = abstract.coordinates[coset_rep[static_cast<std::size_t>(target)]];
        for (std::size_t j = 0; j < n; ++j) h[j] = mod((j == i) + rc[j] - rt[j], factors[j]);
        const auto local = kernel_group.index_of(a.element(index_of_coords(h)));
        const bool flip = chi[*local] < 0;
        const std::size_t from = base + static_cast<std::size_t>(c), to = base + static_cast<std::size_t>(target);
        actions[i][2 * from] = static_cast<std::uint16_t>(2 * to + flip);
        actions[i][2 * from + 1] = static_cast<std::uint16_t>(2 * to + !flip);
      }
  }
  FiberActionModel model = make_model(type, std::move(markers), std::move(actions), k, pi);

  // Scatter the fibers so marked ones are not always first.
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(model, perm, std::vector<bool>(m, false));
}

FiberActionModel relabel(const FiberActionModel& model, const std::vector<std::size_t>& fiber_perm,
                         const std::vector<bool>& flip) {
  const std::size_t m = model.fiber_count();
  if (fiber_perm.size() != m || flip.size() != m) throw Error(ErrorCode::InvalidArgument, "relabeling has the wrong size");
  auto phi = [&](std::size_t c) { return 2 * fiber_perm[c / 2] + ((c % 2) ^ (flip[c / 2] ? 1u : 0u)); };
  std::vector<FiberMarker> markers(m);
  for (std::size_t f = 0; f < m; ++f) markers[fiber_perm[f]] = model.markers[f];
  std::vector<std::vector<std::uint16_t>> actions;
  for (const auto& act : model.generator_actions) {
    std::vector<std::uint16_t> out(act.size());
    for (std::size_t c = 0; c < act.size(); ++c) out[phi(c)] = static_cast<std::uint16_t>(phi(act[c]));
    actions.push_back(std::move(out));
  }
  return make_model(model.type, std::move(markers), std::move(actions), model.base_order, model.base_images);
}

std::vector<int> swap_signature(const FiberActionModel& model, group::Index g, const std::vector<std::size_t>& fibers) {
  std::vector<int> out;
  for (auto f : fibers) out.push_back(model.swaps(g, f) ? 1 : 0);
  return out;
}

SelectionResult greedy_selection(const FiberActionModel& model, const group::Subgroup& sub) {
  const std::size_t m = model.fiber_count();
  const auto& g = *model.group;
  SelectionResult out;
  std::vector<bool> covered(m, false);
  for (std::size_t f = 0; f < m; ++f) {
    if (covered[f]) continue;
    const std::size_t start = 2 * f;
    // reach[c] = an element of sub taking `start` to c.
    std::map<std::size_t, group::Index> reach;
    for (group::Index x : sub.members) {
      const std::size_t c = model.element_actions[x][start];
      if (reach.count(c)) continue;
      const auto sibling = reach.find(c ^ 1u);
      if (sibling != reach.end()) {
        out.success = false;
        out.components.clear();
        out.witness = g.mul(x, g.inverse(sibling->second));
        out.fiber = c / 2;
        return out;
      }
      reach.emplace(c, x);
    }
    for (const auto& [c, x] : reach) {
      covered[c / 2] = true;
      out.components.push_back(c);
    }
  }
  std::sort(out.components.begin(), out.components.end());
  out.success = true;
  return out;
}

std::optional<std::pair<group::Index, std::size_t>> find_swap(const FiberActionModel& model,
                                                              const group::Subgroup& sub) {
  for (group::Index x : sub.members)
    for (std::size_t f = 0; f < model.fiber_count(); ++f)
      if (model.swaps(x, f)) return std::make_pair(x, f);
  return std::nullopt;
}

NoSwapSubgroup construct_no_swap_subgroup(const FiberActionModel& model) {
  const auto& g = *model.group;
  const std::size_t m = model.fiber_count();
  const int k = model.base_order;
  std::vector<group::Index> a0, s;
  for (group::Index x = 0; x < g.order(); ++x) {
    bool marked_swap = false, any_swap = false;
    for (std::size_t f = 0; f < m; ++f)
      if (model.swaps(x, f)) {
        any_swap = true;
        marked_swap = marked_swap || model.marked(f);
      }
    if (marked_swap) continue;
    a0.push_back(x);
    if (model.base_projection[x] == 0 && !any_swap) s.push_back(x);
  }
  const group::Subgroup s_sub{&g, s};

  NoSwapSubgroup out;
  out.a0_order = a0.size();
  out.s_order = s.size();
  out.two_rank = model.type.two_rank();

  int image_gcd = k;
  for (auto x : a0) image_gcd = std::gcd(image_gcd, model.base_projection[x]);
  const std::size_t image_order = static_cast<std::size_t>(k / image_gcd);
  for (auto x : a0)
    if (std::gcd(model.base_projection[x], k) == image_gcd && g.element_order(x) == image_order) {
      out.lift = x;
      break;
    }

  auto join = [&](std::optional<group::Index> a) {
    std::vector<group::Index> seeds = group::reduced_generators(g, s_sub);
    if (a) seeds.push_back(*a);
    return group::generated_subgroup(g, seeds);
  };
  if (out.lift) {
    out.subgroup = join(out.lift);
  } else {
    out.clean_lift = false;
    out.subgroup = s_sub;
    for (auto x : a0) {
      auto h = join(x);
      if (h.order() > out.subgroup.order() && !find_swap(model, h)) {
        out.subgroup = std::move(h);
        out.lift = x;
      }
    }
  }
  out.index = g.order() / out.subgroup.order();
  out.within_rank_bound = out.index <= (std::size_t{1} << out.two_rank);
  return out;
}

long long worst_rank_factor() {
  long long best = 1;
  for (const auto& t : representative_types()) best = std::max(best, 1LL << t.two_rank());
  return best;
}

long long weak_geometric_constant() { return kSubgroupIndexBound * worst_rank_factor(); }

AbelianType random_type(std::mt19937_64& rng, std::size_t family) {
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  switch (family % 5) {
    case 0: return AbelianType{{uniform(1, 6), uniform(1, 6)}};
    case 1: return AbelianType{{2 * uniform(1, 3), 2, 2}};
    case 2: return AbelianType{{4, 4, 2}};
    case 3: return AbelianType{{3, 3, 3}};
    default: return AbelianType{{2, 2, 2, 2}};
  }
}

namespace {

TrialResult run_trial(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  const AbelianType type = random_type(rng, static_cast<std::size_t>(trial));
  const FiberActionModel model = random_model(rng, type);
  const NoSwapSubgroup r = construct_no_swap_subgroup(model);
  TrialResult t;
  t.trial = trial;
  t.type = type.describe();
  t.fibers = model.fiber_count();
  t.marked = static_cast<std::size_t>(
      std::count_if(model.markers.begin(), model.markers.end(), [](FiberMarker x) { return x != FiberMarker::None; }));
  t.base_order = model.base_order;
  t.index = r.index;
  t.two_rank = r.two_rank;
  t.clean_lift = r.clean_lift;
  t.within_rank_bound = r.within_rank_bound;
  t.no_swap = !find_swap(model, r.subgroup).has_value();
  t.selection_found = greedy_selection(model, r.subgroup).success;
  return t;
}

}  // namespace

SimulationSummary simulate(std::uint64_t seed, std::size_t trials, bool parallel) {
  SimulationSummary out;
  out.seed = seed;
  out.trials.resize(trials);
  if (parallel && trials > 1) {
    const std::size_t workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16u));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < trials; t += workers) out.trials[t] = run_trial(seed, t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (std::size_t t = 0; t < trials; ++t) out.trials[t] = run_trial(seed, t);
  }
  for (const auto& t : out.trials) {
    out.max_index = std::max(out.max_index, t.index);
    out.swap_failures += !t.no_swap;
    out.selection_failures += !t.selection_found;
    out.no_clean_lift += !t.clean_lift;
    out.rank_bound_exceeded += !t.within_rank_bound;
  }
  return out;
}

}  // namespace jordanlab::conic
