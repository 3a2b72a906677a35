#include "jordanlab/repcheck.hpp"

#include <algorithm>
#include <cstdint>

#include "jordanlab/error.hpp"

namespace jordanlab::repcheck {

using linalg::Rational;

namespace {

enum Label : std::size_t { s12, s13, s21, s23, s31, s32 };

RationalMatrix from_images(const std::array<std::vector<std::pair<std::size_t, int>>, kDimension>& images) {
  RationalMatrix m(kDimension, kDimension);
  for (std::size_t col = 0; col < kDimension; ++col)
    for (auto [row, coeff] : images[col]) m.at(row, col) += coeff;
  return m;
}

// Small-integer copy of an integral representation, used for the exhaustive
// pair check. Entries of this representation are tiny, so int64 is exact.
using IntMatrix = std::array<std::int64_t, kDimension * kDimension>;

bool to_int(const RationalMatrix& m, IntMatrix& out) {
  for (std::size_t i = 0; i < kDimension; ++i)
    for (std::size_t j = 0; j < kDimension; ++j) {
      const Rational& x = m.at(i, j);
      if (boost::multiprecision::denominator(x) != 1 || abs(x) > 1000) return false;
      out[i * kDimension + j] = static_cast<std::int64_t>(boost::multiprecision::numerator(x));
    }
  return true;
}

}  // namespace

RationalMatrix five_cycle_matrix() {
  return from_images({{
      /* s12 */ {{s31, 1}},
      /* s13 */ {{s13, 1}, {s31, -1}, {s23, -1}},
      /* s21 */ {{s21, 1}},
      /* s23 */ {{s12, 1}, {s21, -1}, {s32, -1}},
      /* s31 */ {{s13, 1}, {s31, -1}, {s21, 1}},
      /* s32 */ {{s12, 1}, {s21, -1}, {s31, 1}},
  }});
}

RationalMatrix transposition_matrix() {
  return from_images({{
      /* s12 */ {{s21, 1}},
      /* s13 */ {{s23, 1}},
      /* s21 */ {{s12, 1}},
      /* s23 */ {{s13, 1}},
      /* s31 */ {{s32, 1}},
      /* s32 */ {{s31, 1}},
  }});
}

group::GroupElement s5_element(const std::vector<std::vector<int>>& cycles) {
  return group::GroupElement(group::permutation_from_cycles(5, cycles));
}

void verify_homomorphism(const GroupRepresentation& rep) {
  const auto& g = *rep.source;
  const std::size_t n = g.order();
  if (rep.matrices.size() != n) throw Error(ErrorCode::HomomorphismFailure, "matrix count differs from group order");
  std::vector<IntMatrix> ints(n);
  bool integral = true;
  for (std::size_t i = 0; i < n && integral; ++i) integral = to_int(rep.matrices[i], ints[i]);
  auto fail = [&](group::Index a, group::Index b) {
    throw Error(ErrorCode::HomomorphismFailure, "matrix(gh) != matrix(g) matrix(h) for elements " +
                                                    std::to_string(a) + ", " + std::to_string(b));
  };
  for (group::Index a = 0; a < n; ++a)
    for (group::Index b = 0; b < n; ++b) {
      const group::Index ab = g.mul(a, b);
      if (!integral) {
        if (rep.matrices[a] * rep.matrices[b] != rep.matrices[ab]) fail(a, b);
        continue;
      }
      const auto &x = ints[a], &y = ints[b], &z = ints[ab];
      for (std::size_t i = 0; i < kDimension; ++i)
        for (std::size_t j = 0; j < kDimension; ++j) {
          std::int64_t s = 0;
          for (std::size_t k = 0; k < kDimension; ++k) s += x[i * kDimension + k] * y[k * kDimension + j];
          if (s != z[i * kDimension + j]) fail(a, b);
        }
    }
}

GroupRepresentation s5_representation() {
  const std::vector<group::GroupElement> gens{s5_element({{1, 2, 3, 4, 5}}), s5_element({{1, 2}})};
  const std::vector<RationalMatrix> gen_matrices{five_cycle_matrix(), transposition_matrix()};
  auto source = std::make_shared<const group::FiniteGroup>(group::close_generators(gens));
  const auto& g = *source;
  std::vector<group::Index> gen_index;
  for (const auto& x : gens) gen_index.push_back(*g.index_of(x));

  // Every element beyond the identity is a right multiple of an element with
  // a smaller index, so one pass in index order reaches all of them.
  std::vector<RationalMatrix> matrices(g.order());
  std::vector<bool> assigned(g.order(), false);
  matrices[group::FiniteGroup::identity()] = RationalMatrix::identity(kDimension);
  assigned[group::FiniteGroup::identity()] = true;
  for (group::Index i = 0; i < g.order(); ++i) {
    if (!assigned[i]) throw Error(ErrorCode::HomomorphismFailure, "element not reached by generator words");
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const group::Index j = g.mul(i, gen_index[k]);
      if (assigned[j]) continue;
      matrices[j] = matrices[i] * gen_matrices[k];
      assigned[j] = true;
    }
  }
  GroupRepresentation rep{source, std::move(matrices)};
  verify_homomorphism(rep);
  return rep;
}

GroupRepresentation dual(const GroupRepresentation& rep) {
  GroupRepresentation out{rep.source, {}};
  out.matrices.reserve(rep.matrices.size());
  for (const auto& m : rep.matrices) out.matrices.push_back(m.inverse().transpose());
  return out;
}

group::Subgroup subgroup_from_cycles(const GroupRepresentation& rep,
                                     const std::vector<std::vector<std::vector<int>>>& generators) {
  std::vector<group::Index> seeds;
  for (const auto& cycles : generators) {
    auto idx = rep.source->index_of(s5_element(cycles));
    if (!idx) throw Error(ErrorCode::InvalidArgument, "permutation not in the source group");
    seeds.push_back(*idx);
  }
  return group::generated_subgroup(*rep.source, seeds);
}

FixedSpace fixed_space(const GroupRepresentation& rep, const group::Subgroup& h) {
  const RationalMatrix id = RationalMatrix::identity(rep.dimension());
  std::vector<RationalMatrix> blocks;
  for (group::Index x : group::reduced_generators(*rep.source, h)) blocks.push_back(rep.matrix(x) - id);
  if (blocks.empty()) blocks.emplace_back(1, rep.dimension());
  FixedSpace out;
  out.basis = RationalMatrix::vstack(blocks).kernel();
  Rational trace = 0;
  for (group::Index x : h.members) trace += rep.matrix(x).trace();
  out.projector_trace = trace / Rational(static_cast<long long>(h.order()));
  if (out.projector_trace != Rational(static_cast<long long>(out.dimension())))
    throw Error(ErrorCode::ProjectorMismatch, "kernel dimension " + std::to_string(out.dimension()) +
                                                  " but projector trace " + out.projector_trace.str());
  return out;
}

std::string cycle_notation(const group::Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p.image[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p.image[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

InvariantLineReport rational_invariant_lines(const GroupRepresentation& rep, const group::Subgroup& g,
                                             const std::string& name) {
  const auto& src = *rep.source;
  const group::FiniteGroup local = group::subgroup_as_group(src, g);
  std::vector<group::Index> to_src(local.order());
  for (group::Index i = 0; i < local.order(); ++i) to_src[i] = *src.index_of(local.element(i));

  InvariantLineReport out;
  out.name = name;
  out.order = local.order();

  const RationalMatrix id = RationalMatrix::identity(rep.dimension());
  const auto characters = group::sign_characters(local);
  for (std::size_t k = 0; k < characters.size() && !out.rational_line_exists; ++k) {
    std::vector<RationalMatrix> blocks;
    for (group::Index x : local.generators())
      blocks.push_back(rep.matrix(to_src[x]) - id.scaled(characters[k][x]));
    if (blocks.empty()) blocks.emplace_back(1, rep.dimension());
    const auto kernel = RationalMatrix::vstack(blocks).kernel();
    if (kernel.empty()) continue;
    out.rational_line_exists = true;
    for (const auto& v : kernel.front()) out.witness.push_back(v.str());
    out.witness_character = k == 0 ? "trivial" : "sign" + std::to_string(k);
  }

  const group::Subgroup derived = group::commutator_subgroup(local);
  group::Subgroup derived_src{&src, {}};
  for (group::Index x : derived.members) derived_src.members.push_back(to_src[x]);
  std::sort(derived_src.members.begin(), derived_src.members.end());
  const FixedSpace fixed = fixed_space(rep, derived_src);
  out.fix_space_dim = fixed.dimension();

  const auto derived_gens = group::reduced_generators(local, derived);
  for (group::Index x = 0; x < local.order() && !out.quotient_cyclic; ++x) {
    std::vector<group::Index> seeds = derived_gens;
    seeds.push_back(x);
    if (group::generated_subgroup(local, seeds).order() != local.order()) continue;
    out.quotient_cyclic = true;
    out.quotient_generator = cycle_notation(local.element(x).as_permutation());
    if (fixed.dimension() == 0) break;
    // The fixed space of a normal subgroup is G-stable; restrict x to it.
    const RationalMatrix w = RationalMatrix::from_columns(fixed.basis, rep.dimension());
    const RationalMatrix wt = w.transpose();
    const RationalMatrix image = rep.matrix(to_src[x]) * w;
    const RationalMatrix restricted = (wt * w).inverse() * (wt * image);
    if (w * restricted != image) throw Error(ErrorCode::ProjectorMismatch, "fixed space is not stable");
    for (const auto& f : linalg::cyclotomic_factorization(linalg::characteristic_polynomial(restricted)).factors)
      out.complex_note.push_back({f.order, f.degree, f.multiplicity});
  }
  out.complex_line_exists = out.quotient_cyclic && out.fix_space_dim > 0;

  if (out.rational_line_exists)
    out.note = "representation-theoretic condition only; singularities of the hyperplane section not checked";
  else if (out.complex_line_exists)
    out.note = "no rational line; an eigenline of " + out.quotient_generator + " is invariant over the complex numbers";
  return out;
}

std::vector<NamedSubgroup> dp5_subgroups(const GroupRepresentation& rep) {
  const auto& src = *rep.source;
  const group::Subgroup c5 = subgroup_from_cycles(rep, {{{1, 3, 4, 5, 2}}});
  const group::Index c = *src.index_of(s5_element({{1, 3, 4, 5, 2}}));
  group::Subgroup normalizer{&src, {}};
  for (group::Index x = 0; x < src.order(); ++x)
    if (c5.contains(src.conjugate(x, c))) normalizer.members.push_back(x);
  return {
      {"S5", group::whole_group(src), false},
      {"A5", group::commutator_subgroup(src), false},
      {"5:4", normalizer, false},
      {"5:2", subgroup_from_cycles(rep, {{{1, 3, 4, 5, 2}}, {{3, 2}, {4, 5}}}), true},
      {"C5", c5, true},
  };
}

std::vector<InvariantLineReport> dp5_suite(const GroupRepresentation& rep) {
  std::vector<InvariantLineReport> out;
  for (const auto& s : dp5_subgroups(rep)) out.push_back(rational_invariant_lines(rep, s.subgroup, s.name));
  return out;
}

std::vector<InvariantLineReport> dp5_suite() { return dp5_suite(s5_representation()); }

}  // namespace jordanlab::repcheck
