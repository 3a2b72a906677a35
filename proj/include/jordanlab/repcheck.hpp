#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "jordanlab/group.hpp"
#include "jordanlab/rational_matrix.hpp"

// The six-dimensional integral representation of S5 on the basis s_ij
// (i != j in {1, 2, 3}), and exact searches for invariant lines.
namespace jordanlab::repcheck {

using linalg::RationalMatrix;
using linalg::RationalVector;

inline constexpr std::size_t kDimension = 6;
inline const std::array<std::string, kDimension> kBasisLabels{"s12", "s13", "s21", "s23", "s31", "s32"};

struct GroupRepresentation {
  std::shared_ptr<const group::FiniteGroup> source;  // permutations of 5 letters
  std::vector<RationalMatrix> matrices;              // indexed like source elements

  const RationalMatrix& matrix(group::Index g) const { return matrices[g]; }
  std::size_t dimension() const { return kDimension; }
};

/// Matrix of the 5-cycle (1 2 3 4 5); column j holds the image of basis vector j.
RationalMatrix five_cycle_matrix();
/// Matrix of the transposition (1 2), which permutes the labels.
RationalMatrix transposition_matrix();

/// Builds all 120 matrices from the two generators and checks
/// matrix(gh) = matrix(g) matrix(h) on every pair. Throws HomomorphismFailure.
GroupRepresentation s5_representation();

/// Checks every pair of elements; throws HomomorphismFailure on a mismatch.
void verify_homomorphism(const GroupRepresentation& rep);

/// The contragredient: g acts by the inverse transpose of its matrix.
GroupRepresentation dual(const GroupRepresentation& rep);

/// Permutation of {1..5} written in 1-based cycle notation.
group::GroupElement s5_element(const std::vector<std::vector<int>>& cycles);
group::Subgroup subgroup_from_cycles(const GroupRepresentation& rep,
                                     const std::vector<std::vector<std::vector<int>>>& generators);

struct FixedSpace {
  std::vector<RationalVector> basis;
  linalg::Rational projector_trace;
  std::size_t dimension() const { return basis.size(); }
};

/// Common fixed vectors of H, by exact kernel intersection over generators of H.
/// Throws ProjectorMismatch if the dimension disagrees with the trace of the
/// averaging projector.
FixedSpace fixed_space(const GroupRepresentation& rep, const group::Subgroup& h);

struct CyclotomicDegree {
  unsigned order = 0;
  unsigned degree = 0;
  unsigned multiplicity = 0;
};

struct InvariantLineReport {
  std::string name;
  std::size_t order = 0;
  bool rational_line_exists = false;
  std::vector<std::string> witness;  // integer coordinates in the s_ij basis
  std::string witness_character;     // "trivial" or "sign<k>"
  std::size_t fix_space_dim = 0;     // fixed space of the commutator subgroup
  bool quotient_cyclic = false;
  std::string quotient_generator;  // cycle notation
  std::vector<CyclotomicDegree> complex_note;
  bool complex_line_exists = false;
  std::string note;
};

InvariantLineReport rational_invariant_lines(const GroupRepresentation& rep, const group::Subgroup& g,
                                             const std::string& name);

struct NamedSubgroup {
  std::string name;
  group::Subgroup subgroup;
  bool expected_line;
};

/// S5, A5, 5:4, 5:2 and C5 in that order with their expected verdicts.
std::vector<NamedSubgroup> dp5_subgroups(const GroupRepresentation& rep);

std::vector<InvariantLineReport> dp5_suite(const GroupRepresentation& rep);
std::vector<InvariantLineReport> dp5_suite();

std::string cycle_notation(const group::Permutation& p);

}  // namespace jordanlab::repcheck
