#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "jordanlab/group.hpp"
#include "jordanlab/jordan.hpp"
#include "jordanlab/report.hpp"

// The group H(n) = (Z/nZ)^2 x| D6, where D6 (order 12) acts on the
// translations through rho: r -> rho_r, s -> rho_s. The rotation r has
// order 6; r^2 acts by U and r^3 by Z = -I.
namespace jordanlab::lemma52 {

/// Row-major 2x2 matrix over Z/nZ.
using Mat2 = std::array<int, 4>;

struct ActionData {
  int n = 0;
  Mat2 U{};
  Mat2 Z{};
  Mat2 rho_r{};
  Mat2 rho_s{};
};

Mat2 mat_mul(const Mat2& a, const Mat2& b, int n);
Mat2 mat_pow(const Mat2& a, int e, int n);
Mat2 mat_identity(int n);
Mat2 mat_sub_identity(const Mat2& a, int n);
int mat_det(const Mat2& a, int n);

/// Twists are indexed a + 6b for r^a s^b.
inline constexpr int kDihedralOrder = 12;
int dihedral_mul(int x, int y);
int dihedral_inverse(int x);
inline constexpr int kRotation = 1;
inline constexpr int kReflection = 6;

/// Solves rho_r = Z U^{-1} (forced by r = r^3 (r^2)^{-1}) and picks rho_s,
/// preferring the coordinate swap. All dihedral relations are checked;
/// throws NoConsistentAction if they fail.
ActionData build_action_data(int n);

std::shared_ptr<const group::TwistAction> twist_action(const ActionData& data);

/// Generators: the two unit translations, r, s.
std::vector<group::GroupElement> generators(const ActionData& data);

/// H(n), order 12 n^2. Throws CapExceeded when 12 n^2 > cap.
group::FiniteGroup build_group(int n, std::size_t cap = group::kDefaultCap);

/// Elements with trivial twist.
group::Subgroup translation_subgroup(const group::FiniteGroup& h);

struct DeterminantCheck {
  int n = 0;
  int det_u_minus_i = 0;  // reduced mod n
  int det_z_minus_i = 0;
  bool u_minus_i_invertible = false;
  bool z_minus_i_invertible = false;
  bool gcd_with_6_is_1 = false;
};

DeterminantCheck determinant_check(int n);

struct Verification {
  int n = 0;
  bool hypothesis_holds = false;  // gcd(n, 6) == 1 and n > 1
  ActionData data;
  DeterminantCheck determinants;
  std::size_t group_order = 0;
  std::size_t jordan_index = 0;
  std::size_t witness_order = 0;
  bool witness_is_translation_subgroup = false;
  std::size_t normal_subgroup_count = 0;
  report::VerificationReport report;
};

/// Runs the Jordan index computation on H(n). When the hypothesis fails the
/// report is informational rather than pass/fail.
Verification verify(int n, std::size_t cap = group::kDefaultCap);

}  // namespace jordanlab::lemma52
