#include "jordanlab/lemma52.hpp"

#include <numeric>
#include <string>

#include "jordanlab/error.hpp"

namespace jordanlab::lemma52 {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

Mat2 reduce(const Mat2& a, int n) { return {mod(a[0], n), mod(a[1], n), mod(a[2], n), mod(a[3], n)}; }

const char* kAnchor = "does not admit a normal abelian subgroup of index smaller than 12";

}  // namespace

Mat2 mat_mul(const Mat2& a, const Mat2& b, int n) {
  return {mod(static_cast<long long>(a[0]) * b[0] + static_cast<long long>(a[1]) * b[2], n),
          mod(static_cast<long long>(a[0]) * b[1] + static_cast<long long>(a[1]) * b[3], n),
          mod(static_cast<long long>(a[2]) * b[0] + static_cast<long long>(a[3]) * b[2], n),
          mod(static_cast<long long>(a[2]) * b[1] + static_cast<long long>(a[3]) * b[3], n)};
}

Mat2 mat_identity(int n) { return reduce({1, 0, 0, 1}, n); }

Mat2 mat_pow(const Mat2& a, int e, int n) {
  Mat2 r = mat_identity(n);
  for (int i = 0; i < e; ++i) r = mat_mul(r, a, n);
  return r;
}

Mat2 mat_sub_identity(const Mat2& a, int n) { return reduce({a[0] - 1, a[1], a[2], a[3] - 1}, n); }

int mat_det(const Mat2& a, int n) {
  return mod(static_cast<long long>(a[0]) * a[3] - static_cast<long long>(a[1]) * a[2], n);
}

int dihedral_mul(int x, int y) {
  const int a = x % 6, b = x / 6, c = y % 6, e = y / 6;
  const int rot = b == 0 ? a + c : a - c;
  return mod(rot, 6) + 6 * ((b + e) % 2);
}

int dihedral_inverse(int x) {
  for (int y = 0; y < kDihedralOrder; ++y)
    if (dihedral_mul(x, y) == 0) return y;
  return 0;
}

namespace {

bool dihedral_relations_hold(const Mat2& r, const Mat2& s, int n) {
  const Mat2 id = mat_identity(n);
  if (mat_pow(r, 6, n) != id || mat_mul(s, s, n) != id) return false;
  return mat_mul(mat_mul(s, r, n), s, n) == mat_pow(r, 5, n);
}

}  // namespace

ActionData build_action_data(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  ActionData d;
  d.n = n;
  d.U = reduce({-1, 1, -1, 0}, n);
  d.Z = reduce({-1, 0, 0, -1}, n);
  // det U = 1, so U^{-1} = adj U.
  const Mat2 u_inv = reduce({d.U[3], -d.U[1], -d.U[2], d.U[0]}, n);
  d.rho_r = mat_mul(d.Z, u_inv, n);

  const Mat2 swap = reduce({0, 1, 1, 0}, n);
  if (dihedral_relations_hold(d.rho_r, swap, n)) {
    d.rho_s = swap;
  } else {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      for (int b = 0; b < n && !found; ++b)
        for (int c = 0; c < n && !found; ++c)
          for (int e = 0; e < n && !found; ++e)
            if (dihedral_relations_hold(d.rho_r, {a, b, c, e}, n)) {
              d.rho_s = {a, b, c, e};
              found = true;
            }
    if (!found) throw Error(ErrorCode::NoConsistentAction, "no reflection image for n=" + std::to_string(n));
  }

  if (mat_mul(d.rho_r, d.rho_r, n) != d.U || mat_pow(d.rho_r, 3, n) != d.Z ||
      !dihedral_relations_hold(d.rho_r, d.rho_s, n))
    throw Error(ErrorCode::NoConsistentAction, "relation check failed for n=" + std::to_string(n));
  return d;
}

std::shared_ptr<const group::TwistAction> twist_action(const ActionData& data) {
  auto act = std::make_shared<group::TwistAction>();
  act->modulus = data.n;
  act->count = kDihedralOrder;
  act->mul.resize(kDihedralOrder * kDihedralOrder);
  act->inverse.resize(kDihedralOrder);
  act->matrices.resize(kDihedralOrder);
  for (int x = 0; x < kDihedralOrder; ++x) {
    for (int y = 0; y < kDihedralOrder; ++y) act->mul[x * kDihedralOrder + y] = dihedral_mul(x, y);
    act->inverse[x] = dihedral_inverse(x);
    act->matrices[x] = mat_mul(mat_pow(data.rho_r, x % 6, data.n), mat_pow(data.rho_s, x / 6, data.n), data.n);
  }
  return act;
}

std::vector<group::GroupElement> generators(const ActionData& data) {
  auto act = twist_action(data);
  return {group::GroupElement(group::SemidirectPair{{1, 0}, 0, act}),
          group::GroupElement(group::SemidirectPair{{0, 1}, 0, act}),
          group::GroupElement(group::SemidirectPair{{0, 0}, kRotation, act}),
          group::GroupElement(group::SemidirectPair{{0, 0}, kReflection, act})};
}

group::FiniteGroup build_group(int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  const std::size_t expected = 12u * static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (expected > cap)
    throw Error(ErrorCode::CapExceeded, "H(" + std::to_string(n) + ") has order " + std::to_string(expected));
  auto gens = generators(build_action_data(n));
  return group::close_generators(gens, cap);
}

group::Subgroup translation_subgroup(const group::FiniteGroup& h) {
  group::Subgroup a{&h, {}};
  for (group::Index i = 0; i < h.order(); ++i)
    if (h.element(i).as_semidirect().twist == 0) a.members.push_back(i);
  return a;
}

DeterminantCheck determinant_check(int n) {
  const ActionData d = build_action_data(n);
  DeterminantCheck c;
  c.n = n;
  c.det_u_minus_i = mat_det(mat_sub_identity(d.U, n), n);
  c.det_z_minus_i = mat_det(mat_sub_identity(d.Z, n), n);
  c.u_minus_i_invertible = std::gcd(c.det_u_minus_i, n) == 1;
  c.z_minus_i_invertible = std::gcd(c.det_z_minus_i, n) == 1;
  c.gcd_with_6_is_1 = std::gcd(n, 6) == 1;
  return c;
}

Verification verify(int n, std::size_t cap) {
  Verification v;
  v.n = n;
  v.hypothesis_holds = n > 1 && std::gcd(n, 6) == 1;
  v.data = build_action_data(n);
  v.determinants = determinant_check(n);

  const group::FiniteGroup h = build_group(n, cap);
  const auto lattice = jordan::normal_subgroups(h);
  const auto cert = jordan::jordan_index(h, lattice);
  v.group_order = h.order();
  v.jordan_index = cert.jordan_index;
  v.witness_order = cert.witness.order();
  v.witness_is_translation_subgroup = cert.witness == translation_subgroup(h);
  v.normal_subgroup_count = lattice.subgroups.size();

  nlohmann::json details = {{"order", v.group_order},
                            {"witness_order", v.witness_order},
                            {"witness_is_translation_subgroup", v.witness_is_translation_subgroup},
                            {"normal_subgroups", v.normal_subgroup_count},
                            {"det_U_minus_I", v.determinants.det_u_minus_i},
                            {"det_Z_minus_I", v.determinants.det_z_minus_i},
                            {"three_and_four_are_units",
                             v.determinants.u_minus_i_invertible && v.determinants.z_minus_i_invertible}};
  const std::string id = "lemma52.n" + std::to_string(n);
  if (v.hypothesis_holds) {
    std::string note = "witness of order " + std::to_string(v.witness_order);
    if (!v.witness_is_translation_subgroup) note += " is not the translation subgroup";
    v.report = report::check("lemma52", id, kAnchor, v.jordan_index, 12, "paper value; exhaustive enumeration", note);
  } else {
    v.report = report::info("lemma52", id, kAnchor, v.jordan_index, "computed outside hypothesis",
                            "HypothesisViolated: gcd(n,6) != 1 or n = 1");
  }
  v.report.details = std::move(details);
  return v;
}

}  // namespace jordanlab::lemma52
