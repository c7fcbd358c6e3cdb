#ifndef MILDCERT_MILDNESS_HPP
#define MILDCERT_MILDNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mildcert/fp_linalg.hpp"
#include "mildcert/linking_table.hpp"

namespace mildcert {

/// Local cup product of two characters, one component per place:
///   (a u b)_v = a(F_v) b(tau_v) - a(tau_v) b(F_v).
FpVector cup_components(const LinkingTable& table, const FpVector& a, const FpVector& b);

/// Characters attached to a certificate with places S0 (first m) then Q.
/// chi_a and psi_a live on the S0 coordinates; eta_a is the coordinate
/// character at q_a.
struct CharacterBasis {
  std::size_t m = 0;
  std::vector<FpVector> chi;
  std::vector<FpVector> psi;
  std::vector<FpVector> eta;

  friend bool operator==(const CharacterBasis&, const CharacterBasis&) = default;
};

/// chi_a: split at the marking, trivial on Frob_{q_a}, chi_a(tau_{p_a}) = 1.
/// psi_a: split at the marking, psi_a(Frob_{q_a}) = 1.
CharacterBasis character_basis(const LinkingTable& table, std::size_t m);

struct CupMatrix {
  FpMatrix entries;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  explicit CupMatrix(Integer p = 3) : entries(p) {}
  std::size_t m() const noexcept { return static_cast<std::size_t>(entries.cols()) / 2; }
  friend bool operator==(const CupMatrix&, const CupMatrix&) = default;
};

/// Rows chi_a u eta_a then psi_a u eta_a; columns p_1..p_m, q_1..q_m.
CupMatrix assemble_cup_matrix(const LinkingTable& table, const CharacterBasis& basis);

/// Rows 1..m: nonzero (a, a) entry and zero in every q-column.
/// Rows m+1..2m: nonzero (a, q_a) entry and zero in the other q-columns.
bool shape_check(const FpMatrix& cup);

/// Strict form: additionally the p-block of the first m rows is diagonal.
bool matches_block_shape(const FpMatrix& cup);

/// eta_a u eta_b vanishes at every place for all a, b.
bool vv_block_zero(const LinkingTable& table, const CharacterBasis& basis);

/// V u V = 0 and U u V spans the 2m-dimensional H^2.
bool mildness_check(const FpMatrix& cup, bool vv_zero);

/// A split H^1 = U + V of the characters over a table. Vectors are in place
/// coordinates.
struct MildSplit {
  std::vector<FpVector> U;
  std::vector<FpVector> V;
};

/// Checks the splitting criterion for mildness over the table's places:
/// H^2 != 0, V u V = 0 and U u V = H^2, where H^2 is identified with the sum of
/// the local components (requires V_S^T = 0).
bool satisfies_split_criterion(const LinkingTable& table, const MildSplit& split);

/// Searches splits of the basis of split-at-marking characters into two
/// nonempty parts, in order of increasing bitmask of V.
std::optional<MildSplit> find_coordinate_mild_split(const LinkingTable& table);

/// Basis of characters unramified outside the places and split at the marking.
std::vector<FpVector> split_character_basis(const LinkingTable& table);

}  // namespace mildcert

#endif  // MILDCERT_MILDNESS_HPP
