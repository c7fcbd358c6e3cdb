#include "mildcert/mildness.hpp"

#include <algorithm>

#include "mildcert/error.hpp"
#include "mildcert/kummer.hpp"

namespace mildcert {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

FpVector embed(const FpVector& head, std::size_t total) {
  FpVector out = FpVector::Zero(idx(total));
  out.head(head.size()) = head;
  return out;
}

FpVector unit_vector(std::size_t n, std::size_t i) {
  FpVector out = FpVector::Zero(idx(n));
  out(idx(i)) = 1;
  return out;
}

}  // namespace

FpVector cup_components(const LinkingTable& table, const FpVector& a, const FpVector& b) {
  const std::size_t n = table.size();
  if (static_cast<std::size_t>(a.size()) != n || static_cast<std::size_t>(b.size()) != n) {
    throw Error("cup product: character length does not match the places");
  }
  const Integer p = table.p();
  FpVector out(idx(n));
  for (std::size_t v = 0; v < n; ++v) {
    const Integer af = table.frobenius_value(a, v);
    const Integer bf = table.frobenius_value(b, v);
    out(idx(v)) = reduce_mod(af * b(idx(v)) - a(idx(v)) * bf, p);
  }
  return out;
}

CharacterBasis character_basis(const LinkingTable& table, std::size_t m) {
  const std::size_t n = table.size();
  if (n != 2 * m) throw Error("character basis needs 2m places (S0 then Q)");
  const Integer p = table.p();

  std::vector<FpVector> split_rows;
  for (Integer t : table.marking()) {
    FpVector row(idx(m));
    for (std::size_t i = 0; i < m; ++i) row(idx(i)) = table.symbol_at(t, i);
    split_rows.push_back(std::move(row));
  }

  CharacterBasis out;
  out.m = m;
  for (std::size_t a = 0; a < m; ++a) {
    const Integer qa = table.places()[m + a].q;
    FpVector frob(idx(m));
    for (std::size_t i = 0; i < m; ++i) frob(idx(i)) = table.symbol_at(qa, i);

    auto rows = split_rows;
    rows.push_back(frob);
    const std::size_t k = rows.size();

    FpVector rhs_psi = FpVector::Zero(idx(k));
    rhs_psi(idx(k - 1)) = 1;
    const auto psi = solve(FpMatrix::from_row_vectors(rows, idx(m), p), rhs_psi);
    if (!psi) throw Error("no character psi_" + std::to_string(a + 1) + " with nonzero Frobenius at " + std::to_string(qa));

    rows.push_back(unit_vector(m, a));
    FpVector rhs_chi = FpVector::Zero(idx(k + 1));
    rhs_chi(idx(k)) = 1;
    const auto chi = solve(FpMatrix::from_row_vectors(rows, idx(m), p), rhs_chi);
    if (!chi) throw Error("no character chi_" + std::to_string(a + 1) + " ramified at " + std::to_string(table.places()[a].q));

    out.chi.push_back(embed(*chi, n));
    out.psi.push_back(embed(*psi, n));
    out.eta.push_back(unit_vector(n, m + a));
  }
  return out;
}

CupMatrix assemble_cup_matrix(const LinkingTable& table, const CharacterBasis& basis) {
  const std::size_t m = basis.m;
  if (table.size() != 2 * m) throw Error("cup matrix: table does not have 2m places");
  CupMatrix out(table.p());
  out.entries = FpMatrix(idx(2 * m), idx(2 * m), table.p());
  for (std::size_t a = 0; a < m; ++a) {
    const FpVector top = cup_components(table, basis.chi[a], basis.eta[a]);
    const FpVector bottom = cup_components(table, basis.psi[a], basis.eta[a]);
    for (std::size_t c = 0; c < 2 * m; ++c) {
      out.entries.set(idx(a), idx(c), top(idx(c)));
      out.entries.set(idx(m + a), idx(c), bottom(idx(c)));
    }
    out.row_labels.push_back("chi" + std::to_string(a + 1) + ".eta" + std::to_string(a + 1));
  }
  for (std::size_t a = 0; a < m; ++a) {
    out.row_labels.push_back("psi" + std::to_string(a + 1) + ".eta" + std::to_string(a + 1));
  }
  for (std::size_t c = 0; c < 2 * m; ++c) out.col_labels.push_back(std::to_string(table.places()[c].q));
  return out;
}

bool shape_check(const FpMatrix& cup) {
  if (cup.rows() != cup.cols() || cup.rows() % 2 != 0) return false;
  const Eigen::Index m = cup.rows() / 2;
  for (Eigen::Index a = 0; a < m; ++a) {
    if (cup(a, a) == 0) return false;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (cup(a, m + j) != 0) return false;
      if (j != a && cup(m + a, m + j) != 0) return false;
    }
    if (cup(m + a, m + a) == 0) return false;
  }
  return true;
}

bool matches_block_shape(const FpMatrix& cup) {
  if (!shape_check(cup)) return false;
  const Eigen::Index m = cup.rows() / 2;
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (j != a && cup(a, j) != 0) return false;
    }
  }
  return true;
}

bool vv_block_zero(const LinkingTable& table, const CharacterBasis& basis) {
  for (const auto& x : basis.eta) {
    for (const auto& y : basis.eta) {
      if (!is_zero_vector(cup_components(table, x, y))) return false;
    }
  }
  return true;
}

bool mildness_check(const FpMatrix& cup, bool vv_zero) {
  if (cup.rows() == 0 || cup.rows() != cup.cols()) return false;
  return vv_zero && rank(cup) == static_cast<std::size_t>(cup.cols());
}

std::vector<FpVector> split_character_basis(const LinkingTable& table) {
  const FpMatrix split = table.splitting_matrix();
  if (split.rows() == 0) {
    std::vector<FpVector> out;
    for (std::size_t i = 0; i < table.size(); ++i) out.push_back(unit_vector(table.size(), i));
    return out;
  }
  return kernel_basis(split);
}

bool satisfies_split_criterion(const LinkingTable& table, const MildSplit& split) {
  const std::size_t n = table.size();
  if (n == 0 || split.U.empty() || split.V.empty()) return false;
  PrimeSet places;
  for (const auto& t : table.places()) places.push_back(t.q);
  places = make_prime_set(places);
  if (kummer_dimension(places, table.marking(), table.p()) != 0) return false;

  for (const auto& x : split.V) {
    for (const auto& y : split.V) {
      if (!is_zero_vector(cup_components(table, x, y))) return false;
    }
  }
  std::vector<FpVector> rows;
  for (const auto& u : split.U) {
    for (const auto& v : split.V) rows.push_back(cup_components(table, u, v));
  }
  return rank(FpMatrix::from_row_vectors(rows, idx(n), table.p())) == n;
}

std::optional<MildSplit> find_coordinate_mild_split(const LinkingTable& table) {
  const auto basis = split_character_basis(table);
  const std::size_t k = basis.size();
  if (k < 2 || k > 20) return std::nullopt;
  for (unsigned long mask = 1; mask + 1 < (1UL << k); ++mask) {
    MildSplit split;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1UL ? split.V : split.U).push_back(basis[i]);
    if (satisfies_split_criterion(table, split)) return split;
  }
  return std::nullopt;
}

}  // namespace mildcert
