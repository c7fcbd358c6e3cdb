#include "mildcert/conditions.hpp"

#include <algorithm>

#include "mildcert/error.hpp"

namespace mildcert {

bool splits_in_unit_kummer_field(const TamePrime& q, const PrimeSet& T) {
  if (contains(T, q.q)) throw Error("splitting test needs q outside T");
  return std::all_of(T.begin(), T.end(),
                     [&](Integer t) { return is_pth_power_residue(t, q.q, q.p); });
}

EtaCharacter eta_character(const TamePrime& q_b, const PrimeSet& T, Integer p) {
  if (q_b.p != p) throw Error("eta character: modulus mismatch");
  if (!splits_in_unit_kummer_field(q_b, T)) {
    throw Error("eta character undefined: h1 may vanish (" + std::to_string(q_b.q) +
                " does not split in the T-unit Kummer field)");
  }
  return {q_b, T};
}

FpScalar eta_value(const EtaCharacter& eta, Integer a) { return linking_symbol(a, eta.conductor); }

FrobeniusVector frobenius_vector(Integer q, const std::vector<TamePrime>& S0, const PrimeSet& T) {
  FrobeniusVector out{q, S0, T, FpVector::Zero(static_cast<Eigen::Index>(S0.size()))};
  for (std::size_t i = 0; i < S0.size(); ++i) {
    if (S0[i].q == q) throw Error("Frobenius undefined at ramified place");
    out.vec(static_cast<Eigen::Index>(i)) = linking_symbol(q, S0[i]).value;
  }
  return out;
}

std::string_view clause_name(BaClause c) {
  switch (c) {
    case BaClause::kUnitKummerSplit:
      return "splits-in-unit-kummer-field";
    case BaClause::kOtherSlotsSplit:
      return "splits-at-other-s-elements";
    case BaClause::kPriorSplit:
      return "splits-against-earlier-linking-primes";
    case BaClause::kOwnSlotInert:
      return "inert-at-own-s-element";
    case BaClause::kFrobeniusOffInertia:
      return "frobenius-outside-inertia";
  }
  return "unknown";
}

namespace {

FpMatrix build_inertia_span(std::size_t slot, const std::vector<TamePrime>& S0, const PrimeSet& T,
                            Integer p) {
  const auto m = static_cast<Eigen::Index>(S0.size());
  std::vector<FpVector> rows;
  FpVector unit = FpVector::Zero(m);
  unit(static_cast<Eigen::Index>(slot)) = 1;
  rows.push_back(unit);
  for (Integer t : T) {
    FpVector row(m);
    for (Eigen::Index i = 0; i < m; ++i) row(i) = linking_symbol(t, S0[static_cast<std::size_t>(i)]).value;
    rows.push_back(std::move(row));
  }
  return FpMatrix::from_row_vectors(rows, m, p);
}

}  // namespace

ConditionBa::ConditionBa(std::size_t slot, std::vector<TamePrime> S0, PrimeSet T,
                         std::vector<TamePrime> prior)
    : slot_(slot),
      S0_(std::move(S0)),
      T_(std::move(T)),
      prior_(std::move(prior)),
      p_(S0_.empty() ? 3 : S0_.front().p),
      inertia_span_(p_) {
  if (slot_ >= S0_.size()) throw Error("slot index out of range");
  for (const auto& s : S0_) {
    if (contains(T_, s.q)) throw Error("S0 must be disjoint from T");
  }
  inertia_span_ = build_inertia_span(slot_, S0_, T_, p_);
}

BaOutcome ConditionBa::evaluate(Integer q) const {
  const auto fail = [](BaClause c) { return BaOutcome{false, c}; };
  const auto is_member = [q](const TamePrime& t) { return t.q == q; };
  if (contains(T_, q) || std::any_of(S0_.begin(), S0_.end(), is_member) ||
      std::any_of(prior_.begin(), prior_.end(), is_member)) {
    throw Error("candidate " + std::to_string(q) + " collides with S0, T or earlier choices");
  }
  if (q % p_ != 1) throw Error("candidate " + std::to_string(q) + " is not 1 mod p");

  for (Integer t : T_) {
    if (!is_pth_power_residue(t, q, p_)) return fail(BaClause::kUnitKummerSplit);
  }
  for (std::size_t b = 0; b < S0_.size(); ++b) {
    if (b != slot_ && !is_pth_power_residue(S0_[b].q, q, p_)) return fail(BaClause::kOtherSlotsSplit);
  }
  for (const auto& earlier : prior_) {
    if (!is_pth_power_residue(q, earlier.q, p_) || !is_pth_power_residue(earlier.q, q, p_)) {
      return fail(BaClause::kPriorSplit);
    }
  }
  if (is_pth_power_residue(S0_[slot_].q, q, p_)) return fail(BaClause::kOwnSlotInert);

  const auto frob = frobenius_vector(q, S0_, T_);
  if (in_row_span(inertia_span_, frob.vec)) return fail(BaClause::kFrobeniusOffInertia);
  return {true, BaClause::kUnitKummerSplit};
}

bool condition_Ba(const TamePrime& q, std::size_t slot, const std::vector<TamePrime>& S0,
                  const PrimeSet& T, const std::vector<TamePrime>& prior) {
  return ConditionBa(slot, S0, T, prior).evaluate(q.q).satisfied;
}

}  // namespace mildcert
