#ifndef MILDCERT_CONDITIONS_HPP
#define MILDCERT_CONDITIONS_HPP

#include <array>
#include <string_view>
#include <vector>

#include "mildcert/fp_linalg.hpp"
#include "mildcert/modarith.hpp"
#include "mildcert/prime_set.hpp"

namespace mildcert {

// Splitting conditions over Q. Every q used here is 1 mod p, so it splits
// completely in Q(mu_p) and each Kummer condition over Q(mu_p) becomes a
// residue-symbol statement modulo q.

/// q splits completely in Q(mu_p, T^{1/p}): every t in T is a p-th power mod q.
bool splits_in_unit_kummer_field(const TamePrime& q, const PrimeSet& T);

/// Generator of the characters ramified only at q_b and split at T. With the
/// normalization c = 1 it is a -> dlog_g(a) mod p at q_b.
struct EtaCharacter {
  TamePrime conductor;
  PrimeSet T;
};

EtaCharacter eta_character(const TamePrime& q_b, const PrimeSet& T, Integer p);

FpScalar eta_value(const EtaCharacter& eta, Integer a);

/// Image of Frob_q against the characters dlog_{p_i}: component i is
/// the linking symbol of q at p_i.
struct FrobeniusVector {
  Integer q = 0;
  std::vector<TamePrime> S0;
  PrimeSet T;
  FpVector vec;
};

FrobeniusVector frobenius_vector(Integer q, const std::vector<TamePrime>& S0, const PrimeSet& T);

/// The five clauses of the linking-prime condition for slot a, in the order
/// they are evaluated.
enum class BaClause : std::size_t {
  kUnitKummerSplit = 0,  // (1) every t in T is a p-th power mod q
  kOtherSlotsSplit,      // (2) p_b is a p-th power mod q for b != a
  kPriorSplit,           // (5) q splits at each earlier q_b, and q_b is a p-th power mod q
  kOwnSlotInert,         // (3) p_a is not a p-th power mod q
  kFrobeniusOffInertia,  // (4) Frob_q outside the inertia at p_a
};

inline constexpr std::size_t kBaClauseCount = 5;

std::string_view clause_name(BaClause c);

struct BaOutcome {
  bool satisfied = false;
  BaClause first_failure = BaClause::kUnitKummerSplit;
};

/// Precomputed state for testing many candidates against one slot.
class ConditionBa {
 public:
  ConditionBa(std::size_t slot, std::vector<TamePrime> S0, PrimeSet T, std::vector<TamePrime> prior);

  /// q must be a prime 1 mod p outside S0, T and prior.
  BaOutcome evaluate(Integer q) const;

  /// The subspace {e_a} + (Frobenius images of T) that clause (4) must avoid.
  const FpMatrix& inertia_span() const noexcept { return inertia_span_; }

 private:
  std::size_t slot_;
  std::vector<TamePrime> S0_;
  PrimeSet T_;
  std::vector<TamePrime> prior_;
  Integer p_;
  FpMatrix inertia_span_;
};

/// Slots are 0-based: slot 0 is the first prime of S0.
bool condition_Ba(const TamePrime& q, std::size_t slot, const std::vector<TamePrime>& S0,
                  const PrimeSet& T, const std::vector<TamePrime>& prior);

}  // namespace mildcert

#endif  // MILDCERT_CONDITIONS_HPP
