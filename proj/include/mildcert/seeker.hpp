#ifndef MILDCERT_SEEKER_HPP
#define MILDCERT_SEEKER_HPP

#include <array>
#include <string>
#include <vector>

#include "mildcert/conditions.hpp"
#include "mildcert/modarith.hpp"
#include "mildcert/prime_set.hpp"

namespace mildcert {

/// Bounds for the prime searches. Searches are smallest-first.
struct SearchConfig {
  Integer max_prime = 100'000'000;
  std::size_t max_candidates_per_slot = 10'000'000;

  friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

/// Reads MILDCERT_MAX_PRIME / MILDCERT_MAX_CANDIDATES when set.
SearchConfig search_config_from_environment();

/// One accepted prime of the V-killing search.
struct DefectStep {
  Integer prime = 0;
  std::size_t candidates_scanned = 0;
  std::size_t defect_after = 0;
};

/// One filled slot of the linking-prime search.
struct SlotStep {
  std::size_t slot = 0;
  Integer prime = 0;
  std::size_t candidates_scanned = 0;
  std::array<std::size_t, kBaClauseCount> failures{};
};

struct SeekerTrace {
  std::size_t initial_defect = 0;
  std::vector<DefectStep> s0_steps;
  std::vector<SlotStep> slot_steps;
};

struct SeekerResult {
  Integer p = 3;
  PrimeSet marking;  ///< S u T: the marking set the auxiliary construction runs against
  PrimeSet T0;       ///< always empty over Q
  std::vector<Integer> S0;
  std::vector<Integer> Q;
  SeekerTrace trace;

  /// S0 followed by Q.
  std::vector<Integer> places() const;
};

/// Defect of a candidate S0 against marking T:
///   3 dim V_{S0}^T + #{q in S0 : dim V_{S0\{q}}^T > dim V_{S0}^T}
///   + max(0, 2 - h^1(X\S0, T)).
/// Killing a dimension of V costs at most one new coloop, so the weight 3
/// keeps every such step a strict descent.
/// Zero exactly when V_{S0}^T = 0, the drop-one condition holds and the
/// elementary quotient has at least two independent characters.
std::size_t s0_defect(const PrimeSet& S0, const PrimeSet& T, Integer p);

/// Greedy V-killing search: scan tame primes outside T and `avoid`, keep a
/// prime iff it strictly lowers the defect, stop at defect zero.
std::vector<Integer> find_S0_killing_V(const PrimeSet& T, const AvoidanceSet& avoid, Integer p,
                                       const SearchConfig& cfg, SeekerTrace* trace = nullptr);

/// For each slot a, the smallest admissible prime satisfying the linking
/// condition against S0 and the earlier choices.
std::vector<Integer> find_linking_primes(const std::vector<Integer>& S0, const PrimeSet& T,
                                         const AvoidanceSet& avoid, Integer p,
                                         const SearchConfig& cfg, SeekerTrace* trace = nullptr);

/// Runs both searches with marking set S u T.
SeekerResult seek_certified_set(const PrimeSet& S, const PrimeSet& T, const AvoidanceSet& avoid,
                                Integer p, const SearchConfig& cfg);

std::vector<std::string> describe_trace(const SeekerTrace& trace);

}  // namespace mildcert

#endif  // MILDCERT_SEEKER_HPP
