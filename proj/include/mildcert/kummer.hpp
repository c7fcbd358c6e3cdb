#ifndef MILDCERT_KUMMER_HPP
#define MILDCERT_KUMMER_HPP

#include <vector>

#include "mildcert/fp_linalg.hpp"
#include "mildcert/prime_set.hpp"

namespace mildcert {

// Over Q with p odd, -1 is a p-th power and the class number is 1, so
// E_{Q,T}/p is freely generated by the primes of T. Every element of the
// Kummer group V_S^T is an exponent vector over those generators.

/// The s-element attached to a prime q outside T; over Q it is q itself.
struct SElement {
  Integer q = 0;
  Integer value = 0;
};

SElement s_element(Integer q, const PrimeSet& T);

/// Local p-th power conditions imposed by the places of S on E_{Q,T}/p.
/// One column per generator of T, one row per place of S whose condition is
/// not vacuous (tame places and the place p itself).
struct LocalConditions {
  FpMatrix matrix;
  std::vector<Integer> row_places;
};

LocalConditions local_conditions(const PrimeSet& S, const PrimeSet& T, Integer p);

inline FpMatrix local_condition_matrix(const PrimeSet& S, const PrimeSet& T, Integer p) {
  return local_conditions(S, T, p).matrix;
}

struct KummerGroup {
  PrimeSet S;
  PrimeSet T;
  Integer p = 3;
  std::size_t dim = 0;
  /// Exponent vectors over the generators of T (in the order of T).
  std::vector<FpVector> basis;
};

KummerGroup kummer_group(const PrimeSet& S, const PrimeSet& T, Integer p);

inline std::size_t kummer_dimension(const PrimeSet& S, const PrimeSet& T, Integer p) {
  return kummer_group(S, T, p).dim;
}

/// dim of the Shafarevich-Tate group in degree 2; equal to dim V_S^T by duality.
std::size_t sha2_dimension(const PrimeSet& S, const PrimeSet& T, Integer p);

/// V_{S0 \ {q}}^T = 0 for every q in S0. Requires S0 tame and disjoint from T.
bool drop_one_holds(const PrimeSet& S0, const PrimeSet& T, Integer p);

/// Whether q in S ramifies in the maximal elementary p-extension unramified
/// outside S and split at T, decided by comparing h^1 for S and S \ {q}.
bool ramifies_in_elementary(Integer q, const PrimeSet& S, const PrimeSet& T, Integer p);

}  // namespace mildcert

#endif  // MILDCERT_KUMMER_HPP
