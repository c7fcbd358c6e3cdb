#ifndef MILDCERT_COHOMOLOGY_HPP
#define MILDCERT_COHOMOLOGY_HPP

#include <array>
#include <cstddef>

#include "mildcert/prime_set.hpp"

namespace mildcert {

/// 1 iff the completion at q contains the p-th roots of unity (q = 1 mod p).
/// The place p itself has delta 0 for odd p.
int local_delta(Integer q, Integer p);

/// Local cohomology with support in the closed point of Spec Z_q.
struct LocalCohomologyDims {
  Integer q = 0;
  Integer p = 3;
  bool marked = false;
  std::size_t h2_x = 0;
  std::size_t h3_x = 0;
};

LocalCohomologyDims local_dims(Integer q, Integer p, bool marked);

/// Dimensions h^0..h^3 of the etale cohomology of the marked curve
/// (Spec Z \ S, T) with F_p coefficients.
struct CohomologyProfile {
  PrimeSet S;
  PrimeSet T;
  Integer p = 3;
  std::array<std::size_t, 4> h{};
  long chi = 0;
  int theta = 0;
  std::size_t vdim = 0;

  friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

CohomologyProfile global_profile(const PrimeSet& S, const PrimeSet& T, Integer p);

/// h^1 counted as order-p ray class characters of conductor dividing prod S
/// that are trivial on every t in T. Tame S only.
std::size_t h1_via_characters(const PrimeSet& S, const PrimeSet& T, Integer p);

/// Alternating-dimension check along the excision sequence comparing
/// (X \ S, T) with (X \ S, {}).
bool excision_identity_holds(const PrimeSet& S, const PrimeSet& T, Integer p);

/// Drops the primes of S that neither are p nor are 1 mod p.
PrimeSet s_min(const PrimeSet& S, Integer p);

}  // namespace mildcert

#endif  // MILDCERT_COHOMOLOGY_HPP
