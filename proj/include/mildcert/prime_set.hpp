#ifndef MILDCERT_PRIME_SET_HPP
#define MILDCERT_PRIME_SET_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "mildcert/error.hpp"
#include "mildcert/fp_linalg.hpp"
#include "mildcert/modarith.hpp"

namespace mildcert {

/// A finite set of rational primes, kept sorted and duplicate-free.
using PrimeSet = std::vector<Integer>;

inline PrimeSet make_prime_set(std::vector<Integer> primes) {
  for (Integer q : primes) {
    if (!is_prime(q)) throw Error(std::to_string(q) + " is not prime");
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

inline bool contains(const PrimeSet& s, Integer q) {
  return std::binary_search(s.begin(), s.end(), q);
}

inline PrimeSet set_union(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline PrimeSet set_difference(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool disjoint(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.empty();
}

inline void require_disjoint(const PrimeSet& s, const PrimeSet& t) {
  if (!disjoint(s, t)) throw Error("S and T must be disjoint");
}

/// Parses "7,13, 19" (empty string gives the empty set).
PrimeSet parse_prime_set(const std::string& text);

std::string format_prime_set(const PrimeSet& s);

}  // namespace mildcert

#endif  // MILDCERT_PRIME_SET_HPP
