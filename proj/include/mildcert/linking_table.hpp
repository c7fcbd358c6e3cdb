#ifndef MILDCERT_LINKING_TABLE_HPP
#define MILDCERT_LINKING_TABLE_HPP

#include <map>
#include <utility>
#include <vector>

#include "mildcert/modarith.hpp"
#include "mildcert/prime_set.hpp"

namespace mildcert {

/// Linking symbols l(a, q) for every ordered pair of distinct places and for
/// every marked prime a against every place q, under recorded primitive roots.
///
/// A character ramified only at the places is a coefficient vector c over the
/// places: c(x) = sum_j c_j l(x, q_j). Its value on the inertia generator at
/// q_j is c_j; its value on the Frobenius lift at q_j attached to the
/// uniformizer q_j is sum_{u != j} c_u l(q_j, q_u).
class LinkingTable {
 public:
  LinkingTable() = default;
  LinkingTable(Integer p, std::vector<TamePrime> places, PrimeSet marking);

  /// Table with the given symbols, not recomputed. Used when reading a stored
  /// certificate back.
  static LinkingTable from_records(Integer p, std::vector<TamePrime> places, PrimeSet marking,
                                   std::map<std::pair<Integer, Integer>, Integer> symbols);

  Integer p() const noexcept { return p_; }
  const std::vector<TamePrime>& places() const noexcept { return places_; }
  const PrimeSet& marking() const noexcept { return marking_; }
  std::size_t size() const noexcept { return places_.size(); }

  /// l(a, places[j]).
  Integer symbol_at(Integer a, std::size_t j) const;
  /// l(a, q) for a place q; throws if the pair was not tabulated.
  Integer symbol(Integer a, Integer q) const;

  const std::map<std::pair<Integer, Integer>, Integer>& symbols() const noexcept { return symbols_; }
  std::map<Integer, Integer> roots() const;

  /// Rows indexed by marked primes, columns by places: l(t, q_j). Characters
  /// split at the marking are exactly the kernel.
  FpMatrix splitting_matrix() const;

  /// Value of the character c on the Frobenius lift at places[j].
  Integer frobenius_value(const FpVector& c, std::size_t j) const;
  /// Value of c on Frob_x for a prime x outside the places.
  Integer frobenius_value_at_prime(const FpVector& c, Integer x) const;

  friend bool operator==(const LinkingTable&, const LinkingTable&) = default;

 private:
  Integer p_ = 3;
  std::vector<TamePrime> places_;
  PrimeSet marking_;
  std::map<std::pair<Integer, Integer>, Integer> symbols_;  // (a, q) -> l(a, q)
};

/// Table over the places `places` (in the given order) against `marking`.
LinkingTable build_linking_table(const std::vector<Integer>& places, const PrimeSet& marking,
                                 Integer p, const RootChoice& roots = {});

/// Certificate layout: places S0 followed by Q.
LinkingTable build_linking_table(const std::vector<Integer>& S0, const std::vector<Integer>& Q,
                                 const PrimeSet& marking, Integer p, const RootChoice& roots = {});

}  // namespace mildcert

#endif  // MILDCERT_LINKING_TABLE_HPP
