#ifndef MILDCERT_MODARITH_HPP
#define MILDCERT_MODARITH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mildcert/fp_linalg.hpp"

namespace mildcert {

Integer mod_mul(Integer a, Integer b, Integer m);
Integer mod_pow(Integer base, Integer exp, Integer m);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(Integer n);

/// Throws unless p is an odd prime. p = 2 gets its own message.
void require_odd_prime(Integer p);

/// q is prime and q = 1 mod p. Requires p odd prime.
bool is_tame_split_prime(Integer q, Integer p);

/// Smallest positive primitive root modulo the prime q (1 for q = 2).
Integer primitive_root(Integer q);

/// The primitive roots of q in increasing order; index 0 is the smallest.
Integer nth_primitive_root(Integer q, std::size_t index);

bool is_primitive_root(Integer g, Integer q);

/// A prime q = 1 mod p with a fixed primitive root g. The root normalizes the
/// identification of (Z/q)^x / p-th powers with F_p.
struct TamePrime {
  Integer q = 0;
  Integer p = 0;
  Integer g = 0;

  friend bool operator==(const TamePrime&, const TamePrime&) = default;
};

/// Validates q tame for p; g = 0 selects the smallest primitive root.
TamePrime make_tame_prime(Integer q, Integer p, Integer g = 0);

/// Which primitive root to use at each modulus. Explicit overrides win;
/// otherwise the `rank`-th smallest root is taken (0 = smallest).
struct RootChoice {
  std::size_t rank = 0;
  std::map<Integer, Integer> overrides;

  Integer root_for(Integer q) const;
  static RootChoice smallest() { return {}; }
  static RootChoice second_smallest() { return {1, {}}; }
};

/// a is a p-th power residue modulo the prime q (gcd(a, q) = 1).
bool is_pth_power_residue(Integer a, Integer q, Integer p);

/// Tame power-residue character: the e in [0, p) with
/// a^((q-1)/p) = g^(e (q-1)/p) mod q. Zero iff a is a p-th power mod q.
FpScalar linking_symbol(Integer a, const TamePrime& t);

/// The F_p-linear functional u -> (u^(p-1) - 1)/p mod p on p-adic units.
/// Zero iff a is a p-th power in Q_p.
FpScalar wild_unit_exponent(Integer a, Integer p);

/// Exclusions applied to the stream of tame primes.
struct AvoidanceSet {
  struct Congruence {
    Integer residue = 0;
    Integer modulus = 1;
    friend bool operator==(const Congruence&, const Congruence&) = default;
  };

  std::vector<Integer> explicit_primes;
  std::vector<Congruence> congruences;
  bool exclude_p_divisors = false;

  static AvoidanceSet divisors_of_p() { return {{}, {}, true}; }

  bool excludes(Integer q, Integer p) const;

  /// Throws if the exclusions swallow every residue class q = 1 mod p.
  void validate(Integer p) const;

  /// Parses "divisors-of-p", "none", a comma list of primes, or "r mod m".
  /// Several clauses may be joined with ';'.
  static AvoidanceSet parse(const std::string& text);

  std::string describe() const;

  friend bool operator==(const AvoidanceSet&, const AvoidanceSet&) = default;
};

/// Increasing enumeration of primes q >= start with q = 1 mod p that the
/// avoidance set admits.
class TamePrimeStream {
 public:
  TamePrimeStream(Integer p, AvoidanceSet avoid, Integer start = 2);

  /// Next admissible prime, or nullopt once `limit` would be passed.
  std::optional<Integer> next(Integer limit);

 private:
  void fill_segment();
  void extend_base_primes(Integer bound);

  Integer p_;
  AvoidanceSet avoid_;
  Integer step_;
  Integer k0_;  ///< segment covers q = 1 + k step for k in [k0_, k0_ + size)
  std::size_t pos_ = 0;
  std::vector<char> composite_;
  std::vector<Integer> base_primes_;
  Integer base_bound_ = 1;
};

/// Convenience: the first `count` primes of the stream.
std::vector<Integer> tame_primes(Integer p, const AvoidanceSet& avoid, Integer start,
                                 std::size_t count);

}  // namespace mildcert

#endif  // MILDCERT_MODARITH_HPP
