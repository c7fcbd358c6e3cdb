#include "mildcert/modarith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <regex>
#include <sstream>

#include "mildcert/error.hpp"

namespace mildcert {

namespace {
__extension__ typedef __int128 Wide;
}  // namespace

Integer mod_mul(Integer a, Integer b, Integer m) {
  return static_cast<Integer>(static_cast<Wide>(a) * b % m);
}

Integer mod_pow(Integer base, Integer exp, Integer m) {
  if (m == 1) return 0;
  Integer result = 1;
  base = reduce_mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, base, m);
    base = mod_mul(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(Integer n) {
  if (n < 2) return false;
  static constexpr Integer kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (Integer sp : kSmall) {
    if (n == sp) return true;
    if (n % sp == 0) return false;
  }
  if (n < 41 * 41) return true;
  Integer d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases 2..37 are a deterministic witness set far beyond 2^64.
  for (Integer a : kSmall) {
    Integer x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_odd_prime(Integer p) {
  if (p == 2) throw Error("p=2 unsupported: no theory of mild pro-2 groups is available");
  if (!is_prime(p)) throw Error("p must be an odd prime, got " + std::to_string(p));
}

bool is_tame_split_prime(Integer q, Integer p) {
  require_odd_prime(p);
  return is_prime(q) && q % p == 1;
}

namespace {

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  for (Integer f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_primitive_root_given(Integer g, Integer q, const std::vector<Integer>& factors) {
  return std::all_of(factors.begin(), factors.end(),
                     [&](Integer f) { return mod_pow(g, (q - 1) / f, q) != 1; });
}

}  // namespace

bool is_primitive_root(Integer g, Integer q) {
  if (!is_prime(q)) throw Error("primitive roots are only tracked for primes");
  if (q == 2) return reduce_mod(g, 2) == 1;
  if (reduce_mod(g, q) == 0) return false;
  return is_primitive_root_given(g, q, prime_factors(q - 1));
}

Integer nth_primitive_root(Integer q, std::size_t index) {
  if (!is_prime(q)) throw Error(std::to_string(q) + " is not prime");
  if (q == 2) {
    if (index != 0) throw Error("2 has a single primitive root");
    return 1;
  }
  const auto factors = prime_factors(q - 1);
  std::size_t seen = 0;
  for (Integer g = 2; g < q; ++g) {
    if (!is_primitive_root_given(g, q, factors)) continue;
    if (seen++ == index) return g;
  }
  throw Error("not enough primitive roots modulo " + std::to_string(q));
}

Integer primitive_root(Integer q) { return nth_primitive_root(q, 0); }

TamePrime make_tame_prime(Integer q, Integer p, Integer g) {
  if (!is_tame_split_prime(q, p)) {
    throw Error(std::to_string(q) + " is not a prime congruent to 1 mod " + std::to_string(p));
  }
  if (g == 0) g = primitive_root(q);
  if (!is_primitive_root(g, q)) {
    throw Error(std::to_string(g) + " is not a primitive root mod " + std::to_string(q));
  }
  return {q, p, reduce_mod(g, q)};
}

Integer RootChoice::root_for(Integer q) const {
  if (auto it = overrides.find(q); it != overrides.end()) return it->second;
  return nth_primitive_root(q, rank);
}

bool is_pth_power_residue(Integer a, Integer q, Integer p) {
  const Integer r = reduce_mod(a, q);
  if (r == 0) throw Error("symbol undefined at ramified argument");
  return mod_pow(r, (q - 1) / p, q) == 1;
}

FpScalar linking_symbol(Integer a, const TamePrime& t) {
  const Integer r = reduce_mod(a, t.q);
  if (r == 0) throw Error("symbol undefined at ramified argument");
  const Integer exponent = (t.q - 1) / t.p;
  const Integer target = mod_pow(r, exponent, t.q);
  const Integer zeta = mod_pow(t.g, exponent, t.q);
  Integer power = 1;
  for (Integer e = 0; e < t.p; ++e) {
    if (power == target) return FpScalar(e, t.p);
    power = mod_mul(power, zeta, t.q);
  }
  throw Error("residue symbol outside mu_p; is g a primitive root?");
}

FpScalar wild_unit_exponent(Integer a, Integer p) {
  require_odd_prime(p);
  const Integer p2 = p * p;
  const Integer r = reduce_mod(a, p2);
  if (r % p == 0) throw Error("not a local unit");
  const Integer x = mod_pow(r, p - 1, p2);
  return FpScalar((x - 1) / p, p);
}

bool AvoidanceSet::excludes(Integer q, Integer p) const {
  if (exclude_p_divisors && q % p == 0) return true;
  if (std::find(explicit_primes.begin(), explicit_primes.end(), q) != explicit_primes.end()) {
    return true;
  }
  return std::any_of(congruences.begin(), congruences.end(), [q](const Congruence& c) {
    return reduce_mod(q, c.modulus) == reduce_mod(c.residue, c.modulus);
  });
}

void AvoidanceSet::validate(Integer p) const {
  for (const auto& c : congruences) {
    if (c.modulus < 1) throw Error("congruence modulus must be positive");
  }
  Integer lcm = p;
  for (const auto& c : congruences) {
    lcm = std::lcm(lcm, c.modulus);
    if (lcm > 10'000'000) return;  // too wide to enumerate; accept
  }
  for (Integer x = 1; x < lcm + 1; x += p) {
    if (std::gcd(x, lcm) != 1) continue;
    const bool hit = std::any_of(congruences.begin(), congruences.end(), [x](const Congruence& c) {
      return reduce_mod(x, c.modulus) == reduce_mod(c.residue, c.modulus);
    });
    if (!hit) return;
  }
  throw Error("avoidance set excludes every prime congruent to 1 mod " + std::to_string(p));
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Integer parse_integer(const std::string& s) {
  std::size_t used = 0;
  Integer v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw Error("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw Error("not an integer: '" + s + "'");
  return v;
}

}  // namespace

AvoidanceSet AvoidanceSet::parse(const std::string& text) {
  static const std::regex congruence_re(R"(^\s*(-?\d+)\s+mod\s+(\d+)\s*$)");
  AvoidanceSet out;
  std::stringstream clauses(text);
  std::string clause;
  while (std::getline(clauses, clause, ';')) {
    clause = trim(clause);
    if (clause.empty() || clause == "none") continue;
    if (clause == "divisors-of-p") {
      out.exclude_p_divisors = true;
      continue;
    }
    std::smatch match;
    if (std::regex_match(clause, match, congruence_re)) {
      const Integer modulus = parse_integer(match[2].str());
      if (modulus < 1) throw Error("congruence modulus must be positive");
      out.congruences.push_back({reduce_mod(parse_integer(match[1].str()), modulus), modulus});
      continue;
    }
    std::stringstream items(clause);
    std::string item;
    while (std::getline(items, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      const Integer q = parse_integer(item);
      if (!is_prime(q)) throw Error("avoidance entry " + item + " is not prime");
      out.explicit_primes.push_back(q);
    }
  }
  std::sort(out.explicit_primes.begin(), out.explicit_primes.end());
  out.explicit_primes.erase(std::unique(out.explicit_primes.begin(), out.explicit_primes.end()),
                            out.explicit_primes.end());
  return out;
}

std::string AvoidanceSet::describe() const {
  std::vector<std::string> parts;
  if (exclude_p_divisors) parts.emplace_back("divisors-of-p");
  if (!explicit_primes.empty()) {
    std::string list;
    for (Integer q : explicit_primes) list += (list.empty() ? "" : ",") + std::to_string(q);
    parts.push_back(list);
  }
  for (const auto& c : congruences) {
    parts.push_back(std::to_string(c.residue) + " mod " + std::to_string(c.modulus));
  }
  if (parts.empty()) return "none";
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : ";") + s;
  return out;
}

namespace {

constexpr std::size_t kSegment = 1 << 16;
constexpr Integer kSieveCeiling = Integer{1} << 44;

}  // namespace

TamePrimeStream::TamePrimeStream(Integer p, AvoidanceSet avoid, Integer start)
    : p_(p), avoid_(std::move(avoid)), step_(0), k0_(0) {
  require_odd_prime(p);
  if (start < 2) throw Error("prime stream must start at 2 or above");
  // Odd q = 1 mod p means q = 1 mod 2p.
  step_ = 2 * p;
  k0_ = std::max<Integer>((start - 1 + step_ - 1) / step_, 1);
  fill_segment();
}

void TamePrimeStream::extend_base_primes(Integer bound) {
  if (bound <= base_bound_) return;
  std::vector<char> sieve(static_cast<std::size_t>(bound) + 1, 1);
  base_primes_.clear();
  for (Integer i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    if (i > 2) base_primes_.push_back(i);
    for (Integer j = i * i; j <= bound; j += i) sieve[static_cast<std::size_t>(j)] = 0;
  }
  base_bound_ = bound;
}

void TamePrimeStream::fill_segment() {
  pos_ = 0;
  composite_.assign(kSegment, 0);
  const Integer hi = 1 + (k0_ + static_cast<Integer>(kSegment) - 1) * step_;
  if (hi >= kSieveCeiling) {
    for (std::size_t i = 0; i < kSegment; ++i) {
      composite_[i] = !is_prime(1 + (k0_ + static_cast<Integer>(i)) * step_);
    }
    return;
  }
  Integer root = static_cast<Integer>(std::sqrt(static_cast<double>(hi))) + 1;
  if (root > base_bound_) extend_base_primes(std::max<Integer>(root, 2 * base_bound_));
  for (Integer r : base_primes_) {
    if (r * r > hi) break;
    if (r == p_) continue;
    // 1 + k step = 0 mod r  <=>  k = -step^{-1} mod r
    const Integer k_root = reduce_mod(-inverse_mod(step_ % r, r), r);
    Integer k = k0_ + reduce_mod(k_root - k0_, r);
    if (1 + k * step_ == r) k += r;
    for (; k < k0_ + static_cast<Integer>(kSegment); k += r) composite_[static_cast<std::size_t>(k - k0_)] = 1;
  }
}

std::optional<Integer> TamePrimeStream::next(Integer limit) {
  while (true) {
    if (pos_ == kSegment) {
      k0_ += static_cast<Integer>(kSegment);
      fill_segment();
    }
    const Integer q = 1 + (k0_ + static_cast<Integer>(pos_)) * step_;
    if (q > limit) return std::nullopt;
    const bool prime = !composite_[pos_];
    ++pos_;
    if (prime && !avoid_.excludes(q, p_)) return q;
  }
}

std::vector<Integer> tame_primes(Integer p, const AvoidanceSet& avoid, Integer start,
                                 std::size_t count) {
  TamePrimeStream stream(p, avoid, start);
  std::vector<Integer> out;
  while (out.size() < count) {
    auto q = stream.next(std::numeric_limits<Integer>::max() / 4);
    if (!q) break;
    out.push_back(*q);
  }
  return out;
}

}  // namespace mildcert
