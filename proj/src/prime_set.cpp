#include "mildcert/prime_set.hpp"

#include <sstream>

namespace mildcert {

PrimeSet parse_prime_set(const std::string& text) {
  std::vector<Integer> primes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    std::size_t used = 0;
    Integer q = 0;
    try {
      q = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw Error("not a prime: '" + item + "'");
    }
    if (used != item.size()) throw Error("not a prime: '" + item + "'");
    primes.push_back(q);
  }
  return make_prime_set(std::move(primes));
}

std::string format_prime_set(const PrimeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace mildcert
