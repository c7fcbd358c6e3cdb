#include "mildcert/linking_table.hpp"

#include <set>

#include "mildcert/error.hpp"

namespace mildcert {

LinkingTable::LinkingTable(Integer p, std::vector<TamePrime> places, PrimeSet marking)
    : p_(p), places_(std::move(places)), marking_(std::move(marking)) {
  require_odd_prime(p_);
  std::set<Integer> seen;
  for (const auto& place : places_) {
    if (place.p != p_) throw Error("linking table: modulus mismatch");
    if (!seen.insert(place.q).second) throw Error("linking table: repeated prime " + std::to_string(place.q));
    if (contains(marking_, place.q)) throw Error("linking table: place " + std::to_string(place.q) + " is marked");
  }
  for (const auto& place : places_) {
    for (const auto& other : places_) {
      if (other.q != place.q) symbols_[{other.q, place.q}] = linking_symbol(other.q, place).value;
    }
    for (Integer t : marking_) symbols_[{t, place.q}] = linking_symbol(t, place).value;
  }
}

LinkingTable LinkingTable::from_records(Integer p, std::vector<TamePrime> places, PrimeSet marking,
                                       std::map<std::pair<Integer, Integer>, Integer> symbols) {
  LinkingTable out;
  out.p_ = p;
  out.places_ = std::move(places);
  out.marking_ = std::move(marking);
  out.symbols_ = std::move(symbols);
  return out;
}

Integer LinkingTable::symbol_at(Integer a, std::size_t j) const { return symbol(a, places_.at(j).q); }

Integer LinkingTable::symbol(Integer a, Integer q) const {
  const auto it = symbols_.find({a, q});
  if (it == symbols_.end()) {
    throw Error("linking table has no entry l(" + std::to_string(a) + ", " + std::to_string(q) + ")");
  }
  return it->second;
}

std::map<Integer, Integer> LinkingTable::roots() const {
  std::map<Integer, Integer> out;
  for (const auto& place : places_) out[place.q] = place.g;
  return out;
}

FpMatrix LinkingTable::splitting_matrix() const {
  FpMatrix m(static_cast<Eigen::Index>(marking_.size()), static_cast<Eigen::Index>(places_.size()), p_);
  for (std::size_t i = 0; i < marking_.size(); ++i) {
    for (std::size_t j = 0; j < places_.size(); ++j) {
      m.set(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), symbol_at(marking_[i], j));
    }
  }
  return m;
}

Integer LinkingTable::frobenius_value(const FpVector& c, std::size_t j) const {
  if (static_cast<std::size_t>(c.size()) != places_.size()) throw Error("character has wrong length");
  Integer total = 0;
  for (std::size_t u = 0; u < places_.size(); ++u) {
    if (u == j) continue;
    total += c(static_cast<Eigen::Index>(u)) * symbol(places_[j].q, places_[u].q);
  }
  return reduce_mod(total, p_);
}

Integer LinkingTable::frobenius_value_at_prime(const FpVector& c, Integer x) const {
  if (static_cast<std::size_t>(c.size()) != places_.size()) throw Error("character has wrong length");
  Integer total = 0;
  for (std::size_t u = 0; u < places_.size(); ++u) {
    total += c(static_cast<Eigen::Index>(u)) * linking_symbol(x, places_[u]).value;
  }
  return reduce_mod(total, p_);
}

LinkingTable build_linking_table(const std::vector<Integer>& places, const PrimeSet& marking,
                                 Integer p, const RootChoice& roots) {
  std::vector<TamePrime> tame;
  for (Integer q : places) {
    if (!is_tame_split_prime(q, p)) throw Error("linking table needs tame places; " + std::to_string(q) + " is not");
    tame.push_back(make_tame_prime(q, p, roots.root_for(q)));
  }
  return LinkingTable(p, std::move(tame), marking);
}

LinkingTable build_linking_table(const std::vector<Integer>& S0, const std::vector<Integer>& Q,
                                 const PrimeSet& marking, Integer p, const RootChoice& roots) {
  std::vector<Integer> places = S0;
  places.insert(places.end(), Q.begin(), Q.end());
  return build_linking_table(places, marking, p, roots);
}

}  // namespace mildcert
