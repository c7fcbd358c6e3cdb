#ifndef MILDCERT_ERROR_HPP
#define MILDCERT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mildcert {

// Domain error: the inputs are well-formed but violate a mathematical
// precondition (p = 2, overlapping prime sets, ramified argument, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded prime search ran out of room. `trace` carries the partial log.
class SearchExhausted : public Error {
 public:
  SearchExhausted(const std::string& what, std::vector<std::string> trace)
      : Error(what), trace_(std::move(trace)) {}

  const std::vector<std::string>& trace() const noexcept { return trace_; }

 private:
  std::vector<std::string> trace_;
};

}  // namespace mildcert

#endif  // MILDCERT_ERROR_HPP
