#ifndef MILDCERT_CERTIFICATE_IO_HPP
#define MILDCERT_CERTIFICATE_IO_HPP

#include <string>
#include <vector>

#include "mildcert/certificate.hpp"

namespace mildcert {

/// Canonical text: JSON with sorted keys, two-space indent, trailing newline.
std::string serialize(const Certificate& cert);

/// Inverse of serialize; throws Error on malformed input.
Certificate parse_certificate(const std::string& text);

/// Dotted names of the serialized fields in which a and b differ.
std::vector<std::string> certificate_field_diff(const Certificate& a, const Certificate& b);

/// Human summary.
std::string summarize(const Certificate& cert);

}  // namespace mildcert

#endif  // MILDCERT_CERTIFICATE_IO_HPP
