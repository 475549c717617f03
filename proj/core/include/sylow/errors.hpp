#pragma once

#include <stdexcept>
#include <string>

namespace sylow {

/// Malformed input: non-prime ell, p not dividing m, bad partition, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A group-spec or table-record string failed to parse.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// ell does not divide the order of the group it was asked about.
class NotADivisor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation has no data or theory for this input (e.g. degrees of an
/// exceptional group).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Table lookup found no matching row.
class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An enumeration would exceed its configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sylow
