#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ahs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search exceeds its configured cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::string cap_name, double cap)
      : Error(what), cap_name_(std::move(cap_name)), cap_(cap) {}
  const std::string& cap_name() const { return cap_name_; }
  double cap() const { return cap_; }

 private:
  std::string cap_name_;
  double cap_;
};

// Malformed polynomial, point, number or config text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A comparison stayed inconclusive at the maximum precision, or a sequence
// failed to converge.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ahs
