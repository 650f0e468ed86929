#pragma once

#include <stdexcept>
#include <string>

namespace qchrom {

/// Malformed external input (graph6, edge lists, JSON documents, CLI specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigensolver failure or another numerical breakdown.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs whose shapes do not fit together (order mismatch, wrong vertex
/// count, a family that is not a resolution of the identity).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that requires a verified object was handed one that fails
/// verification (an unverified certificate, an improper coloring, a family
/// that cannot be turned into a certificate).
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qchrom
