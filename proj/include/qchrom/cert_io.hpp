#pragma once

#include <string>
#include <string_view>

#include "qchrom/bounds.hpp"
#include "qchrom/quantum_cert.hpp"

namespace qchrom::cert {

/// Parses the certificate JSON document
///   { "n": int, "c": int, "d": int,
///     "projectors": [[M_{0,0}, ..., M_{0,c-1}], ..., [M_{n-1,0}, ...]] }
/// where each M is a row-major d x d array of [re, im] pairs. Only shapes are
/// checked. Errors are ParseError values carrying a JSON path such as
/// "$.projectors[2][0][1]".
QuantumColoringCert read_certificate(std::string_view json);

/// Serializes with round-trip double precision.
std::string write_certificate(const QuantumColoringCert& cert);

/// A square matrix in the same complex encoding: [[[re, im], ...], ...].
CMatrix read_complex_matrix(std::string_view json);
std::string write_complex_matrix(const CMatrix& m);

/// read_complex_matrix followed by WeightMatrix validation.
bounds::WeightMatrix read_weight_matrix(std::string_view json);

}  // namespace qchrom::cert
