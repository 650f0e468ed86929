#pragma once

#include <cstdint>
#include <random>

#include "qchrom/linalg.hpp"
#include "qchrom/pinching.hpp"

// Seeded random matrices for property tests and demonstrations.
namespace qchrom::random {

using Rng = std::mt19937_64;

CMatrix gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Unitary from the QR factorization of a complex Gaussian matrix, with the
/// phases of R's diagonal folded back in.
CMatrix unitary(Eigen::Index m, Rng& rng);

CMatrix hermitian(Eigen::Index m, Rng& rng);

/// Columns of a random unitary split into c nonempty groups of random sizes;
/// Q_k projects onto group k. Requires 1 <= c <= m.
pinching::ProjectorFamily projector_family(Eigen::Index m, std::size_t c,
                                           std::uint64_t seed);

}  // namespace qchrom::random
