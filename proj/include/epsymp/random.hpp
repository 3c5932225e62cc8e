#pragma once

#include <cstdint>
#include <random>

#include "epsymp/symplectic.hpp"

namespace epsymp {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

Matrix random_gaussian(int rows, int cols, Rng& rng);

/// Haar-ish orthogonal matrix from the QR factor of a Gaussian matrix.
Matrix random_orthogonal(int m, Rng& rng);

/// Product of symplectic shears (x, y) -> (x, y + B x), (x, y) -> (x + B y, y)
/// with symmetric B of entry scale `shear`, interleaved with unitary mixing.
Matrix random_symplectic(int n, Rng& rng, double shear = 0.3);

/// Reflection y_j -> -y_j on every plane; pulls omega0 back to -omega0.
Matrix anti_symplectic_reflection(int n);

/// Well-conditioned ellipsoid matrix Q1 diag(s) Q2 with s in [s_min, s_max].
Matrix random_ellipsoid(int n, Rng& rng, double s_min = 0.5, double s_max = 2.0);

/// Phi = S (I + t N) with defect(Phi) = eps to within 1e-9.
///
/// S is random symplectic, N a random Gaussian direction, and t is found by
/// bisection. Requires 0 <= eps < 1/sqrt(2).
Matrix random_eps_symplectic(int n, double eps, std::uint64_t seed);

}  // namespace epsymp
