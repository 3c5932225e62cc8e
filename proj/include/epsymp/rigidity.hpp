#pragma once

namespace epsymp {

struct CubicRoot {
    double bisection;    // root of z^3 + 27/4 z - 27/4 found on [0, 1]
    double closed_form;  // (3/2)((1 + sqrt2)^(1/3) + (1 - sqrt2)^(1/3))
    double residual;     // |z^3 + 6.75 z - 6.75| at the bisection root
};

/// Single real root z0 of z^3 + 27/4 z = 27/4 (about 0.894).
CubicRoot cubic_z0();

/// Largest eps for which the rigidity constants are defined: 1 - z0^2.
double rigidity_threshold();

/// Root of c^3 - c^2 + rho^-3 (1 - rho) = 0 in (2/3, 1].
///
/// Defined for z0 < rho <= 1; throws std::domain_error otherwise.
double c_rho(double rho);

/// Explicit K(eps) with K(0) = 0, nondecreasing in eps.
///
/// Combines lambda_max = min(1/c_rho, rho^-2 when eps < 1 - 2^(-1/4)) and
/// mu_min = min(sqrt(1 - 2 lambda_max^2 (1/rho - 1)), sqrt(2 rho - 1)) into
/// sqrt(n [max((lambda_max^2 - mu_min^2)^2, (1 - rho^2)^2) + 1 - mu_min^4]),
/// with rho = sqrt(1 - eps). Requires 0 <= eps < rigidity_threshold().
double rigidity_bound(double eps, int n);

}  // namespace epsymp
