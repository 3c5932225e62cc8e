#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epsymp/io.hpp"
#include "epsymp/random.hpp"

namespace epsymp {

/// Outcome of one seeded property check.
struct CheckResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst = 0.0;      // worst observed value of the checked quantity
    double tolerance = 0.0;  // what `worst` is compared against
    std::string detail;
    bool pass = true;
};

Json to_json(const CheckResult& r);

/// Random polynomial k-form with small rational coefficients and
/// coefficient degree <= max_degree.
PolyForm random_polyform(int m, int k, int max_degree, Rng& rng);

/// Random covector on R^m with roughly half its coefficients nonzero.
Covector random_covector(int m, int k, Rng& rng);

// exterior-algebra
CheckResult check_comass_sandwich(std::uint64_t seed, int covectors, int comass_trials);
CheckResult check_omega0_norms();
CheckResult check_exact_comass_extremes(std::uint64_t seed, int trials);
CheckResult check_interior_bounds(std::uint64_t seed, int trials);
CheckResult check_pullback_functoriality(std::uint64_t seed, int trials);
CheckResult check_composition_bound(std::uint64_t seed, int trials);

// polyform-homotopy
CheckResult check_homotopy_identity(std::uint64_t seed, int forms);
CheckResult check_homotopy_factorizations(std::uint64_t seed, int forms);
CheckResult check_homotopy_dilation(std::uint64_t seed, int forms);
CheckResult check_h_bound_constant(std::uint64_t seed, int forms, int points);
CheckResult check_h_bound_general(std::uint64_t seed, int forms, int points);

// symplectic-linear
CheckResult check_fixture_defects();
CheckResult check_spectrum_invariance(std::uint64_t seed, int pairs);
CheckResult check_spectrum_scaling(std::uint64_t seed, int trials);
CheckResult check_defect_decomposition(std::uint64_t seed, int trials);
CheckResult check_classification(std::uint64_t seed, int trials);
CheckResult check_certificates(std::uint64_t seed, int matrices, int ellipsoids);
CheckResult check_constants();
CheckResult check_defect_limits(std::uint64_t seed, int sequences);

// moser-symplectify
CheckResult check_plane_scaling(std::uint64_t seed, int trials);
CheckResult check_moser_random(std::uint64_t seed, int trials, double eps);
CheckResult check_moser_convergence(std::uint64_t seed, int trials);
CheckResult check_pointwise_agreement(std::uint64_t seed, int trials);

enum class SuiteScale { smoke, full };

/// Every property check above at the given scale, in a fixed order.
std::vector<CheckResult> run_suite(std::uint64_t seed, SuiteScale scale);

/// The 2x2-block fixture with defect eps and the coupling constant K.
Matrix fixture_matrix(double eps, double big_k);

}  // namespace epsymp
