#ifndef SELBERG_VERIFY_HPP
#define SELBERG_VERIFY_HPP

#include <functional>
#include <string>

#include "selberg/rational.hpp"

namespace selberg {

struct SuiteOptions {
    int max_n = 8;
    unsigned seed = 1;
};

struct SuiteOutcome {
    long checks = 0;
    long failures = 0;
    std::string first_failure;  // reproducer for the first failed check
};

/// Called once per individual check with its outcome and a one-line label.
using CheckReporter = std::function<void(bool ok, const std::string& line)>;

// Each runner stops at the first failure. A default-constructed reporter is
// allowed (counting only).

/// LDU = U'D'L', U U^{-1} = I, A Utilde = Ltilde, the factored assembly of A
/// against the plain triangular product (constant and symbolic coordinates),
/// the coordinate-interchange form of the UL factors, and the degeneration
/// of the cleared system to the scalar Selberg recurrence. Random rational
/// parameter tuples, 20 per matrix order.
SuiteOutcome run_matrices_suite(const SuiteOptions& opt, const CheckReporter& report);

/// Three-term relations over the documented small-parameter grid.
SuiteOutcome run_three_term_suite(const CheckReporter& report);

/// Iterated summation identities over the same grid.
SuiteOutcome run_corollary_suite(const CheckReporter& report);

/// <H> = 0 orbit-sum identity, n in {2, 3}, over the grid.
SuiteOutcome run_appendix_a_suite(const CheckReporter& report);

/// Matrix-pipeline moments against the brute-force expansion.
SuiteOutcome run_oracle_equivalence_suite(const CheckReporter& report);

/// mu = 1 pipeline against the terminating hypergeometric closed form.
SuiteOutcome run_mu1_suite(const CheckReporter& report);

/// Elementary-symmetric averages against their closed form.
SuiteOutcome run_w2_suite(const CheckReporter& report);

/// Wall-clock seconds for one moment-polynomial computation at a = b = 2.
double time_moment_chain(int n, int mu, const Rational& tau);

} // namespace selberg

#endif
