#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace legcord::selfcheck {

/// Outcome of one cross-validation sweep. On failure, `failure` holds the
/// first counterexample.
struct SuiteResult {
    std::string name;
    bool passed = true;
    std::int64_t cases = 0;
    std::string failure;
};

/// Closed-form size vs enumerated edge count, all 2 <= n <= n_max, odd
/// primes p <= p_max, both edge symbols.
SuiteResult check_size_formula(int n_max, std::int64_t p_max);

/// Closed-form degree vs enumerated degree for every vertex of the same
/// sweep.
SuiteResult check_degree_formula(int n_max, std::int64_t p_max);

/// The omega and pi cardinality sums against their closed forms, same sweep.
SuiteResult check_claim_sums(int n_max, std::int64_t p_max);

/// Enumerated extremal degrees of the order-q*p graphs against
/// q(p-1)/2 - 1 and q(p-1)/2, for q*p <= n_max, p <= p_max.
SuiteResult check_extremal_degrees(int n_max, std::int64_t p_max);

/// direct / theorem / transcribed-algorithm verdict agreement over the grid.
SuiteResult check_three_way_agreement(int n_max, std::int64_t p_max);

/// corollary_qp_case against the direct verdict for q*p <= n_max,
/// p <= p_max.
SuiteResult check_corollary(int n_max, std::int64_t p_max);

/// All suites, in a fixed order.
std::vector<SuiteResult> run_all(int n_max, std::int64_t p_max);

} // namespace legcord::selfcheck
