#include "legcord/selfcheck.hpp"

#include <algorithm>
#include <string>

#include "legcord/cordial.hpp"
#include "legcord/legraph.hpp"
#include "legcord/numtheory.hpp"

namespace legcord::selfcheck {

namespace {

using legraph::LegendreGraph;
using numtheory::LegendreValue;
using numtheory::OddPrime;

constexpr LegendreValue kSymbols[] = {LegendreValue::residue, LegendreValue::nonresidue};

std::vector<OddPrime> odd_primes(std::int64_t p_max) {
    std::vector<OddPrime> primes;
    for (const std::int64_t p : numtheory::sieve_primes(p_max)) {
        if (p >= 3) {
            primes.emplace_back(p);
        }
    }
    return primes;
}

std::string sweep_point(int n, const OddPrime& p, LegendreValue k) {
    return "n=" + std::to_string(n) + " p=" + std::to_string(p.value()) +
           " k=" + std::to_string(to_int(k));
}

} // namespace

SuiteResult check_size_formula(int n_max, std::int64_t p_max) {
    SuiteResult result;
    result.name = "size formula vs enumeration";
    for (const OddPrime& p : odd_primes(p_max)) {
        for (int n = 2; n <= n_max; ++n) {
            for (const LegendreValue k : kSymbols) {
                const std::int64_t closed = legraph::size_closed_form(n, p, k).size;
                const std::int64_t enumerated = LegendreGraph(n, p, k).edge_count();
                ++result.cases;
                if (closed != enumerated) {
                    result.passed = false;
                    result.failure = sweep_point(n, p, k) + ": closed form " +
                                     std::to_string(closed) + " != enumerated " +
                                     std::to_string(enumerated);
                    return result;
                }
            }
        }
    }
    return result;
}

SuiteResult check_degree_formula(int n_max, std::int64_t p_max) {
    SuiteResult result;
    result.name = "degree formulas vs enumeration";
    for (const OddPrime& p : odd_primes(p_max)) {
        for (int n = 2; n <= n_max; ++n) {
            for (const LegendreValue k : kSymbols) {
                const LegendreGraph graph(n, p, k);
                for (int label = 1; label <= n; ++label) {
                    const std::int64_t closed = legraph::degree_closed_form(label, n, p, k);
                    const std::int64_t enumerated = graph.degree(label - 1);
                    ++result.cases;
                    if (closed != enumerated) {
                        result.passed = false;
                        result.failure = sweep_point(n, p, k) + " label " +
                                         std::to_string(label) + ": closed form " +
                                         std::to_string(closed) + " != enumerated " +
                                         std::to_string(enumerated);
                        return result;
                    }
                }
            }
        }
    }
    return result;
}

SuiteResult check_claim_sums(int n_max, std::int64_t p_max) {
    SuiteResult result;
    result.name = "omega/pi sum identities";
    for (const OddPrime& p : odd_primes(p_max)) {
        const std::int64_t pv = p.value();
        for (int n = 2; n <= n_max; ++n) {
            const std::int64_t q = n / pv;
            const std::int64_t tail = n - q * pv;
            for (const LegendreValue k : kSymbols) {
                std::int64_t omega_total = 0;
                for (int label = 1; label <= q * pv; ++label) {
                    omega_total +=
                        static_cast<std::int64_t>(legraph::omega_set(label, n, p, k).size());
                }
                const std::int64_t omega_expected = q * tail * (pv - 1) / 2;
                ++result.cases;
                if (omega_total != omega_expected) {
                    result.passed = false;
                    result.failure = sweep_point(n, p, k) + ": omega sum " +
                                     std::to_string(omega_total) + " != " +
                                     std::to_string(omega_expected);
                    return result;
                }

                std::int64_t pi_total = 0;
                for (int label = static_cast<int>(q * pv) + 1; label <= n; ++label) {
                    pi_total += static_cast<std::int64_t>(legraph::pi_set(label, n, p, k).size());
                }
                const std::int64_t s = legraph::s1_sum(n, p) + legraph::s2_sum(n, p);
                const std::int64_t numerator =
                    tail * (tail - 1) - legraph::psi(n, p) + to_int(k) * s;
                ++result.cases;
                if (numerator % 2 != 0 || pi_total != numerator / 2) {
                    result.passed = false;
                    result.failure = sweep_point(n, p, k) + ": pi sum " +
                                     std::to_string(pi_total) + " != " +
                                     std::to_string(numerator) + "/2";
                    return result;
                }
            }
        }
    }
    return result;
}

SuiteResult check_extremal_degrees(int n_max, std::int64_t p_max) {
    SuiteResult result;
    result.name = "extremal degrees at n = q*p";
    for (const OddPrime& p : odd_primes(p_max)) {
        for (std::int64_t q = 1; q * p.value() <= n_max; ++q) {
            const int n = static_cast<int>(q * p.value());
            if (n < 2) {
                continue;
            }
            for (const LegendreValue k : kSymbols) {
                const LegendreGraph graph(n, p, k);
                const auto [lo, hi] =
                    std::minmax_element(graph.degrees().begin(), graph.degrees().end());
                const legraph::DegreeBounds expected = legraph::min_max_degree(q, p);
                ++result.cases;
                if (*lo != expected.min_degree || *hi != expected.max_degree) {
                    result.passed = false;
                    result.failure = sweep_point(n, p, k) + ": degrees [" + std::to_string(*lo) +
                                     ", " + std::to_string(*hi) + "] != [" +
                                     std::to_string(expected.min_degree) + ", " +
                                     std::to_string(expected.max_degree) + "]";
                    return result;
                }
            }
        }
    }
    return result;
}

SuiteResult check_three_way_agreement(int n_max, std::int64_t p_max) {
    SuiteResult result;
    result.name = "three-way cordiality agreement";
    for (const OddPrime& p : odd_primes(p_max)) {
        for (int n = 2; n <= n_max; ++n) {
            const cordial::CordialVerdict direct = cordial::is_cordial_direct(n, p);
            const cordial::CordialVerdict theorem = cordial::is_cordial_theorem(n, p);
            const cordial::CordialVerdict transcribed = cordial::is_cordial_paper_algorithm(n, p);
            ++result.cases;
            if (direct.cordial != theorem.cordial || direct.cordial != transcribed.cordial ||
                theorem.s_value != transcribed.s_value ||
                theorem.t_value != transcribed.t_value) {
                result.passed = false;
                result.failure = "n=" + std::to_string(n) + " p=" + std::to_string(p.value()) +
                                 ": direct=" + std::to_string(direct.cordial) +
                                 " theorem=" + std::to_string(theorem.cordial) +
                                 " algorithm=" + std::to_string(transcribed.cordial);
                return result;
            }
        }
    }
    return result;
}

SuiteResult check_corollary(int n_max, std::int64_t p_max) {
    SuiteResult result;
    result.name = "K_{q*p} cordiality boundary";
    for (const OddPrime& p : odd_primes(p_max)) {
        for (std::int64_t q = 1; q * p.value() <= n_max; ++q) {
            const int n = static_cast<int>(q * p.value());
            if (n < 2) {
                continue;
            }
            const bool expected = cordial::corollary_qp_case(q, p);
            const bool actual = cordial::is_cordial_direct(n, p).cordial;
            ++result.cases;
            if (expected != actual) {
                result.passed = false;
                result.failure = "q=" + std::to_string(q) + " p=" + std::to_string(p.value()) +
                                 ": corollary says " + std::to_string(expected) +
                                 ", direct count says " + std::to_string(actual);
                return result;
            }
        }
    }
    return result;
}

std::vector<SuiteResult> run_all(int n_max, std::int64_t p_max) {
    return {
        check_size_formula(n_max, p_max),   check_degree_formula(n_max, p_max),
        check_claim_sums(n_max, p_max),     check_extremal_degrees(n_max, p_max),
        check_three_way_agreement(n_max, p_max), check_corollary(n_max, p_max),
    };
}

} // namespace legcord::selfcheck
