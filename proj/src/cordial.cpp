#include "legcord/cordial.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "legcord/legraph.hpp"

namespace legcord::cordial {

namespace {

void require_order(int n) {
    if (n < 2) {
        throw std::invalid_argument("n must be at least 2 (got " + std::to_string(n) + ")");
    }
}

std::int64_t balance_target(int n, const OddPrime& p) {
    const std::int64_t pv = p.value();
    const std::int64_t q = n / pv;
    return 2 * static_cast<std::int64_t>(n) * q - pv * q * q - q + legraph::psi(n, p);
}

bool within_window(std::int64_t s, std::int64_t t) {
    return s == t || s == t - 2 || s == t + 2;
}

} // namespace

int edge_label(std::int64_t sum, const OddPrime& p) {
    if (sum % p.value() == 0) {
        return 0;
    }
    return numtheory::legendre_symbol(sum, p) == numtheory::LegendreValue::residue ? 1 : 0;
}

EdgeLabelCounts count_edge_labels(int n, const OddPrime& p) {
    require_order(n);
    EdgeLabelCounts counts;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (edge_label(i + j, p) == 1) {
                ++counts.e1;
            } else {
                ++counts.e0;
            }
        }
    }
    return counts;
}

std::string_view method_name(Method m) noexcept {
    switch (m) {
    case Method::direct:
        return "direct";
    case Method::theorem:
        return "theorem";
    case Method::paper_algorithm:
        return "paper_algorithm";
    }
    return "unknown";
}

CordialVerdict is_cordial_direct(int n, const OddPrime& p) {
    CordialVerdict verdict;
    verdict.method = Method::direct;
    verdict.counts = count_edge_labels(n, p);
    verdict.cordial = std::abs(verdict.counts->e0 - verdict.counts->e1) <= 1;
    return verdict;
}

CordialVerdict is_cordial_theorem(int n, const OddPrime& p) {
    require_order(n);
    CordialVerdict verdict;
    verdict.method = Method::theorem;
    verdict.s_value = legraph::s1_sum(n, p) + legraph::s2_sum(n, p);
    verdict.t_value = balance_target(n, p);
    verdict.cordial = within_window(*verdict.s_value, *verdict.t_value);
    return verdict;
}

CordialVerdict is_cordial_theorem(int n, const OddPrime& p,
                                  const numtheory::LegendreTable& table) {
    require_order(n);
    CordialVerdict verdict;
    verdict.method = Method::theorem;
    verdict.s_value = legraph::s1_sum(n, p, table) + legraph::s2_sum(n, p, table);
    verdict.t_value = balance_target(n, p);
    verdict.cordial = within_window(*verdict.s_value, *verdict.t_value);
    return verdict;
}

CordialVerdict is_cordial_paper_algorithm(int n, const OddPrime& p) {
    require_order(n);
    const std::int64_t pv = p.value();

    // Symbol via Euler's criterion: 1 when the power is 1, otherwise -1.
    const auto legendre_sym = [pv](std::int64_t a) -> std::int64_t {
        return numtheory::mod_pow(a, (pv - 1) / 2, pv) == 1 ? 1 : -1;
    };
    const auto delta = [](std::int64_t s) -> std::int64_t { return s % 2 == 0 ? 1 : 0; };

    const std::int64_t q = n / pv;
    const std::int64_t psi = std::max<std::int64_t>(0, 2 * (n - q * pv) - pv + 1);

    std::int64_t s1 = 0;
    for (std::int64_t s = 2; s <= n - q * pv + 1; ++s) {
        if (s != pv) {
            s1 += (s - 1 - delta(s)) * legendre_sym(s);
        }
    }

    std::int64_t s2 = 0;
    for (std::int64_t s = n - q * pv + 2; s <= 2 * (n - q * pv); ++s) {
        if (s != pv) {
            s2 += (2 * (n - q * pv) - s + 1 - delta(s)) * legendre_sym(s);
        }
    }

    const std::int64_t s_total = s1 + s2;
    const std::int64_t t = 2 * static_cast<std::int64_t>(n) * q - pv * q * q - q + psi;

    CordialVerdict verdict;
    verdict.method = Method::paper_algorithm;
    verdict.s_value = s_total;
    verdict.t_value = t;
    verdict.cordial = s_total == t || s_total == t + 2 || s_total == t - 2;
    return verdict;
}

bool corollary_qp_case(std::int64_t q, const OddPrime& p) {
    if (q < 1) {
        throw std::invalid_argument("q must be positive (got " + std::to_string(q) + ")");
    }
    return q == 1 && p.value() == 3;
}

} // namespace legcord::cordial
