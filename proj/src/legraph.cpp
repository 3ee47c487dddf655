#include "legcord/legraph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace legcord::legraph {

namespace {

void require_order(int n) {
    if (n < 2) {
        throw std::invalid_argument("n must be at least 2 (got " + std::to_string(n) + ")");
    }
}

std::int64_t tail_size(int n, std::int64_t p) {
    return n - (n / p) * p;
}

// Shared body of the two symbol sums; `sign` maps a non-divisible s to +1/-1.
// Within [2, 2(n-qp)] the only multiple of p is p itself, since the tail is
// at most p-1; assert that so the s != p guard provably equals the
// zero-symbol exclusion.
template <typename SignFn>
std::int64_t weighted_symbol_sum(std::int64_t from, std::int64_t to, std::int64_t p,
                                 SignFn sign, std::int64_t (*weight)(std::int64_t, std::int64_t),
                                 std::int64_t tail) {
    std::int64_t total = 0;
    for (std::int64_t s = from; s <= to; ++s) {
        if (s == p) {
            continue;
        }
        assert(s % p != 0);
        total += weight(s, tail) * sign(s);
    }
    return total;
}

std::int64_t s1_weight(std::int64_t s, std::int64_t) {
    return s - 1 - delta_s(s);
}

std::int64_t s2_weight(std::int64_t s, std::int64_t tail) {
    return 2 * tail - s + 1 - delta_s(s);
}

} // namespace

VertexLabeling VertexLabeling::identity(int n) {
    std::vector<int> labels(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(labels.begin(), labels.end(), 1);
    return VertexLabeling(std::move(labels));
}

VertexLabeling::VertexLabeling(std::vector<int> labels) : labels_(std::move(labels)) {
    const int n = order();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int value : labels_) {
        if (value < 1 || value > n || seen[static_cast<std::size_t>(value)]) {
            throw std::invalid_argument("labeling must be a bijection onto {1..n}");
        }
        seen[static_cast<std::size_t>(value)] = true;
    }
}

LegendreGraph::LegendreGraph(int n, const OddPrime& p, LegendreValue edge_symbol,
                             VertexLabeling labeling)
    : p_(p), edge_symbol_(edge_symbol), labeling_(std::move(labeling)) {
    require_order(n);
    if (labeling_.order() != n) {
        throw std::invalid_argument("labeling order " + std::to_string(labeling_.order()) +
                                    " does not match graph order " + std::to_string(n));
    }
    degree_.assign(static_cast<std::size_t>(n), 0);
    const std::int64_t pv = p_.value();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const std::int64_t sum = labeling_.label(u) + labeling_.label(v);
            if (sum % pv == 0) {
                continue;
            }
            if (numtheory::legendre_symbol(sum, p_) == edge_symbol_) {
                edges_.emplace_back(u, v);
                ++degree_[static_cast<std::size_t>(u)];
                ++degree_[static_cast<std::size_t>(v)];
            }
        }
    }
}

LegendreGraph::LegendreGraph(int n, const OddPrime& p, LegendreValue edge_symbol)
    : LegendreGraph(n, p, edge_symbol, VertexLabeling::identity(n)) {}

std::vector<std::pair<int, int>> LegendreGraph::label_edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(edges_.size());
    for (const auto& [u, v] : edges_) {
        const int a = labeling_.label(u);
        const int b = labeling_.label(v);
        result.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool LegendreGraph::has_edge(int u, int v) const {
    const auto key = std::make_pair(std::min(u, v), std::max(u, v));
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

std::int64_t delta_s(std::int64_t s) noexcept {
    return s % 2 == 0 ? 1 : 0;
}

std::int64_t eta_s(std::int64_t s, int n, const OddPrime& p) {
    require_order(n);
    const std::int64_t tail = tail_size(n, p.value());
    if (s < 2 || s > 2 * tail) {
        throw std::invalid_argument("pair sum " + std::to_string(s) + " outside [2, " +
                                    std::to_string(2 * tail) + "]");
    }
    return s <= tail + 1 ? s - 1 : 2 * tail - s + 1;
}

std::int64_t psi(int n, const OddPrime& p) {
    require_order(n);
    const std::int64_t tail = tail_size(n, p.value());
    return std::max<std::int64_t>(0, 2 * tail - p.value() + 1);
}

std::int64_t s1_sum(int n, const OddPrime& p) {
    require_order(n);
    const std::int64_t tail = tail_size(n, p.value());
    return weighted_symbol_sum(
        2, tail + 1, p.value(),
        [&p](std::int64_t s) { return to_int(numtheory::legendre_symbol(s, p)); }, s1_weight,
        tail);
}

std::int64_t s1_sum(int n, const OddPrime& p, const numtheory::LegendreTable& table) {
    require_order(n);
    if (table.prime() != p) {
        throw std::invalid_argument("symbol table built for a different modulus");
    }
    const std::int64_t tail = tail_size(n, p.value());
    return weighted_symbol_sum(
        2, tail + 1, p.value(), [&table](std::int64_t s) { return table.sign_or_zero(s); },
        s1_weight, tail);
}

std::int64_t s2_sum(int n, const OddPrime& p) {
    require_order(n);
    const std::int64_t tail = tail_size(n, p.value());
    return weighted_symbol_sum(
        tail + 2, 2 * tail, p.value(),
        [&p](std::int64_t s) { return to_int(numtheory::legendre_symbol(s, p)); }, s2_weight,
        tail);
}

std::int64_t s2_sum(int n, const OddPrime& p, const numtheory::LegendreTable& table) {
    require_order(n);
    if (table.prime() != p) {
        throw std::invalid_argument("symbol table built for a different modulus");
    }
    const std::int64_t tail = tail_size(n, p.value());
    return weighted_symbol_sum(
        tail + 2, 2 * tail, p.value(), [&table](std::int64_t s) { return table.sign_or_zero(s); },
        s2_weight, tail);
}

SizeFormulaBreakdown size_closed_form(int n, const OddPrime& p, LegendreValue k) {
    require_order(n);
    const std::int64_t pv = p.value();
    SizeFormulaBreakdown out;
    out.q = n / pv;
    out.psi = psi(n, p);
    out.s1 = s1_sum(n, p);
    out.s2 = s2_sum(n, p);
    out.s_total = out.s1 + out.s2;
    const std::int64_t nn = n;
    const std::int64_t bracket = nn * nn - nn - 2 * nn * out.q + pv * out.q * out.q + out.q -
                                 out.psi + to_int(k) * out.s_total;
    if (bracket % 4 != 0 || bracket < 0) {
        throw std::logic_error("size formula bracket " + std::to_string(bracket) +
                               " is not a non-negative multiple of 4 (n=" + std::to_string(n) +
                               " p=" + std::to_string(pv) + " k=" + std::to_string(to_int(k)) +
                               ")");
    }
    out.size = bracket / 4;
    return out;
}

std::set<std::int64_t> omega_set(int v_label, int n, const OddPrime& p, LegendreValue k) {
    require_order(n);
    const std::int64_t pv = p.value();
    const std::int64_t q = n / pv;
    if (v_label < 1 || v_label > q * pv) {
        throw std::invalid_argument("label " + std::to_string(v_label) + " outside [1, " +
                                    std::to_string(q * pv) + "]");
    }
    const std::int64_t tail = tail_size(n, pv);
    std::set<std::int64_t> out;
    for (std::int64_t c = 1; c <= tail; ++c) {
        const std::int64_t xi = (v_label + c) % pv;
        if (xi != 0 && numtheory::legendre_symbol(xi, p) == k) {
            out.insert(xi);
        }
    }
    return out;
}

std::set<std::int64_t> pi_set(int v_label, int n, const OddPrime& p, LegendreValue k) {
    require_order(n);
    const std::int64_t pv = p.value();
    const std::int64_t q = n / pv;
    if (v_label <= q * pv || v_label > n) {
        throw std::invalid_argument("label " + std::to_string(v_label) + " outside [" +
                                    std::to_string(q * pv + 1) + ", " + std::to_string(n) + "]");
    }
    const std::int64_t tail = tail_size(n, pv);
    const std::int64_t epsilon = v_label - q * pv;
    std::set<std::int64_t> out;
    for (std::int64_t c = 1; c <= tail; ++c) {
        if (c == epsilon) {
            continue;
        }
        const std::int64_t xi = (v_label + c) % pv;
        if (xi != 0 && numtheory::legendre_symbol(xi, p) == k) {
            out.insert(xi);
        }
    }
    return out;
}

VertexResidueProfile vertex_residue_profile(int v_label, int n, const OddPrime& p,
                                            LegendreValue k) {
    require_order(n);
    const std::int64_t pv = p.value();
    const std::int64_t q = n / pv;
    if (v_label < 1 || v_label > n) {
        throw std::invalid_argument("label " + std::to_string(v_label) + " outside [1, " +
                                    std::to_string(n) + "]");
    }
    VertexResidueProfile profile;
    const std::int64_t tail = tail_size(n, pv);
    profile.residue_pool.resize(static_cast<std::size_t>(tail));
    std::iota(profile.residue_pool.begin(), profile.residue_pool.end(), 1);
    if (v_label <= q * pv) {
        profile.omega = omega_set(v_label, n, p, k);
    } else {
        profile.epsilon = v_label - q * pv;
        profile.pi = pi_set(v_label, n, p, k);
    }
    return profile;
}

std::int64_t degree_closed_form(int v_label, int n, const OddPrime& p, LegendreValue k) {
    require_order(n);
    const std::int64_t pv = p.value();
    const std::int64_t q = n / pv;
    if (v_label < 1 || v_label > n) {
        throw std::invalid_argument("label " + std::to_string(v_label) + " outside [1, " +
                                    std::to_string(n) + "]");
    }
    const std::int64_t base = q * (pv - 1) / 2;
    if (v_label > q * pv) {
        return base + static_cast<std::int64_t>(pi_set(v_label, n, p, k).size());
    }
    const auto omega = static_cast<std::int64_t>(omega_set(v_label, n, p, k).size());
    if (v_label % pv != 0 && numtheory::legendre_symbol(2 * v_label, p) == k) {
        return base - 1 + omega;
    }
    return base + omega;
}

DegreeBounds min_max_degree(std::int64_t q, const OddPrime& p) {
    if (q < 1) {
        throw std::invalid_argument("q must be positive (got " + std::to_string(q) + ")");
    }
    const std::int64_t half = q * (p.value() - 1) / 2;
    return DegreeBounds{half - 1, half};
}

std::string to_edge_list(const LegendreGraph& graph) {
    std::string out;
    for (const auto& [a, b] : graph.label_edges()) {
        out += std::to_string(a);
        out += ' ';
        out += std::to_string(b);
        out += '\n';
    }
    return out;
}

std::string to_dot(const LegendreGraph& graph) {
    std::string out = "graph legendre {\n";
    for (int label = 1; label <= graph.order(); ++label) {
        out += "  " + std::to_string(label) + ";\n";
    }
    for (const auto& [a, b] : graph.label_edges()) {
        out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace legcord::legraph
