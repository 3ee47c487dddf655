#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "legcord/numtheory.hpp"

namespace legcord::legraph {

using numtheory::LegendreValue;
using numtheory::OddPrime;

/// A bijection from the vertex indices [0, n) onto the labels {1..n}.
class VertexLabeling {
public:
    static VertexLabeling identity(int n);

    /// labels[v] is the label of vertex v. Throws std::invalid_argument
    /// unless the vector is a bijection onto {1..labels.size()}.
    explicit VertexLabeling(std::vector<int> labels);

    int order() const noexcept { return static_cast<int>(labels_.size()); }
    int label(int vertex) const { return labels_.at(static_cast<std::size_t>(vertex)); }
    const std::vector<int>& labels() const noexcept { return labels_; }

private:
    std::vector<int> labels_;
};

/// Graph on n labeled vertices in which {a, b} is an edge exactly when the
/// label sum f(a) + f(b) has Legendre symbol k modulo p. Sums divisible by p
/// produce an edge in neither the k = +1 nor the k = -1 graph.
///
/// Immutable after construction.
class LegendreGraph {
public:
    LegendreGraph(int n, const OddPrime& p, LegendreValue edge_symbol, VertexLabeling labeling);

    /// Identity labeling f(v) = v + 1.
    LegendreGraph(int n, const OddPrime& p, LegendreValue edge_symbol);

    int order() const noexcept { return labeling_.order(); }
    const OddPrime& prime() const noexcept { return p_; }
    LegendreValue edge_symbol() const noexcept { return edge_symbol_; }
    const VertexLabeling& labeling() const noexcept { return labeling_; }

    /// Unordered vertex-index pairs (u, v), u < v, sorted ascending.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    /// The same edges as label pairs (a, b), a < b, sorted ascending. This is
    /// the exported representation.
    std::vector<std::pair<int, int>> label_edges() const;

    std::int64_t edge_count() const noexcept { return static_cast<std::int64_t>(edges_.size()); }
    int degree(int vertex) const { return degree_.at(static_cast<std::size_t>(vertex)); }
    const std::vector<int>& degrees() const noexcept { return degree_; }
    bool has_edge(int u, int v) const;

private:
    OddPrime p_;
    LegendreValue edge_symbol_;
    VertexLabeling labeling_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degree_;
};

/// Parity indicator: 1 when s is even, 0 otherwise.
std::int64_t delta_s(std::int64_t s) noexcept;

/// Number of ordered pairs (i, c) in [1, n-qp]^2 with i + c = s, where
/// q = floor(n/p). Valid for 2 <= s <= 2(n-qp); throws otherwise.
std::int64_t eta_s(std::int64_t s, int n, const OddPrime& p);

/// max{0, 2(n-qp) - p + 1}: the number of ordered pairs (i, c) in
/// [1, n-qp]^2 whose sum is divisible by p.
std::int64_t psi(int n, const OddPrime& p);

/// Signed symbol sum over pair sums s in [2, n-qp+1], s != p, each weighted
/// by (s - 1 - delta_s).
std::int64_t s1_sum(int n, const OddPrime& p);
std::int64_t s1_sum(int n, const OddPrime& p, const numtheory::LegendreTable& table);

/// Companion sum over s in [n-qp+2, 2(n-qp)], s != p, each weighted by
/// (2(n-qp) - s + 1 - delta_s).
std::int64_t s2_sum(int n, const OddPrime& p);
std::int64_t s2_sum(int n, const OddPrime& p, const numtheory::LegendreTable& table);

/// Every intermediate quantity of the closed-form edge count.
struct SizeFormulaBreakdown {
    std::int64_t q = 0;
    std::int64_t psi = 0;
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
    std::int64_t s_total = 0;
    std::int64_t size = 0;
};

/// Closed-form edge count of the order-n Legendre graph:
/// size = (n^2 - n - 2nq + pq^2 + q - psi + k(S1 + S2)) / 4.
/// The division must be exact; a remainder can only come from a coding error
/// and throws std::logic_error. The result equals the enumerated edge count
/// for every bijective labeling.
SizeFormulaBreakdown size_closed_form(int n, const OddPrime& p, LegendreValue k);

/// Residues xi with symbol k reachable as v_label + c (mod p), c in the tail
/// pool {1..n-qp}. Requires 1 <= v_label <= qp.
std::set<std::int64_t> omega_set(int v_label, int n, const OddPrime& p, LegendreValue k);

/// Same as omega_set but for tail vertices: c ranges over the pool minus
/// epsilon(v) = v_label - qp. Requires qp+1 <= v_label <= n.
std::set<std::int64_t> pi_set(int v_label, int n, const OddPrime& p, LegendreValue k);

/// The residue bookkeeping attached to one vertex label: the tail pool F,
/// plus exactly one of omega (block vertices) or pi/epsilon (tail vertices).
struct VertexResidueProfile {
    std::vector<std::int64_t> residue_pool;
    std::optional<std::int64_t> epsilon;
    std::optional<std::set<std::int64_t>> omega;
    std::optional<std::set<std::int64_t>> pi;
};

VertexResidueProfile vertex_residue_profile(int v_label, int n, const OddPrime& p,
                                            LegendreValue k);

/// Closed-form degree of the vertex with the given label:
///   1 <= v_label <= qp:  q(p-1)/2 - 1 + |omega| when (2*v_label/p) = k,
///                        q(p-1)/2     + |omega| otherwise (incl. p | v_label),
///   qp <  v_label <= n:  q(p-1)/2     + |pi|.
std::int64_t degree_closed_form(int v_label, int n, const OddPrime& p, LegendreValue k);

struct DegreeBounds {
    std::int64_t min_degree = 0;
    std::int64_t max_degree = 0;

    friend bool operator==(const DegreeBounds&, const DegreeBounds&) noexcept = default;
};

/// Extremal degrees of the order-qp Legendre graph: q(p-1)/2 - 1 and
/// q(p-1)/2, for either edge symbol. Requires q >= 1.
DegreeBounds min_max_degree(std::int64_t q, const OddPrime& p);

/// Edge-list export: one "a b" line per edge in label space, a < b, sorted,
/// LF endings.
std::string to_edge_list(const LegendreGraph& graph);

/// DOT export for visualization; vertices appear by label so isolated
/// vertices are kept.
std::string to_dot(const LegendreGraph& graph);

} // namespace legcord::legraph
