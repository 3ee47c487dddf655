#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "legcord/numtheory.hpp"

namespace legcord::cordial {

using numtheory::OddPrime;

/// Induced {0,1} label of a pair sum: 1 for quadratic-residue sums, 0 for
/// nonresidue sums and for sums divisible by p.
int edge_label(std::int64_t sum, const OddPrime& p);

struct EdgeLabelCounts {
    std::int64_t e0 = 0;
    std::int64_t e1 = 0;

    friend bool operator==(const EdgeLabelCounts&, const EdgeLabelCounts&) noexcept = default;
};

/// Label counts over all unordered pairs {i, j} of {1..n}. No graph is
/// materialized: on a complete graph every label pair occurs exactly once,
/// so vertex identity is irrelevant and the counts are labeling-independent.
/// Requires n >= 2.
EdgeLabelCounts count_edge_labels(int n, const OddPrime& p);

enum class Method {
    direct,
    theorem,
    paper_algorithm,
};

std::string_view method_name(Method m) noexcept;

/// Decision plus the witness quantities of whichever route produced it, so a
/// disagreement is diagnosable without re-running.
struct CordialVerdict {
    bool cordial = false;
    Method method = Method::direct;
    std::optional<std::int64_t> s_value; // theorem, paper_algorithm
    std::optional<std::int64_t> t_value; // theorem, paper_algorithm
    std::optional<EdgeLabelCounts> counts; // direct
};

/// Count the induced edge labels of the complete graph and test
/// |e0 - e1| <= 1.
CordialVerdict is_cordial_direct(int n, const OddPrime& p);

/// Closed-form characterization: with S = S1 + S2 and
/// T = 2nq - pq^2 - q + psi, the complete graph is cordial modulo p exactly
/// when S is T or T +- 2.
CordialVerdict is_cordial_theorem(int n, const OddPrime& p);
CordialVerdict is_cordial_theorem(int n, const OddPrime& p,
                                  const numtheory::LegendreTable& table);

/// Self-contained scalar transcription of the cordiality check: its own
/// symbol routine on top of mod_pow, its own parity indicator, explicit S1
/// and S2 loops, and the S-in-{T, T-2, T+2} membership test. Deliberately
/// kept independent of is_cordial_theorem so the two can cross-check each
/// other.
CordialVerdict is_cordial_paper_algorithm(int n, const OddPrime& p);

/// The n = q*p special case of the characterization: cordial exactly when
/// q = 1 and p = 3. Requires q >= 1.
bool corollary_qp_case(std::int64_t q, const OddPrime& p);

} // namespace legcord::cordial
