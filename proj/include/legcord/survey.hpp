#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legcord/numtheory.hpp"

namespace legcord::survey {

/// One (n, m) entry: j = J(n, m), the number of odd primes p <= m for which
/// the complete graph of order n is cordial modulo p. The prime set itself
/// is kept only when requested.
struct SurveyCell {
    int n = 0;
    std::int64_t m = 0;
    std::int64_t j = 0;
    std::optional<std::vector<std::int64_t>> j_set;
};

/// Grid of cells over a contiguous n range and a list of prime bounds.
/// Cells are stored sorted by (m ascending, n ascending), which is also the
/// CSV emission order.
struct SurveyTable {
    std::vector<std::int64_t> m_values;
    int n_min = 0;
    int n_max = 0;
    std::vector<SurveyCell> cells;

    const SurveyCell& cell(int n, std::int64_t m) const;
};

/// The odd primes p <= m for which the order-n complete graph is cordial
/// modulo p, ascending. Decided by the closed-form characterization, which
/// costs O(n mod p) symbol evaluations per prime instead of the O(n^2) of
/// direct counting.
std::vector<std::int64_t> j_set(int n, std::int64_t m);

/// |j_set(n, m)|.
std::int64_t j_count(int n, std::int64_t m);

struct SweepOptions {
    bool with_sets = false;
};

/// Populate the full (n, m) grid. The prime sieve is computed once up to
/// max(m_values) and one symbol table per prime is shared across the whole
/// n range; verdicts are identical to j_set's. m_values are deduplicated
/// and sorted ascending.
SurveyTable sweep(int n_min, int n_max, std::vector<std::int64_t> m_values,
                  SweepOptions options = {});

/// CSV bytes: header "n,m,J", one row per cell in (m, n) order, LF endings.
std::string emit_csv(const SurveyTable& table);

/// Standalone SVG line plot: one polyline per m value over the n axis, with
/// axes, ticks, and a legend. Uses only svg/g/line/polyline/text elements
/// and a fixed palette, and is byte-stable for identical tables.
std::string emit_svg_lineplot(const SurveyTable& table);

struct TrendStatistic {
    double head_mean = 0.0;
    double tail_mean = 0.0;
};

/// Mean J over the first head_window and last tail_window orders of the
/// given m series; a decreasing series drives head_mean above tail_mean.
/// Throws when m is not in the table or a window exceeds the n range.
TrendStatistic trend_statistic(const SurveyTable& table, std::int64_t m, int head_window,
                               int tail_window);

} // namespace legcord::survey
