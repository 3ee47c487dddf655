#include "legcord/survey.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "legcord/cordial.hpp"

namespace legcord::survey {

namespace {

void require_order(int n) {
    if (n < 2) {
        throw std::invalid_argument("n must be at least 2 (got " + std::to_string(n) + ")");
    }
}

std::vector<std::int64_t> odd_primes_up_to(std::int64_t m) {
    std::vector<std::int64_t> primes = numtheory::sieve_primes(m);
    std::erase(primes, 2);
    return primes;
}

// Default series palette, cycled when a table has more m values.
constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
}

// Smallest 1/2/5 * 10^k step that fits the range into at most max_ticks
// intervals.
std::int64_t nice_step(std::int64_t range, std::int64_t max_ticks) {
    for (std::int64_t base = 1;; base *= 10) {
        for (const std::int64_t mult : {1, 2, 5}) {
            const std::int64_t step = base * mult;
            if (range / step <= max_ticks) {
                return step;
            }
        }
    }
}

} // namespace

const SurveyCell& SurveyTable::cell(int n, std::int64_t m) const {
    const auto m_it = std::find(m_values.begin(), m_values.end(), m);
    if (m_it == m_values.end() || n < n_min || n > n_max) {
        throw std::out_of_range("no cell for n=" + std::to_string(n) +
                                " m=" + std::to_string(m));
    }
    const std::size_t n_count = static_cast<std::size_t>(n_max - n_min + 1);
    const std::size_t index = static_cast<std::size_t>(m_it - m_values.begin()) * n_count +
                              static_cast<std::size_t>(n - n_min);
    return cells.at(index);
}

std::vector<std::int64_t> j_set(int n, std::int64_t m) {
    require_order(n);
    std::vector<std::int64_t> members;
    for (const std::int64_t value : odd_primes_up_to(m)) {
        const numtheory::OddPrime p(value);
        if (cordial::is_cordial_theorem(n, p).cordial) {
            members.push_back(value);
        }
    }
    return members;
}

std::int64_t j_count(int n, std::int64_t m) {
    return static_cast<std::int64_t>(j_set(n, m).size());
}

SurveyTable sweep(int n_min, int n_max, std::vector<std::int64_t> m_values,
                  SweepOptions options) {
    require_order(n_min);
    if (n_min > n_max) {
        throw std::invalid_argument("n range is empty");
    }
    if (m_values.empty()) {
        throw std::invalid_argument("at least one m bound is required");
    }
    std::sort(m_values.begin(), m_values.end());
    m_values.erase(std::unique(m_values.begin(), m_values.end()), m_values.end());

    const std::vector<std::int64_t> primes = odd_primes_up_to(m_values.back());
    const std::size_t n_count = static_cast<std::size_t>(n_max - n_min + 1);

    // cordial_for[ni][pi]; one symbol table per prime serves every order.
    std::vector<std::vector<bool>> cordial_for(n_count, std::vector<bool>(primes.size(), false));
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        const numtheory::OddPrime p(primes[pi]);
        const numtheory::LegendreTable table(p);
        for (std::size_t ni = 0; ni < n_count; ++ni) {
            cordial_for[ni][pi] =
                cordial::is_cordial_theorem(n_min + static_cast<int>(ni), p, table).cordial;
        }
    }

    SurveyTable table;
    table.m_values = m_values;
    table.n_min = n_min;
    table.n_max = n_max;
    table.cells.reserve(m_values.size() * n_count);
    for (const std::int64_t m : m_values) {
        for (std::size_t ni = 0; ni < n_count; ++ni) {
            SurveyCell cell;
            cell.n = n_min + static_cast<int>(ni);
            cell.m = m;
            if (options.with_sets) {
                cell.j_set.emplace();
            }
            for (std::size_t pi = 0; pi < primes.size() && primes[pi] <= m; ++pi) {
                if (cordial_for[ni][pi]) {
                    ++cell.j;
                    if (cell.j_set) {
                        cell.j_set->push_back(primes[pi]);
                    }
                }
            }
            table.cells.push_back(std::move(cell));
        }
    }
    return table;
}

std::string emit_csv(const SurveyTable& table) {
    std::string out = "n,m,J\n";
    for (const SurveyCell& cell : table.cells) {
        out += std::to_string(cell.n);
        out += ',';
        out += std::to_string(cell.m);
        out += ',';
        out += std::to_string(cell.j);
        out += '\n';
    }
    return out;
}

std::string emit_svg_lineplot(const SurveyTable& table) {
    constexpr double kWidth = 900.0;
    constexpr double kHeight = 480.0;
    constexpr double kLeft = 66.0;
    constexpr double kRight = 730.0;
    constexpr double kTop = 20.0;
    constexpr double kBottom = 430.0;

    std::int64_t max_j = 0;
    for (const SurveyCell& cell : table.cells) {
        max_j = std::max(max_j, cell.j);
    }
    const std::int64_t y_step = nice_step(std::max<std::int64_t>(max_j, 1), 8);
    const std::int64_t y_top = std::max<std::int64_t>(y_step, ((max_j + y_step - 1) / y_step) * y_step);
    const std::int64_t x_span = std::max(table.n_max - table.n_min, 1);
    const std::int64_t x_step = nice_step(x_span, 10);

    const auto x_of = [&](double n) {
        return kLeft + (n - table.n_min) / static_cast<double>(x_span) * (kRight - kLeft);
    };
    const auto y_of = [&](double j) {
        return kBottom - j / static_cast<double>(y_top) * (kBottom - kTop);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"480\" "
           "viewBox=\"0 0 " +
           coord(kWidth) + " " + coord(kHeight) + "\">\n";

    // Axes and tick marks.
    svg += "<g stroke=\"#000000\" stroke-width=\"1\">\n";
    svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" +
           coord(kRight) + "\" y2=\"" + coord(kBottom) + "\"/>\n";
    svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kTop) + "\" x2=\"" + coord(kLeft) +
           "\" y2=\"" + coord(kBottom) + "\"/>\n";
    for (std::int64_t tick = ((table.n_min + x_step - 1) / x_step) * x_step; tick <= table.n_max;
         tick += x_step) {
        const double x = x_of(static_cast<double>(tick));
        svg += "<line x1=\"" + coord(x) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" + coord(x) +
               "\" y2=\"" + coord(kBottom + 5.0) + "\"/>\n";
    }
    for (std::int64_t tick = 0; tick <= y_top; tick += y_step) {
        const double y = y_of(static_cast<double>(tick));
        svg += "<line x1=\"" + coord(kLeft - 5.0) + "\" y1=\"" + coord(y) + "\" x2=\"" +
               coord(kLeft) + "\" y2=\"" + coord(y) + "\"/>\n";
    }
    svg += "</g>\n";

    // Tick labels and axis captions.
    svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
    for (std::int64_t tick = ((table.n_min + x_step - 1) / x_step) * x_step; tick <= table.n_max;
         tick += x_step) {
        const double x = x_of(static_cast<double>(tick));
        svg += "<text x=\"" + coord(x) + "\" y=\"" + coord(kBottom + 18.0) +
               "\" text-anchor=\"middle\">" + std::to_string(tick) + "</text>\n";
    }
    for (std::int64_t tick = 0; tick <= y_top; tick += y_step) {
        const double y = y_of(static_cast<double>(tick));
        svg += "<text x=\"" + coord(kLeft - 9.0) + "\" y=\"" + coord(y + 4.0) +
               "\" text-anchor=\"end\">" + std::to_string(tick) + "</text>\n";
    }
    svg += "<text x=\"" + coord((kLeft + kRight) / 2.0) + "\" y=\"" + coord(kHeight - 12.0) +
           "\" text-anchor=\"middle\">n</text>\n";
    svg += "<text x=\"16.00\" y=\"" + coord((kTop + kBottom) / 2.0) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 16.00 " +
           coord((kTop + kBottom) / 2.0) + ")\">J(n,m)</text>\n";
    svg += "</g>\n";

    // One polyline per m value.
    svg += "<g fill=\"none\" stroke-width=\"1.5\">\n";
    for (std::size_t mi = 0; mi < table.m_values.size(); ++mi) {
        const char* color = kPalette[mi % kPalette.size()];
        std::string points;
        for (int n = table.n_min; n <= table.n_max; ++n) {
            if (!points.empty()) {
                points += ' ';
            }
            const SurveyCell& cell = table.cell(n, table.m_values[mi]);
            points += coord(x_of(n)) + "," + coord(y_of(static_cast<double>(cell.j)));
        }
        svg += "<polyline stroke=\"";
        svg += color;
        svg += "\" points=\"" + points + "\"/>\n";
    }
    svg += "</g>\n";

    // Legend.
    svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
    for (std::size_t mi = 0; mi < table.m_values.size(); ++mi) {
        const double y = kTop + 14.0 + 18.0 * static_cast<double>(mi);
        svg += "<line x1=\"" + coord(kRight + 16.0) + "\" y1=\"" + coord(y - 4.0) + "\" x2=\"" +
               coord(kRight + 44.0) + "\" y2=\"" + coord(y - 4.0) + "\" stroke=\"";
        svg += kPalette[mi % kPalette.size()];
        svg += "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + coord(kRight + 50.0) + "\" y=\"" + coord(y) + "\">m = " +
               std::to_string(table.m_values[mi]) + "</text>\n";
    }
    svg += "</g>\n";
    svg += "</svg>\n";
    return svg;
}

TrendStatistic trend_statistic(const SurveyTable& table, std::int64_t m, int head_window,
                               int tail_window) {
    if (std::find(table.m_values.begin(), table.m_values.end(), m) == table.m_values.end()) {
        throw std::invalid_argument("m=" + std::to_string(m) + " is not in the table");
    }
    const int n_count = table.n_max - table.n_min + 1;
    if (head_window < 1 || tail_window < 1 || head_window > n_count || tail_window > n_count) {
        throw std::invalid_argument("window does not fit inside the n range");
    }
    TrendStatistic stat;
    for (int i = 0; i < head_window; ++i) {
        stat.head_mean += static_cast<double>(table.cell(table.n_min + i, m).j);
    }
    stat.head_mean /= head_window;
    for (int i = 0; i < tail_window; ++i) {
        stat.tail_mean += static_cast<double>(table.cell(table.n_max - i, m).j);
    }
    stat.tail_mean /= tail_window;
    return stat;
}

} // namespace legcord::survey
