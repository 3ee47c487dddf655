#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "legcord/cordial.hpp"
#include "legcord/numtheory.hpp"
#include "legcord/survey.hpp"

using namespace legcord::survey;
using legcord::numtheory::OddPrime;
using legcord::numtheory::prime_count;

namespace {

// Minimal CSV reader for round-trip checks.
std::vector<SurveyCell> parse_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "n,m,J");
    std::vector<SurveyCell> cells;
    while (std::getline(in, line)) {
        SurveyCell cell;
        const std::size_t first = line.find(',');
        const std::size_t second = line.find(',', first + 1);
        REQUIRE(first != std::string::npos);
        REQUIRE(second != std::string::npos);
        cell.n = std::stoi(line.substr(0, first));
        cell.m = std::stoll(line.substr(first + 1, second - first - 1));
        cell.j = std::stoll(line.substr(second + 1));
        cells.push_back(cell);
    }
    return cells;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

SurveyTable table_from_j_values(const std::vector<std::int64_t>& values, std::int64_t m) {
    SurveyTable table;
    table.m_values = {m};
    table.n_min = 2;
    table.n_max = 1 + static_cast<int>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        table.cells.push_back(SurveyCell{2 + static_cast<int>(i), m, values[i], std::nullopt});
    }
    return table;
}

} // namespace

TEST_CASE("j_set frozen values") {
    CHECK(j_set(2, 10) == std::vector<std::int64_t>{3, 5, 7});
    CHECK(j_set(3, 10) == std::vector<std::int64_t>{3, 5, 7});
    CHECK(j_set(6, 5).empty());
    CHECK(j_set(2, 2).empty());
}

TEST_CASE("j_count frozen values and the K_2 identity") {
    CHECK(j_count(2, 10) == 3);
    CHECK(j_count(3, 10) == 3);
    CHECK(j_count(2, 100) == 24);
    for (std::int64_t m = 3; m <= 300; ++m) {
        CHECK(j_count(2, m) == prime_count(m) - 1);
    }
}

TEST_CASE("j_set members really are cordial and non-members are not") {
    for (int n = 2; n <= 12; ++n) {
        const std::vector<std::int64_t> members = j_set(n, 50);
        std::size_t next = 0;
        for (const std::int64_t pv : legcord::numtheory::sieve_primes(50)) {
            if (pv == 2) {
                continue;
            }
            const bool in_set = next < members.size() && members[next] == pv;
            CHECK(in_set == legcord::cordial::is_cordial_direct(n, OddPrime(pv)).cordial);
            if (in_set) {
                ++next;
            }
        }
        CHECK(next == members.size());
    }
}

TEST_CASE("3 is in the J-set of K_3, and q*p orders are otherwise excluded") {
    for (const std::int64_t m : {3, 10, 100}) {
        const std::vector<std::int64_t> members = j_set(3, m);
        CHECK(std::find(members.begin(), members.end(), 3) != members.end());
    }
    for (const std::int64_t pv : legcord::numtheory::sieve_primes(100)) {
        if (pv == 2) {
            continue;
        }
        for (std::int64_t q = 1; q * pv <= 100; ++q) {
            if (q == 1 && pv == 3) {
                continue;
            }
            const std::vector<std::int64_t> members = j_set(static_cast<int>(q * pv), pv);
            CHECK(std::find(members.begin(), members.end(), pv) == members.end());
        }
    }
}

TEST_CASE("sweep populates the full grid in (m, n) order") {
    const SurveyTable single = sweep(2, 2, {10});
    REQUIRE(single.cells.size() == 1);
    CHECK(single.cells[0].n == 2);
    CHECK(single.cells[0].m == 10);
    CHECK(single.cells[0].j == 3);
    CHECK_FALSE(single.cells[0].j_set.has_value());

    const SurveyTable grid = sweep(2, 3, {100, 10, 10});
    CHECK(grid.m_values == std::vector<std::int64_t>{10, 100});
    REQUIRE(grid.cells.size() == 4);
    CHECK(grid.cells[0].n == 2);
    CHECK(grid.cells[0].m == 10);
    CHECK(grid.cells[1].n == 3);
    CHECK(grid.cells[1].m == 10);
    CHECK(grid.cells[2].n == 2);
    CHECK(grid.cells[2].m == 100);
    CHECK(grid.cells[3].n == 3);
    CHECK(grid.cells[3].m == 100);
}

TEST_CASE("sweep cells agree with standalone j_count and j_set") {
    SweepOptions options;
    options.with_sets = true;
    const SurveyTable table = sweep(2, 12, {10, 50}, options);
    for (const SurveyCell& cell : table.cells) {
        CHECK(cell.j == j_count(cell.n, cell.m));
        REQUIRE(cell.j_set.has_value());
        CHECK(*cell.j_set == j_set(cell.n, cell.m));
        CHECK(static_cast<std::int64_t>(cell.j_set->size()) == cell.j);
    }
}

TEST_CASE("J is monotone in m") {
    const SurveyTable table = sweep(2, 30, {10, 50, 100, 200});
    for (int n = table.n_min; n <= table.n_max; ++n) {
        for (std::size_t mi = 0; mi + 1 < table.m_values.size(); ++mi) {
            CHECK(table.cell(n, table.m_values[mi]).j <= table.cell(n, table.m_values[mi + 1]).j);
        }
    }
}

TEST_CASE("sweep validates its arguments") {
    CHECK_THROWS_AS(sweep(1, 5, {10}), std::invalid_argument);
    CHECK_THROWS_AS(sweep(5, 4, {10}), std::invalid_argument);
    CHECK_THROWS_AS(sweep(2, 5, {}), std::invalid_argument);
    CHECK_THROWS_AS(sweep(2, 5, {10}).cell(6, 10), std::out_of_range);
    CHECK_THROWS_AS(sweep(2, 5, {10}).cell(2, 11), std::out_of_range);
}

TEST_CASE("emit_csv golden outputs and round trip") {
    const SurveyTable single = sweep(2, 2, {10});
    CHECK(emit_csv(single) == "n,m,J\n2,10,3\n");

    CHECK(emit_csv(SurveyTable{}) == "n,m,J\n");

    const SurveyTable grid = sweep(2, 3, {10, 100});
    const std::string csv = emit_csv(grid);
    const std::vector<SurveyCell> parsed = parse_csv(csv);
    REQUIRE(parsed.size() == grid.cells.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].n == grid.cells[i].n);
        CHECK(parsed[i].m == grid.cells[i].m);
        CHECK(parsed[i].j == grid.cells[i].j);
    }
}

TEST_CASE("emit_svg_lineplot structure") {
    const SurveyTable grid = sweep(2, 11, {10, 100});
    const std::string svg = emit_svg_lineplot(grid);
    CHECK(svg.starts_with("<svg "));
    CHECK(svg.ends_with("</svg>\n"));
    CHECK(count_occurrences(svg, "<polyline ") == 2);
    // 10 points per series: each coordinate pair is one comma.
    const std::size_t first = svg.find("points=\"");
    REQUIRE(first != std::string::npos);
    const std::size_t end = svg.find('"', first + 8);
    const std::string points = svg.substr(first + 8, end - first - 8);
    CHECK(count_occurrences(points, ",") == 10);
    CHECK(svg.find("m = 10") != std::string::npos);
    CHECK(svg.find("m = 100") != std::string::npos);

    const std::string single = emit_svg_lineplot(sweep(2, 2, {10}));
    CHECK(count_occurrences(single, "<polyline ") == 1);

    // Byte-stable emission.
    CHECK(emit_svg_lineplot(grid) == svg);
}

TEST_CASE("trend_statistic on synthetic series") {
    const SurveyTable constant = table_from_j_values({5, 5, 5, 5, 5, 5}, 10);
    const TrendStatistic flat = trend_statistic(constant, 10, 3, 3);
    CHECK(flat.head_mean == flat.tail_mean);

    const SurveyTable decreasing = table_from_j_values({9, 8, 7, 6, 5, 4}, 10);
    const TrendStatistic trend = trend_statistic(decreasing, 10, 2, 2);
    CHECK(trend.head_mean == doctest::Approx(8.5));
    CHECK(trend.tail_mean == doctest::Approx(4.5));
    CHECK(trend.head_mean > trend.tail_mean);

    CHECK_THROWS_AS(trend_statistic(constant, 10, 7, 3), std::invalid_argument);
    CHECK_THROWS_AS(trend_statistic(constant, 10, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(trend_statistic(constant, 99, 3, 3), std::invalid_argument);
}
