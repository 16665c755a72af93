#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "oracle.hpp"
#include "wps/census.hpp"

using namespace wps;

namespace {

std::uint64_t projective_count(std::uint64_t q, std::size_t n) {
    std::uint64_t total = 0, term = 1;
    for (std::size_t j = 0; j <= n; ++j) {
        total += term;
        term *= q;
    }
    return total;
}

} // namespace

TEST_CASE("census sizes on pinned spaces") {
    auto f5 = make_field(5, 1);
    auto f7 = make_field(7, 1);
    auto f2 = make_field(2, 1);
    CHECK(enumerate_space(f5, Weights({1, 1})).size() == 6);
    CHECK(enumerate_space(f5, Weights({1, 1, 2, 4})).size() == 156);
    CHECK(enumerate_space(f7, Weights({2, 3})).size() == 8);
    CHECK(enumerate_space(f5, Weights({3, 2})).size() == 6);
    CHECK(enumerate_space(f2, Weights({1, 1})).size() == 3);
    CHECK(count_points(f5, Weights({1, 1, 2, 4})) == 156);
}

TEST_CASE("census size is weight independent") {
    const std::vector<std::uint32_t> qs = {2, 3, 4, 5, 7, 8, 9};
    for (std::uint32_t q : qs) {
        auto [p, k] = factor_prime_power(q);
        auto f = make_field(p, k);
        for (std::size_t n = 1; n <= 2; ++n) {
            const std::uint64_t expect = projective_count(q, n);
            std::vector<std::uint32_t> w(n + 1, 1);
            for (int trial = 0; trial < 4; ++trial) {
                CAPTURE(q);
                CAPTURE(w);
                CHECK(count_points(f, Weights(w)) == expect);
                for (std::size_t j = 0; j <= n; ++j) w[j] = 1 + (w[j] * 2 + j) % 6;
            }
        }
    }
}

TEST_CASE("census rows are sorted canonical representatives") {
    auto f5 = make_field(5, 1);
    auto census = enumerate_space(f5, Weights({1, 1, 2, 4}));
    const auto& pts = census.points();
    REQUIRE(pts.size() == 156);
    for (std::size_t r = 0; r < pts.size(); ++r) {
        const auto& P = pts[r];
        CHECK(normalize(f5, census.weights(), P.coords()).coords() == P.coords());
        if (r > 0) CHECK(pts[r - 1].coords() < P.coords());
    }
}

TEST_CASE("full point list on the F_2 projective line") {
    auto f2 = make_field(2, 1);
    auto census = enumerate_space(f2, Weights({1, 1}));
    REQUIRE(census.size() == 3);
    auto val = [](const WpsPoint& P) {
        return std::vector<std::uint32_t>{P.coords()[0].value, P.coords()[1].value};
    };
    CHECK(val(census.points()[0]) == std::vector<std::uint32_t>{0, 1});
    CHECK(val(census.points()[1]) == std::vector<std::uint32_t>{1, 0});
    CHECK(val(census.points()[2]) == std::vector<std::uint32_t>{1, 1});
    CHECK(census.chart(0) == std::vector<std::uint32_t>{2});
    CHECK(census.chart(1) == std::vector<std::uint32_t>{2});
}

TEST_CASE("chart lists mirror in_unit_chart") {
    struct Case {
        std::uint32_t p, k;
        std::vector<std::uint32_t> weights;
    };
    const std::vector<Case> cases = {
        {5, 1, {1, 1}}, {5, 1, {4, 2}}, {7, 1, {2, 3}},
        {2, 2, {2, 4}}, {5, 1, {1, 1, 2, 4}},
    };
    for (const Case& c : cases) {
        auto f = make_field(c.p, c.k);
        auto census = enumerate_space(f, Weights(c.weights));
        CAPTURE(c.weights);
        for (std::size_t i = 0; i < census.weights().size(); ++i) {
            const auto& rows = census.chart(i);
            CHECK(std::is_sorted(rows.begin(), rows.end()));
            std::size_t next = 0;
            for (std::uint32_t r = 0; r < census.size(); ++r) {
                const bool member = next < rows.size() && rows[next] == r;
                if (member) ++next;
                CHECK(in_unit_chart(census.points()[r], i) == member);
            }
            CHECK(next == rows.size());

            const auto pts = census.chart_points(i);
            REQUIRE(pts.size() == rows.size());
            for (std::size_t s = 0; s < rows.size(); ++s)
                CHECK(pts[s].coords() == census.points()[rows[s]].coords());
        }
    }
}

TEST_CASE("chart sizes on pinned spaces") {
    auto f5 = make_field(5, 1);
    auto census = enumerate_space(f5, Weights({1, 1}));
    CHECK(census.chart(0).size() == 4); // [1:0] is excluded
    CHECK(census.chart(1).size() == 4);
    CHECK_THROWS_AS(census.chart(2), std::out_of_range);

    auto big = enumerate_space(f5, Weights({1, 1, 2, 4}));
    const auto target = normalize(f5, big.weights(),
                                  {f5->zero(), f5->zero(), f5->one(), f5->element(2)});
    bool found = false;
    for (const WpsPoint& P : big.chart_points(2))
        found = found || P.coords() == target.coords();
    CHECK(found);
}

TEST_CASE("census counts match the oracle on extension fields") {
    struct Case {
        std::uint32_t p, k;
        std::vector<std::uint32_t> weights;
    };
    const std::vector<Case> cases = {
        {2, 2, {2, 4}}, {3, 2, {3, 6}}, {7, 1, {2, 3}}, {3, 1, {2, 2, 2}},
    };
    for (const Case& c : cases) {
        auto f = make_field(c.p, c.k);
        const Weights w(c.weights);
        CAPTURE(c.weights);
        CHECK(count_points(f, w) == testing::oracle_count(f, w));
        CHECK(count_points(f, w) == projective_count(f->order(), w.dimension()));
    }
}

TEST_CASE("budget guard names the offending cell") {
    auto f7 = make_field(7, 1);
    try {
        enumerate_space(f7, Weights({1, 2, 3}), 100);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        const std::string msg = e.what();
        CHECK(msg.find("F_7") != std::string::npos);
        CHECK(msg.find("(1,2,3)") != std::string::npos);
        CHECK(msg.find("100") != std::string::npos);
    }
    CHECK(count_points(f7, Weights({1, 2, 3}), 343) == 57);
}
