#include <random>

#include <gtest/gtest.h>

#include "bbsyz/bbsyz.hpp"
#include "oracles.hpp"

using namespace bbsyz;

namespace {

std::string describe(const OrderIdeal &o)
{
    std::string s = "{";
    for (const Monomial &m : o.terms()) {
        s += (s.size() > 1 ? ", " : "") + m.to_string();
    }
    return s + "}";
}

void expect_all_pass(const OrderIdeal &o, VerifyLevel level)
{
    const PropertyReport r = verify_all(RhoTable(o), PropertyConfig::for_level(level));
    for (const PropertyResult &p : r.results) {
        EXPECT_TRUE(p.passed) << describe(o) << " " << p.name << ": " << p.detail;
    }
    EXPECT_TRUE(r.all_passed());
}

} // namespace

TEST(Properties, EveryStaircase)
{
    for (const OrderIdeal &o : enumerate_order_ideals(2, 6)) {
        expect_all_pass(o, VerifyLevel::Quick);
    }
}

TEST(Properties, EveryIdealInThreeVariables)
{
    for (const OrderIdeal &o : enumerate_order_ideals(3, 4)) {
        expect_all_pass(o, VerifyLevel::Quick);
    }
}

TEST(Properties, RandomIdeals)
{
    std::mt19937 rng(20261016);
    for (int round = 0; round < 12; ++round) {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t mu = 1 + rng() % (n == 4 ? 3 : 5);
        expect_all_pass(oracle::random_order_ideal(rng, n, mu), VerifyLevel::Quick);
    }
}

TEST(Properties, SuitesReportCases)
{
    const PropertyReport r =
        verify_all(RhoTable(make_order_ideal(3, {{0, 0, 0}, {1, 0, 0}})), PropertyConfig::for_level(VerifyLevel::Quick));
    EXPECT_FALSE(r.results.empty());
    std::size_t total = 0;
    for (const PropertyResult &p : r.results) {
        total += p.cases;
    }
    EXPECT_GT(total, 0u);
}
