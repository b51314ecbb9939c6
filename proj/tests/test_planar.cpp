#include <gtest/gtest.h>

#include "bbsyz/bbsyz.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bbsyz;
using fixture::tuple;

namespace {

std::vector<RhoId> extreme_ids(const OrderIdeal &o)
{
    std::vector<RhoId> out;
    for (const auto &e : extreme_arrows(o)) {
        out.push_back(e.rho);
    }
    return out;
}

// Re-expands rho = sum c_j rho_j in the c-ring.
bool rewriting_holds(const RhoTable &t, const RhoId &target, const std::map<RhoId, Poly> &combo)
{
    Poly lhs = t.poly(target);
    for (const auto &[id, c] : combo) {
        lhs -= c * t.poly(id);
    }
    return lhs.is_zero();
}

} // namespace

TEST(Planar, Exposable)
{
    EXPECT_EQ(exposable_monomials(fixture::triangle()), (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(exposable_monomials(fixture::point(2)), (std::vector<std::size_t>{1}));
    EXPECT_EQ(exposable_monomials(fixture::row2(3)), (std::vector<std::size_t>{1, 2, 3}));
    EXPECT_EQ(fixture::row2(3).nu(), 4u);
    try {
        exposable_monomials(fixture::line3());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPlanar);
    }
}

TEST(Planar, NontrivialCount)
{
    const CountCheck a = nontrivial_count_check(RhoTable(fixture::triangle()));
    EXPECT_EQ(a.count, 6u);
    EXPECT_TRUE(a.ok());
    const CountCheck b = nontrivial_count_check(RhoTable(fixture::point(2)));
    EXPECT_EQ(b.count, 1u);
    EXPECT_TRUE(b.ok());
    const CountCheck c = nontrivial_count_check(RhoTable(fixture::row2(3)));
    EXPECT_EQ(c.count, 9u);
    EXPECT_EQ(c.expected, 9u);
}

TEST(Planar, ExtremeArrowExamples)
{
    EXPECT_EQ(extreme_ids(fixture::triangle()), (std::vector<RhoId>{{1, 2, 3, 3}, {1, 2, 1, 3}, {1, 2, 1, 2}}));
    const auto tri = extreme_arrows(fixture::triangle());
    EXPECT_EQ(tri[0].arrow.displacement, MultiDegree({1, 1}));
    EXPECT_EQ(tri[1].arrow.displacement, MultiDegree({1, 2}));
    EXPECT_EQ(tri[2].arrow.displacement, MultiDegree({2, 1}));

    const auto pt = extreme_arrows(fixture::point(2));
    ASSERT_EQ(pt.size(), 1u);
    EXPECT_EQ(pt[0].arrow.tail, 1u);
    EXPECT_EQ(pt[0].arrow.head.to_string(), "x1*x2");

    const auto row = extreme_arrows(fixture::row2(3));
    ASSERT_EQ(row.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(row[i].arrow.tail, 1u);
        EXPECT_EQ(row[i].arrow.displacement, MultiDegree({int(i) + 1, 1}));
    }
}

TEST(Planar, TriangleReduction)
{
    const RhoTable t(fixture::triangle());
    const Reduction r = planar_reduce(t);
    EXPECT_EQ(r.minimal_generators, (std::vector<RhoId>{{1, 2, 2, 2}, {1, 2, 2, 3}, {1, 2, 3, 2}}));
    ASSERT_EQ(r.rewritings.size(), 3u);
    EXPECT_EQ(r.rewritings[0].first, (RhoId{1, 2, 3, 3}));
    EXPECT_EQ(r.rewritings[0].second, tuple({{{1, 2, 2, 2}, "-1"}}));
    EXPECT_EQ(r.rewritings[1].first, (RhoId{1, 2, 1, 3}));
    EXPECT_EQ(r.rewritings[1].second,
              tuple({{{1, 2, 2, 2}, "-c[2,2] + c[3,3]"}, {{1, 2, 2, 3}, "-c[3,2]"}, {{1, 2, 3, 2}, "-c[2,3]"}}));
    EXPECT_EQ(r.rewritings[2].first, (RhoId{1, 2, 1, 2}));
    EXPECT_EQ(r.rewritings[2].second,
              tuple({{{1, 2, 2, 2}, "-c[2,1] + c[3,2]"}, {{1, 2, 2, 3}, "-c[3,1]"}, {{1, 2, 3, 2}, "-c[2,2]"}}));
    for (const auto &[id, combo] : r.rewritings) {
        EXPECT_TRUE(rewriting_holds(t, id, combo));
    }
    EXPECT_EQ(r.steps[0].pivot, 1);
    EXPECT_EQ(r.steps[1].pivot, 2);
    EXPECT_EQ(r.steps[2].pivot, 1);
}

TEST(Planar, SinglePointReduction)
{
    const Reduction r = planar_reduce(RhoTable(fixture::point(2)));
    EXPECT_TRUE(r.minimal_generators.empty());
    ASSERT_EQ(r.rewritings.size(), 1u);
    EXPECT_EQ(r.rewritings[0].first, (RhoId{1, 2, 1, 1}));
    EXPECT_TRUE(r.rewritings[0].second.empty());
    EXPECT_EQ(format_syzygy(r.steps[0].syzygy), "rho[1,2;1,1] = 0");
}

TEST(Planar, RowReduction)
{
    const RhoTable t(fixture::row2(3));
    const Reduction r = planar_reduce(t);
    EXPECT_EQ(r.minimal_generators.size(), 6u);
    ASSERT_EQ(r.rewritings.size(), 3u);
    for (const auto &[id, combo] : r.rewritings) {
        EXPECT_TRUE(rewriting_holds(t, id, combo)) << id.to_string();
    }
}

TEST(Planar, NonPlanarInputsAreRejected)
{
    const RhoTable t(fixture::line3());
    for (auto f : {+[](const RhoTable &x) { planar_reduce(x); }, +[](const RhoTable &x) { nontrivial_count_check(x); },
                   +[](const RhoTable &x) { extreme_arrows(x.order_ideal()); }}) {
        try {
            f(t);
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::NotPlanar);
        }
    }
}

TEST(Planar, EveryStaircaseUpToSix)
{
    const auto ideals = enumerate_order_ideals(2, 6);
    ASSERT_EQ(ideals.size(), 29u);
    for (const OrderIdeal &o : ideals) {
        const RhoTable t(o);
        const auto terms = oracle::terms_of(o);
        const std::size_t mu = o.mu(), nu = o.nu();

        const auto exp = exposable_monomials(o);
        EXPECT_EQ(exp, oracle::exposable(terms));
        EXPECT_EQ(exp.size(), nu - 1);
        EXPECT_EQ(t.omega(), (nu - 1) * mu);

        const auto ext = extreme_arrows(o);
        EXPECT_EQ(ext.size(), mu);
        std::set<std::pair<oracle::Exps, oracle::Exps>> got;
        std::set<RhoId> ids;
        for (std::size_t i = 0; i < ext.size(); ++i) {
            got.insert({o.term(ext[i].arrow.tail).exponents(), ext[i].arrow.head.exponents()});
            ids.insert(ext[i].rho);
            EXPECT_FALSE(t.is_trivially_zero(ext[i].rho));
            for (std::size_t j = 0; j < ext.size(); ++j) {
                EXPECT_EQ(extreme_precedes(ext[i], ext[j]), i < j);
            }
        }
        EXPECT_EQ(got, oracle::extreme_arrows(terms));
        EXPECT_EQ(ids.size(), mu);
        EXPECT_EQ(spinal_multidegrees(o).size(), mu);

        const Reduction r = planar_reduce(t);
        EXPECT_EQ(r.minimal_generators.size(), (nu - 2) * mu);
        const std::set<RhoId> minimal(r.minimal_generators.begin(), r.minimal_generators.end());
        for (const auto &[id, combo] : r.rewritings) {
            EXPECT_TRUE(rewriting_holds(t, id, combo)) << id.to_string();
            for (const auto &[used, c] : combo) {
                EXPECT_TRUE(minimal.count(used)) << used.to_string();
            }
        }
        // The syzygy used for an extreme never involves the extremes after it.
        for (std::size_t i = 0; i < r.steps.size(); ++i) {
            for (std::size_t j = i + 1; j < ext.size(); ++j) {
                EXPECT_TRUE(r.steps[i].syzygy.coefficient(ext[j].rho).is_zero());
            }
        }
    }
}

TEST(Planar, NoJacobiSyzygies)
{
    for (const OrderIdeal &o : enumerate_order_ideals(2, 3)) {
        EXPECT_THROW(jacobi_syzygy(o, 1, 2, 3, 1, 1), Error);
    }
}
