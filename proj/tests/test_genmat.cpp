#include <random>

#include <gtest/gtest.h>

#include "bbsyz/bbsyz.hpp"
#include "oracles.hpp"

using namespace bbsyz;

namespace {

OrderIdeal line3() { return make_order_ideal(3, {{0, 0, 0}, {1, 0, 0}}); }
OrderIdeal triangle() { return make_order_ideal(2, {{0, 0}, {1, 0}, {0, 1}}); }
OrderIdeal point(std::size_t n) { return make_order_ideal(n, {Monomial::one(n)}); }

OrderIdeal six_point()
{
    return make_order_ideal(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}},
                            std::vector<Monomial>{{2, 0, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}, {2, 1, 0},
                                                  {1, 2, 0}, {1, 1, 1}, {2, 0, 1}, {1, 0, 2}});
}

PolyMatrix grid(const std::vector<std::vector<std::string>> &rows)
{
    PolyMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t s = 0; s < rows.size(); ++s) {
            m(r + 1, s + 1) = parse_poly(rows[r][s]);
        }
    }
    return m;
}

} // namespace

TEST(MultMatrix, LineInThreeSpace)
{
    const OrderIdeal o = line3();
    EXPECT_EQ(mult_matrix(o, 1), grid({{"0", "c[1,3]"}, {"1", "c[2,3]"}}));
    EXPECT_EQ(mult_matrix(o, 2), grid({{"c[1,1]", "c[1,4]"}, {"c[2,1]", "c[2,4]"}}));
    EXPECT_EQ(mult_matrix(o, 3), grid({{"c[1,2]", "c[1,5]"}, {"c[2,2]", "c[2,5]"}}));
}

TEST(MultMatrix, Triangle)
{
    const OrderIdeal o = triangle();
    EXPECT_EQ(mult_matrix(o, 1), grid({{"0", "c[1,1]", "c[1,2]"}, {"1", "c[2,1]", "c[2,2]"}, {"0", "c[3,1]", "c[3,2]"}}));
    EXPECT_EQ(mult_matrix(o, 2), grid({{"0", "c[1,2]", "c[1,3]"}, {"0", "c[2,2]", "c[2,3]"}, {"1", "c[3,2]", "c[3,3]"}}));
}

TEST(MultMatrix, SinglePoint)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            const PolyMatrix a = mult_matrix(point(n), k);
            ASSERT_EQ(a.size(), 1u);
            EXPECT_EQ(a(1, 1), Poly::c(1, k));
        }
    }
}

TEST(MultMatrix, MatchesOracleOnEveryIdeal)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const OrderIdeal &o : enumerate_order_ideals(n, n == 3 ? 5 : 6)) {
            const auto terms = oracle::terms_of(o);
            const auto bord = oracle::border(n, terms);
            for (std::size_t k = 1; k <= n; ++k) {
                EXPECT_EQ(oracle::to_grid(mult_matrix(o, k)), oracle::mult_matrix(terms, bord, k));
            }
        }
    }
}

TEST(Commutator, LineInThreeSpace)
{
    const RhoTable t(line3());
    EXPECT_EQ(t.commutator_of(1, 2), grid({{"c[1,3]*c[2,1] - c[1,4]", "-c[1,1]*c[1,3] + c[2,4]*c[1,3] - c[1,4]*c[2,3]"},
                                           {"c[1,1] + c[2,1]*c[2,3] - c[2,4]", "c[1,4] - c[1,3]*c[2,1]"}}));
    EXPECT_EQ(t.commutator_of(1, 3), grid({{"c[1,3]*c[2,2] - c[1,5]", "-c[1,2]*c[1,3] + c[2,5]*c[1,3] - c[1,5]*c[2,3]"},
                                           {"c[1,2] + c[2,2]*c[2,3] - c[2,5]", "c[1,5] - c[1,3]*c[2,2]"}}));
    EXPECT_EQ(t.commutator_of(2, 3),
              grid({{"c[1,4]*c[2,2] - c[1,5]*c[2,1]", "-c[1,2]*c[1,4] + c[2,5]*c[1,4] + c[1,1]*c[1,5] - c[1,5]*c[2,4]"},
                    {"c[1,2]*c[2,1] - c[2,5]*c[2,1] - c[1,1]*c[2,2] + c[2,2]*c[2,4]", "c[1,5]*c[2,1] - c[1,4]*c[2,2]"}}));
    EXPECT_EQ(t.commutator_of(3, 2), -t.commutator_of(2, 3));
    EXPECT_EQ(t.omega(), 12u);
    EXPECT_EQ(t.poly({1, 2, 1, 1}).to_string(), "c[1,3]*c[2,1] - c[1,4]");
}

TEST(Commutator, Triangle)
{
    const RhoTable t(triangle());
    EXPECT_EQ(t.commutator_of(1, 2),
              grid({{"0", "-c[1,2]*c[2,1] + c[1,1]*c[2,2] - c[1,3]*c[3,1] + c[1,2]*c[3,2]",
                     "-c[1,2]*c[2,2] + c[1,1]*c[2,3] - c[1,3]*c[3,2] + c[1,2]*c[3,3]"},
                    {"0", "c[1,2] - c[2,3]*c[3,1] + c[2,2]*c[3,2]",
                     "-c[2,2]^2 + c[3,3]*c[2,2] + c[1,3] + c[2,1]*c[2,3] - c[2,3]*c[3,2]"},
                    {"0", "c[3,2]^2 - c[2,1]*c[3,2] - c[1,1] + c[2,2]*c[3,1] - c[3,1]*c[3,3]",
                     "-c[1,2] + c[2,3]*c[3,1] - c[2,2]*c[3,2]"}}));
    EXPECT_EQ(t.omega(), 6u);
    std::vector<RhoId> expected;
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 2; j <= 3; ++j) {
            expected.push_back({1, 2, i, j});
        }
    }
    EXPECT_EQ(t.nontrivial(), expected);
    EXPECT_TRUE(trace(t.commutator_of(1, 2)).is_zero());
}

TEST(Commutator, SinglePointIsZero)
{
    for (std::size_t n = 2; n <= 4; ++n) {
        const RhoTable t(point(n));
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t l = 1; l <= n; ++l) {
                EXPECT_EQ(t.commutator_of(k, l), PolyMatrix(1));
            }
        }
        EXPECT_EQ(t.omega(), n * (n - 1) / 2);
    }
    const RhoTable t2(point(2));
    EXPECT_EQ(t2.nontrivial(), (std::vector<RhoId>{{1, 2, 1, 1}}));
    EXPECT_EQ(t2.entry({1, 2, 1, 1}).case_class.number, 4);
}

TEST(Commutator, MatchesFullMatrixProductsOnEveryIdeal)
{
    for (std::size_t n = 2; n <= 3; ++n) {
        for (const OrderIdeal &o : enumerate_order_ideals(n, n == 3 ? 5 : 6)) {
            const RhoTable t(o);
            const auto terms = oracle::terms_of(o);
            const auto bord = oracle::border(n, terms);
            for (std::size_t k = 1; k <= n; ++k) {
                for (std::size_t l = k + 1; l <= n; ++l) {
                    const auto a = oracle::mult_matrix(terms, bord, k);
                    const auto b = oracle::mult_matrix(terms, bord, l);
                    EXPECT_EQ(oracle::to_grid(t.commutator_of(k, l)), oracle::sub(oracle::mul(a, b), oracle::mul(b, a)));
                }
            }
        }
    }
}

TEST(ClassifyCase, Examples)
{
    EXPECT_EQ(classify_case(triangle(), 1, 2, 1).number, 2);
    const CaseClass c = classify_case(line3(), 1, 2, 1);
    EXPECT_EQ(c.number, 3);
    EXPECT_FALSE(c.mirrored);
    const OrderIdeal full = make_order_ideal(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    EXPECT_EQ(classify_case(full, 1, 2, 1).number, 1);
    const CaseClass m = classify_case(make_order_ideal(2, {{0, 0}, {0, 1}}), 1, 2, 1);
    EXPECT_EQ(m.number, 3);
    EXPECT_TRUE(m.mirrored);
    EXPECT_EQ(classify_case(point(2), 1, 2, 1).number, 4);
    EXPECT_THROW(classify_case(triangle(), 2, 1, 1), Error);
}

TEST(ClosedForm, Examples)
{
    EXPECT_EQ(rho_closed_form(line3(), {1, 2, 1, 1}), parse_poly("c[1,3]*c[2,1] - c[1,4]"));
    EXPECT_EQ(rho_closed_form(line3(), {1, 2, 2, 1}), parse_poly("c[1,1] + c[2,1]*c[2,3] - c[2,4]"));
    const OrderIdeal o = six_point();
    const Poly expected = parse_poly("c[4,3] + c[2,3]*c[6,1] + c[5,3]*c[6,5] - c[6,7] + c[6,3]*c[6,8]");
    EXPECT_EQ(rho_closed_form(o, {1, 3, 6, 3}), expected);
    EXPECT_EQ(rho_closed_form(o, {1, 2, 6, 4}), expected);
    EXPECT_EQ(rho_closed_form(o, {1, 3, 1, 3}), parse_poly("-c[1,7] + c[1,1]*c[2,3] + c[1,5]*c[5,3] + c[1,8]*c[6,3]"));
    try {
        rho_closed_form(triangle(), {1, 2, 1, 1});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::TriviallyZeroCase);
    }
}

TEST(RhoTable, MirroredCaseThreeAgreesWithCommutator)
{
    const RhoTable t(make_order_ideal(2, {{0, 0}, {0, 1}, {0, 2}}));
    bool seen = false;
    for (const RhoEntry &e : t.entries()) {
        if (e.case_class.number == 3 && e.case_class.mirrored) {
            seen = true;
            EXPECT_EQ(rho_closed_form(t.order_ideal(), e.id), e.poly);
        }
    }
    EXPECT_TRUE(seen);
}

TEST(RhoTable, EntryMetadata)
{
    for (std::size_t n = 2; n <= 3; ++n) {
        for (const OrderIdeal &o : enumerate_order_ideals(n, 4)) {
            const RhoTable t(o);
            std::size_t nontrivial = 0;
            for (const RhoEntry &e : t.entries()) {
                EXPECT_EQ(e.trivially_zero, e.case_class.number <= 2);
                if (e.trivially_zero) {
                    EXPECT_TRUE(e.poly.is_zero());
                } else {
                    ++nontrivial;
                }
                EXPECT_EQ(o.term(e.arrow.tail), o.term(e.id.p));
                EXPECT_EQ(e.arrow.head, o.term(e.id.q).times(e.id.k).times(e.id.l));
                EXPECT_EQ(e.multidegree, e.arrow.displacement);
            }
            EXPECT_EQ(nontrivial, t.omega());
            EXPECT_TRUE(std::is_sorted(t.nontrivial().begin(), t.nontrivial().end()));
        }
    }
}

TEST(RhoTable, BadLookupsThrow)
{
    const RhoTable t(triangle());
    EXPECT_THROW(t.poly({2, 1, 1, 1}), Error);
    EXPECT_THROW(t.poly({1, 2, 4, 1}), Error);
    EXPECT_THROW(t.matrix(3), Error);
}
