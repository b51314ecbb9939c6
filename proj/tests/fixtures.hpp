#pragma once

// Order ideals and tuples that recur across the test binaries.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bbsyz/bbsyz.hpp"

namespace fixture {

using bbsyz::Monomial;
using bbsyz::OrderIdeal;

inline OrderIdeal point(std::size_t n) { return bbsyz::make_order_ideal(n, {Monomial::one(n)}); }
inline OrderIdeal line3() { return bbsyz::make_order_ideal(3, {{0, 0, 0}, {1, 0, 0}}); }
inline OrderIdeal triangle() { return bbsyz::make_order_ideal(2, {{0, 0}, {1, 0}, {0, 1}}); }
inline OrderIdeal corner3() { return bbsyz::make_order_ideal(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
inline OrderIdeal row2(int len)
{
    std::vector<Monomial> ms;
    for (int i = 0; i < len; ++i) {
        ms.push_back({i, 0});
    }
    return bbsyz::make_order_ideal(2, ms);
}

// {1, x1, x2, x3, x1x2, x1x3} with the border listed as in the worked example.
inline OrderIdeal six_point()
{
    return bbsyz::make_order_ideal(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}},
                                   std::vector<Monomial>{{2, 0, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}, {2, 1, 0},
                                                         {1, 2, 0}, {1, 1, 1}, {2, 0, 1}, {1, 0, 2}});
}

// All pairwise products of the variables stay inside.
inline OrderIdeal seven_point()
{
    return bbsyz::make_order_ideal(
        3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

using Tuple = std::map<bbsyz::RhoId, bbsyz::Poly>;

inline Tuple tuple(const std::vector<std::pair<bbsyz::RhoId, std::string>> &entries)
{
    Tuple out;
    for (const auto &[id, text] : entries) {
        out.emplace(id, bbsyz::parse_poly(text));
    }
    return out;
}

inline Tuple negated(Tuple t)
{
    for (auto &[id, c] : t) {
        c = -c;
    }
    return t;
}

inline Tuple scaled(Tuple t, int by)
{
    for (auto &[id, c] : t) {
        c = bbsyz::Poly(by) * c;
    }
    return t;
}

} // namespace fixture
