#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "bbsyz/order_ideal.hpp"

namespace bbsyz {

/// Every order ideal in n variables with at most max_mu elements, grown one
/// corner at a time from {1}. Output is ordered by size, then by the canonically
/// sorted exponent lists.
inline std::vector<OrderIdeal> enumerate_order_ideals(std::size_t n, std::size_t max_mu)
{
    using Shape = std::vector<std::vector<int>>; // canonically sorted exponent lists
    std::vector<OrderIdeal> out;
    if (max_mu == 0) {
        return out;
    }
    std::set<Shape> layer{Shape{std::vector<int>(n, 0)}};
    for (std::size_t size = 1; size <= max_mu && !layer.empty(); ++size) {
        std::set<Shape> next;
        for (const auto &shape : layer) {
            std::vector<Monomial> monos;
            monos.reserve(shape.size());
            for (const auto &e : shape) {
                monos.emplace_back(e);
            }
            OrderIdeal o = make_order_ideal(n, monos);
            if (size < max_mu) {
                // A border monomial can be added when all of its divisors are present.
                for (const auto &b : o.border()) {
                    bool addable = true;
                    for (std::size_t k = 1; k <= n && addable; ++k) {
                        addable = !b.divisible_by(k) || o.contains(b.divided_by(k));
                    }
                    if (!addable) {
                        continue;
                    }
                    Shape grown = shape;
                    grown.push_back(b.exponents());
                    std::sort(grown.begin(), grown.end(), canonical_less);
                    next.insert(std::move(grown));
                }
            }
            out.push_back(std::move(o));
        }
        layer = std::move(next);
    }
    return out;
}

} // namespace bbsyz
