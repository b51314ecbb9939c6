#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bbsyz/error.hpp"
#include "bbsyz/genmat.hpp"
#include "bbsyz/order_ideal.hpp"
#include "bbsyz/syzygy.hpp"
#include "bbsyz/trace.hpp"

namespace bbsyz {

namespace detail {

inline void require_planar(const OrderIdeal &o)
{
    if (o.dimension() != 2) {
        throw Error(ErrorCode::NotPlanar, "needs n = 2, got n = " + std::to_string(o.dimension()));
    }
}

} // namespace detail

/// Indices q with x1 t_q or x2 t_q outside O. There are always nu - 1 of them.
inline std::vector<std::size_t> exposable_monomials(const OrderIdeal &o)
{
    detail::require_planar(o);
    std::vector<std::size_t> out;
    for (std::size_t q = 1; q <= o.mu(); ++q) {
        if (o.tau(1, q) == 0 || o.tau(2, q) == 0) {
            out.push_back(q);
        }
    }
    if (out.size() + 1 != o.nu()) {
        throw Error(ErrorCode::InvariantViolation, std::to_string(out.size()) + " exposable monomials, nu = " +
                                                       std::to_string(o.nu()));
    }
    return out;
}

struct CountCheck {
    std::size_t count = 0;
    std::size_t expected = 0;
    bool ok() const noexcept { return count == expected; }
};

/// Number of generators that are not trivially zero against (nu - 1) mu.
inline CountCheck nontrivial_count_check(const RhoTable &table)
{
    const OrderIdeal &o = table.order_ideal();
    detail::require_planar(o);
    return CountCheck{table.omega(), (o.nu() - 1) * o.mu()};
}

/// Arrow from x2^u on the left edge to x1 x2 t_q, where x2 t_q leaves O.
struct ExtremeArrow {
    Arrow arrow;
    std::size_t source_height = 0; // u
    std::size_t head_x1deg = 0;
    std::size_t q = 0;
    RhoId rho;
};

// a < b: higher source first, then smaller head x1-degree.
inline bool extreme_precedes(const ExtremeArrow &a, const ExtremeArrow &b)
{
    if (a.source_height != b.source_height) {
        return a.source_height > b.source_height;
    }
    return a.head_x1deg < b.head_x1deg;
}

/// The mu extreme arrows sorted ascending.
inline std::vector<ExtremeArrow> extreme_arrows(const OrderIdeal &o)
{
    detail::require_planar(o);
    std::vector<ExtremeArrow> out;
    for (std::size_t q = 1; q <= o.mu(); ++q) {
        if (o.tau(2, q) != 0) {
            continue;
        }
        const Monomial head = o.term(q).times(1).times(2);
        const int height = o.term(q).exponents()[1];
        for (int u = 0; u <= height; ++u) {
            const std::size_t p = o.term_index(Monomial({0, u}));
            ExtremeArrow e;
            e.arrow = make_arrow(o, p, head);
            e.source_height = static_cast<std::size_t>(u);
            e.head_x1deg = static_cast<std::size_t>(head.exponents()[0]);
            e.q = q;
            e.rho = RhoId{1, 2, p, q};
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end(), extreme_precedes);
    if (out.size() != o.mu()) {
        throw Error(ErrorCode::InvariantViolation,
                    std::to_string(out.size()) + " extreme arrows, mu = " + std::to_string(o.mu()));
    }
    return out;
}

struct ReductionStep {
    RhoId extreme;
    OrderedProduct product;
    Integer pivot;
    Syzygy syzygy;
};

struct Reduction {
    std::vector<RhoId> minimal_generators;
    // extreme rho -> combination of minimal generators, in the order they were resolved
    std::vector<std::pair<RhoId, std::map<RhoId, Poly>>> rewritings;
    std::vector<ReductionStep> steps;
};

/// Expresses every extreme rho through the generators that are neither trivially
/// zero nor extreme, walking the extremes in ascending order and using
/// T_{<1^{d1},2^{d2}>,1} for each.
inline Reduction planar_reduce(const RhoTable &table)
{
    const OrderIdeal &o = table.order_ideal();
    detail::require_planar(o);
    const std::vector<ExtremeArrow> extremes = extreme_arrows(o);
    std::set<RhoId> extreme_ids;
    for (const auto &e : extremes) {
        if (table.is_trivially_zero(e.rho) || !extreme_ids.insert(e.rho).second) {
            throw Error(ErrorCode::InvariantViolation, e.rho.to_string() + " cannot serve as an extreme generator");
        }
    }
    Reduction red;
    std::map<RhoId, std::map<RhoId, Poly>> resolved;
    for (std::size_t idx = 0; idx < extremes.size(); ++idx) {
        const ExtremeArrow &e = extremes[idx];
        const MultiDegree &d = e.arrow.displacement;
        if (d[2] == 0) {
            throw Error(ErrorCode::ZeroPivot, e.rho.to_string() + " has displacement " + d.to_string());
        }
        const OrderedProduct pi = canonical_product(d);
        Syzygy t = trace_syzygy(table, pi, 1);
        for (std::size_t later = idx + 1; later < extremes.size(); ++later) {
            const Poly &c = t.coefficient(extremes[later].rho);
            if (!c.is_zero()) {
                throw Error(ErrorCode::LemmaViolation, t.origin.to_string() + " gives " +
                                                           extremes[later].rho.to_string() + " the coefficient " +
                                                           c.to_string());
            }
        }
        const Poly &kappa = t.coefficient(e.rho);
        if (kappa != Poly(d[2])) {
            throw Error(ErrorCode::LemmaViolation, t.origin.to_string() + " gives " + e.rho.to_string() +
                                                       " the coefficient " + kappa.to_string() + ", expected " +
                                                       std::to_string(d[2]));
        }
        std::map<RhoId, Poly> rhs;
        const Coefficient scale = Coefficient(-1) / Coefficient(d[2]);
        for (const auto &[id, c] : t.coeffs) {
            if (id != e.rho) {
                rhs.emplace(id, scale * c);
            }
        }
        for (const auto &[done, combo] : resolved) {
            rhs = apply_rewriting(std::move(rhs), done, combo);
        }
        for (const auto &[id, c] : rhs) {
            if (extreme_ids.count(id) != 0) {
                throw Error(ErrorCode::InvariantViolation,
                            "rewriting of " + e.rho.to_string() + " still uses " + id.to_string());
            }
        }
        Poly check = table.poly(e.rho);
        for (const auto &[id, c] : rhs) {
            check -= c * table.poly(id);
        }
        if (!check.is_zero()) {
            throw Error(ErrorCode::VerificationFailed,
                        "rewriting of " + e.rho.to_string() + " leaves " + check.to_string());
        }
        resolved.emplace(e.rho, rhs);
        red.rewritings.emplace_back(e.rho, std::move(rhs));
        red.steps.push_back(ReductionStep{e.rho, pi, Integer(d[2]), std::move(t)});
    }
    for (const RhoId &id : table.nontrivial()) {
        if (extreme_ids.count(id) == 0) {
            red.minimal_generators.push_back(id);
        }
    }
    if (red.minimal_generators.size() + 2 * o.mu() != o.nu() * o.mu()) {
        throw Error(ErrorCode::InvariantViolation, std::to_string(red.minimal_generators.size()) +
                                                       " minimal generators, expected (nu - 2) mu = " +
                                                       std::to_string((o.nu() - 2) * o.mu()));
    }
    return red;
}

} // namespace bbsyz
