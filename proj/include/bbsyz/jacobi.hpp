#pragma once

#include <cstddef>
#include <string>

#include "bbsyz/error.hpp"
#include "bbsyz/genmat.hpp"
#include "bbsyz/syzygy.hpp"

namespace bbsyz {

namespace detail {

inline void check_triple(const OrderIdeal &o, std::size_t k, std::size_t l, std::size_t m)
{
    if (o.dimension() < 3) {
        throw Error(ErrorCode::NeedThreeVariables,
                    "Jacobi syzygies need n >= 3, got n = " + std::to_string(o.dimension()));
    }
    if (!(1 <= k && k < l && l < m && m <= o.dimension())) {
        throw Error(ErrorCode::IndexOutOfRange, "need 1 <= k < l < m <= " + std::to_string(o.dimension()) + ", got " +
                                                    std::to_string(k) + "," + std::to_string(l) + "," +
                                                    std::to_string(m));
    }
}

// (p,q) entry of [A, R^{ab}] with R^{ab} the grid of R-variables.
inline Poly commutator_with_grid(const PolyMatrix &a, std::size_t ka, std::size_t kb, std::size_t p, std::size_t q)
{
    Poly out;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        if (!a(p, i).is_zero()) {
            out += a(p, i) * Poly::r(ka, kb, i, q);
        }
        if (!a(i, q).is_zero()) {
            out -= Poly::r(ka, kb, p, i) * a(i, q);
        }
    }
    return out;
}

} // namespace detail

/// J^{klm}_{pq}: entry (p,q) of [A_k, R^{lm}] - [A_l, R^{km}] + [A_m, R^{kl}].
inline Syzygy jacobi_syzygy(const RhoTable &table, std::size_t k, std::size_t l, std::size_t m, std::size_t p,
                            std::size_t q)
{
    const OrderIdeal &o = table.order_ideal();
    detail::check_triple(o, k, l, m);
    if (p == 0 || q == 0 || p > o.mu() || q > o.mu()) {
        throw Error(ErrorCode::IndexOutOfRange, "position (" + std::to_string(p) + "," + std::to_string(q) +
                                                    ") outside 1.." + std::to_string(o.mu()));
    }
    Poly expr = detail::commutator_with_grid(table.matrix(k), l, m, p, q);
    expr -= detail::commutator_with_grid(table.matrix(l), k, m, p, q);
    expr += detail::commutator_with_grid(table.matrix(m), k, l, p, q);
    SyzygyOrigin origin;
    origin.family = SyzygyOrigin::Family::Jacobi;
    origin.jacobi = {k, l, m, p, q};
    return syzygy_from_expression(table, expr, std::move(origin));
}

inline Syzygy jacobi_syzygy(const OrderIdeal &o, std::size_t k, std::size_t l, std::size_t m, std::size_t p,
                            std::size_t q)
{
    detail::check_triple(o, k, l, m);
    return jacobi_syzygy(RhoTable(o), k, l, m, p, q);
}

/// Shape of J^{klm}_{pq} predicted from membership of the pairwise products
/// x_a x_b t_q in O, uniformly in p.
struct DegenerateForm {
    enum class Kind { Zero, TwoTermEquality, General };
    Kind kind = Kind::General;
    // For TwoTermEquality: rho^{first}_{p, first_column} = sign * rho^{second}_{p, second_column}.
    std::size_t first_k = 0, first_l = 0, first_column = 0;
    std::size_t second_k = 0, second_l = 0, second_column = 0;
    int sign = 1;

    RhoId first(std::size_t p) const { return RhoId{first_k, first_l, p, first_column}; }
    RhoId second(std::size_t p) const { return RhoId{second_k, second_l, p, second_column}; }

    // The relation rho_first - sign * rho_second = 0 as a syzygy.
    Syzygy relation(std::size_t p) const
    {
        Syzygy s;
        s.add(first(p), Poly(1));
        s.add(second(p), Poly(-sign));
        return s;
    }

    std::string to_string() const
    {
        switch (kind) {
        case Kind::Zero:
            return "zero";
        case Kind::General:
            return "general";
        case Kind::TwoTermEquality:
            break;
        }
        const auto side = [](std::size_t a, std::size_t b, std::size_t c) {
            return "rho[" + std::to_string(a) + "," + std::to_string(b) + ";p," + std::to_string(c) + "]";
        };
        return side(first_k, first_l, first_column) + (sign > 0 ? " = " : " = -") +
               side(second_k, second_l, second_column);
    }
};

inline DegenerateForm jacobi_degenerate_form(const OrderIdeal &o, std::size_t k, std::size_t l, std::size_t m,
                                             std::size_t q)
{
    detail::check_triple(o, k, l, m);
    const Monomial &t = o.term(q);
    const bool kl = o.contains(t.times(k).times(l));
    const bool km = o.contains(t.times(k).times(m));
    const bool lm = o.contains(t.times(l).times(m));
    DegenerateForm f;
    if (kl && km && lm) {
        f.kind = DegenerateForm::Kind::Zero;
        return f;
    }
    const int outside = int(!kl) + int(!km) + int(!lm);
    if (outside != 1) {
        return f;
    }
    // With two of the products in O, x_k t_q, x_l t_q, x_m t_q all lie in O.
    f.kind = DegenerateForm::Kind::TwoTermEquality;
    if (!lm) {
        f.first_k = k, f.first_l = l, f.first_column = o.tau(m, q);
        f.second_k = k, f.second_l = m, f.second_column = o.tau(l, q);
        f.sign = 1;
    } else if (!km) {
        f.first_k = l, f.first_l = m, f.first_column = o.tau(k, q);
        f.second_k = k, f.second_l = l, f.second_column = o.tau(m, q);
        f.sign = -1;
    } else {
        f.first_k = l, f.first_l = m, f.first_column = o.tau(k, q);
        f.second_k = k, f.second_l = m, f.second_column = o.tau(l, q);
        f.sign = 1;
    }
    return f;
}

} // namespace bbsyz
