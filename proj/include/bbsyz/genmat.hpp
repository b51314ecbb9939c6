#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bbsyz/error.hpp"
#include "bbsyz/grading.hpp"
#include "bbsyz/matrix.hpp"
#include "bbsyz/order_ideal.hpp"
#include "bbsyz/poly.hpp"

namespace bbsyz {

using PolyMatrix = SquareMatrix<Poly>;

/// Generic multiplication matrix A_k: column s holds the coordinates of x_k t_s,
/// i.e. e_{tau_k(s)} when x_k t_s stays in O and (c[1,j], ..., c[mu,j]) when
/// x_k t_s = b_j.
inline PolyMatrix mult_matrix(const OrderIdeal &o, std::size_t k)
{
    const std::size_t mu = o.mu();
    PolyMatrix a(mu);
    for (std::size_t s = 1; s <= mu; ++s) {
        if (const std::size_t r = o.tau(k, s); r != 0) {
            a(r, s) = Poly(1);
        } else {
            const std::size_t j = o.sigma(k, s);
            for (std::size_t r2 = 1; r2 <= mu; ++r2) {
                a(r2, s) = Poly::c(r2, j);
            }
        }
    }
    return a;
}

// Identifies rho^{kl}_{pq}, the (p,q) entry of [A_k, A_l], k < l.
struct RhoId {
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t p = 0;
    std::size_t q = 0;

    friend auto operator<=>(const RhoId &, const RhoId &) = default;

    Variable variable() const { return Variable::r(k, l, p, q); }
    static RhoId from_variable(Variable v) { return RhoId{v.k(), v.l(), v.p(), v.q()}; }

    std::string to_string() const
    {
        return "rho[" + std::to_string(k) + "," + std::to_string(l) + ";" + std::to_string(p) + "," +
               std::to_string(q) + "]";
    }
};

/// Which of the four shapes rho^{kl}_{pq} falls into; depends on (k, l, q) only.
/// Case 1/2: x_k t_q and x_l t_q both in O (x_k x_l t_q in O, resp. in the border).
/// Case 3: exactly one of them in O. `mirrored` marks x_l t_q in O, x_k t_q outside.
/// Case 4: neither in O.
struct CaseClass {
    int number = 0;
    bool mirrored = false;
    bool trivially_zero() const noexcept { return number == 1 || number == 2; }
};

inline CaseClass classify_case(const OrderIdeal &o, std::size_t k, std::size_t l, std::size_t q)
{
    if (!(k < l) || l > o.dimension()) {
        throw Error(ErrorCode::IndexOutOfRange, "classify_case needs 1 <= k < l <= n");
    }
    const std::size_t rk = o.tau(k, q);
    const std::size_t rl = o.tau(l, q);
    if (rk != 0 && rl != 0) {
        const Monomial m = o.term(q).times(k).times(l);
        if (o.contains(m)) {
            return CaseClass{1, false};
        }
        if (o.border_index(m) != 0) {
            return CaseClass{2, false};
        }
        throw Error(ErrorCode::InvariantViolation, m.to_string() + " is neither in the order ideal nor its border");
    }
    if (rk != 0) {
        return CaseClass{3, false};
    }
    if (rl != 0) {
        return CaseClass{3, true};
    }
    if (o.sigma(k, q) == 0 || o.sigma(l, q) == 0) {
        throw Error(ErrorCode::InvariantViolation, "step maps disagree at term " + std::to_string(q));
    }
    return CaseClass{4, false};
}

namespace detail {

// c[i,j] with the convention c[0,j] = c[i,0] = 0.
inline Poly c_or_zero(std::size_t i, std::size_t j) { return (i == 0 || j == 0) ? Poly{} : Poly::c(i, j); }

// c[tau'_k(p), j] + sum_i c[p, sigma_k(i)] * c[i, j]: the (p, *) coordinate of
// x_k applied to the border polynomial column j.
inline Poly shifted_column(const OrderIdeal &o, std::size_t k, std::size_t p, std::size_t j)
{
    Poly out = c_or_zero(o.tau_inv(k, p), j);
    for (std::size_t i = 1; i <= o.mu(); ++i) {
        if (const std::size_t s = o.sigma(k, i); s != 0) {
            out += Poly::c(p, s) * Poly::c(i, j);
        }
    }
    return out;
}

// One-step-out shape: x_a t_q in O, x_b t_q = b_{j1}; returns the (p,q) entry of [A_a, A_b].
inline Poly one_step_out(const OrderIdeal &o, std::size_t a, std::size_t b, std::size_t p, std::size_t q)
{
    const std::size_t j1 = o.sigma(b, q);
    const std::size_t j2 = o.sigma(b, o.tau(a, q));
    return shifted_column(o, a, p, j1) - c_or_zero(p, j2);
}

} // namespace detail

/// Closed form of a generator that is not trivially zero.
inline Poly rho_closed_form(const OrderIdeal &o, const RhoId &id)
{
    if (id.p == 0 || id.p > o.mu()) {
        throw Error(ErrorCode::IndexOutOfRange, "row index " + std::to_string(id.p) + " outside 1.." +
                                                    std::to_string(o.mu()));
    }
    const CaseClass cc = classify_case(o, id.k, id.l, id.q);
    switch (cc.number) {
    case 3:
        return cc.mirrored ? -detail::one_step_out(o, id.l, id.k, id.p, id.q)
                           : detail::one_step_out(o, id.k, id.l, id.p, id.q);
    case 4:
        return detail::shifted_column(o, id.k, id.p, o.sigma(id.l, id.q)) -
               detail::shifted_column(o, id.l, id.p, o.sigma(id.k, id.q));
    default:
        throw Error(ErrorCode::TriviallyZeroCase, id.to_string() + " is in case " + std::to_string(cc.number));
    }
}

struct RhoEntry {
    RhoId id;
    Poly poly;
    CaseClass case_class;
    bool trivially_zero = false;
    MultiDegree multidegree;
    Arrow arrow;
};

/// The multiplication matrices of an order ideal together with every generator
/// rho^{kl}_{pq}. Each polynomial is read off the commutator and checked against
/// its closed form. The non-trivially-zero generators, in ascending (k,l,p,q)
/// order, form the list rho_1..rho_omega that syzygy tuples refer to.
class RhoTable
{
public:
    explicit RhoTable(OrderIdeal o) : m_grading(o), m_order(std::move(o))
    {
        const std::size_t n = m_order.dimension();
        const std::size_t mu = m_order.mu();
        for (std::size_t k = 1; k <= n; ++k) {
            m_matrices.push_back(mult_matrix(m_order, k));
        }
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t l = k + 1; l <= n; ++l) {
                const PolyMatrix comm = bbsyz::commutator(m_matrices[k - 1], m_matrices[l - 1]);
                for (std::size_t q = 1; q <= mu; ++q) {
                    const CaseClass cc = classify_case(m_order, k, l, q);
                    for (std::size_t p = 1; p <= mu; ++p) {
                        RhoEntry e;
                        e.id = RhoId{k, l, p, q};
                        e.poly = comm(p, q);
                        e.case_class = cc;
                        e.trivially_zero = cc.trivially_zero();
                        e.multidegree = m_order.term(q).multidegree().inc(k).inc(l) - m_order.term(p).multidegree();
                        e.arrow = make_arrow(m_order, p, m_order.term(q).times(k).times(l));
                        if (e.trivially_zero) {
                            if (!e.poly.is_zero()) {
                                throw Error(ErrorCode::ClosedFormMismatch,
                                            e.id.to_string() + " is trivially zero but the commutator gives " +
                                                e.poly.to_string());
                            }
                        } else {
                            const Poly closed = rho_closed_form(m_order, e.id);
                            if (closed != e.poly) {
                                throw Error(ErrorCode::ClosedFormMismatch, e.id.to_string() + ": commutator " +
                                                                               e.poly.to_string() + " vs closed form " +
                                                                               closed.to_string());
                            }
                            m_nontrivial.push_back(e.id);
                        }
                        m_entries.push_back(std::move(e));
                    }
                }
            }
        }
        // Entries were produced q-major inside each pair; restore (k,l,p,q) order.
        std::sort(m_entries.begin(), m_entries.end(), [](const RhoEntry &a, const RhoEntry &b) { return a.id < b.id; });
        std::sort(m_nontrivial.begin(), m_nontrivial.end());
        for (const auto &e : m_entries) {
            m_bindings.emplace(e.id.variable(), e.poly);
        }
    }

    const OrderIdeal &order_ideal() const noexcept { return m_order; }
    const GradingContext &grading() const noexcept { return m_grading; }
    std::size_t dimension() const noexcept { return m_order.dimension(); }
    std::size_t mu() const noexcept { return m_order.mu(); }

    const PolyMatrix &matrix(std::size_t k) const
    {
        if (k == 0 || k > m_matrices.size()) {
            throw Error(ErrorCode::IndexOutOfRange, "no multiplication matrix for variable " + std::to_string(k));
        }
        return m_matrices[k - 1];
    }

    // [A_k, A_l] assembled from the stored generators, for any k, l.
    PolyMatrix commutator_of(std::size_t k, std::size_t l) const
    {
        PolyMatrix out(mu());
        if (k == l) {
            return out;
        }
        const std::size_t a = std::min(k, l), b = std::max(k, l);
        for (std::size_t p = 1; p <= mu(); ++p) {
            for (std::size_t q = 1; q <= mu(); ++q) {
                const Poly &r = poly(RhoId{a, b, p, q});
                out(p, q) = k < l ? r : -r;
            }
        }
        return out;
    }

    const std::vector<RhoEntry> &entries() const noexcept { return m_entries; }
    // rho_1 .. rho_omega
    const std::vector<RhoId> &nontrivial() const noexcept { return m_nontrivial; }
    std::size_t omega() const noexcept { return m_nontrivial.size(); }

    const RhoEntry &entry(const RhoId &id) const { return m_entries.at(position(id)); }
    const Poly &poly(const RhoId &id) const { return entry(id).poly; }
    bool is_trivially_zero(const RhoId &id) const { return entry(id).trivially_zero; }

    // R[k,l;p,q] -> rho^{kl}_{pq} for every generator, trivial ones included.
    const std::map<Variable, Poly> &bindings() const noexcept { return m_bindings; }

private:
    std::size_t position(const RhoId &id) const
    {
        const std::size_t n = m_order.dimension();
        const std::size_t mu = m_order.mu();
        if (!(id.k >= 1 && id.k < id.l && id.l <= n && id.p >= 1 && id.p <= mu && id.q >= 1 && id.q <= mu)) {
            throw Error(ErrorCode::IndexOutOfRange, id.to_string() + " is not a generator of this order ideal");
        }
        // pairs (k,l) are enumerated lexicographically
        std::size_t pair = 0;
        for (std::size_t a = 1; a < id.k; ++a) {
            pair += n - a;
        }
        pair += id.l - id.k - 1;
        return pair * mu * mu + (id.p - 1) * mu + (id.q - 1);
    }

    GradingContext m_grading;
    OrderIdeal m_order;
    std::vector<PolyMatrix> m_matrices;
    std::vector<RhoEntry> m_entries;
    std::vector<RhoId> m_nontrivial;
    std::map<Variable, Poly> m_bindings;
};

} // namespace bbsyz
