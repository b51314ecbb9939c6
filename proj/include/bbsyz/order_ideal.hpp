#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bbsyz/error.hpp"
#include "bbsyz/monomial.hpp"

namespace bbsyz {

/// A finite divisor-closed set of monomials O = {t_1..t_mu} together with its
/// border {b_1..b_nu} and the step maps describing multiplication by each x_k.
///
/// All indices are 1-based; index 0 is the null sentinel returned by the step
/// maps when the corresponding product leaves the relevant set.
class OrderIdeal
{
public:
    std::size_t dimension() const noexcept { return m_n; }
    std::size_t mu() const noexcept { return m_terms.size(); }
    std::size_t nu() const noexcept { return m_border.size(); }

    const std::vector<Monomial> &terms() const noexcept { return m_terms; }
    const std::vector<Monomial> &border() const noexcept { return m_border; }
    const Monomial &term(std::size_t i) const
    {
        check(i, mu(), "term");
        return m_terms[i - 1];
    }
    const Monomial &border_term(std::size_t j) const
    {
        check(j, nu(), "border");
        return m_border[j - 1];
    }

    // Index of m in O (0 if absent).
    std::size_t term_index(const Monomial &m) const
    {
        auto it = m_term_index.find(m);
        return it == m_term_index.end() ? 0 : it->second;
    }
    // Index of m in the border (0 if absent).
    std::size_t border_index(const Monomial &m) const
    {
        auto it = m_border_index.find(m);
        return it == m_border_index.end() ? 0 : it->second;
    }
    bool contains(const Monomial &m) const { return term_index(m) != 0; }

    // sigma_k(i) = j if x_k t_i = b_j, else 0.
    std::size_t sigma(std::size_t k, std::size_t i) const
    {
        check_var(k);
        check(i, mu(), "term");
        return m_sigma[k - 1][i - 1];
    }
    // tau_k(i) = i1 if x_k t_i = t_i1, else 0.
    std::size_t tau(std::size_t k, std::size_t i) const
    {
        check_var(k);
        check(i, mu(), "term");
        return m_tau[k - 1][i - 1];
    }
    // sigma'_k(j) = i if b_j / x_k = t_i, else 0.
    std::size_t sigma_inv(std::size_t k, std::size_t j) const
    {
        check_var(k);
        check(j, nu(), "border");
        return m_sigma_inv[k - 1][j - 1];
    }
    // tau'_k(i1) = i if t_i1 / x_k = t_i, else 0.
    std::size_t tau_inv(std::size_t k, std::size_t i) const
    {
        check_var(k);
        check(i, mu(), "term");
        return m_tau_inv[k - 1][i - 1];
    }

    friend OrderIdeal make_order_ideal(std::size_t n, const std::vector<Monomial> &monomials,
                                       const std::optional<std::vector<Monomial>> &border_order,
                                       bool explicit_term_order);

private:
    OrderIdeal() = default;

    void check_var(std::size_t k) const
    {
        if (k == 0 || k > m_n) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "variable index " + std::to_string(k) + " outside 1.." + std::to_string(m_n));
        }
    }
    static void check(std::size_t i, std::size_t bound, const char *what)
    {
        if (i == 0 || i > bound) {
            throw Error(ErrorCode::IndexOutOfRange,
                        std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(bound));
        }
    }

    std::size_t m_n = 0;
    std::vector<Monomial> m_terms;
    std::vector<Monomial> m_border;
    std::unordered_map<Monomial, std::size_t, MonomialHash> m_term_index;
    std::unordered_map<Monomial, std::size_t, MonomialHash> m_border_index;
    std::vector<std::vector<std::size_t>> m_sigma, m_tau, m_sigma_inv, m_tau_inv;
};

/// Builds an order ideal. Terms are sorted canonically (ascending degree, then
/// descending lex with x_1 > ... > x_n) unless explicit_term_order is set; the
/// border is sorted the same way unless border_order is supplied, in which case
/// it must be a permutation of the computed border.
inline OrderIdeal make_order_ideal(std::size_t n, const std::vector<Monomial> &monomials,
                                   const std::optional<std::vector<Monomial>> &border_order = std::nullopt,
                                   bool explicit_term_order = false)
{
    if (n == 0) {
        throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 1");
    }
    if (monomials.empty()) {
        throw Error(ErrorCode::EmptyOrderIdeal, "an order ideal needs at least one monomial");
    }
    OrderIdeal o;
    o.m_n = n;
    for (const auto &m : monomials) {
        if (m.dimension() != n) {
            throw Error(ErrorCode::DimensionMismatch,
                        "monomial " + m.to_string() + " has " + std::to_string(m.dimension()) +
                            " exponents, expected " + std::to_string(n));
        }
    }
    o.m_terms = monomials;
    if (!explicit_term_order) {
        std::sort(o.m_terms.begin(), o.m_terms.end(), CanonicalMonomialLess{});
    }
    for (std::size_t i = 0; i < o.m_terms.size(); ++i) {
        if (!o.m_term_index.emplace(o.m_terms[i], i + 1).second) {
            throw Error(ErrorCode::DuplicateMonomial, o.m_terms[i].to_string() + " listed twice");
        }
    }
    for (const auto &t : o.m_terms) {
        for (std::size_t k = 1; k <= n; ++k) {
            if (t.divisible_by(k) && !o.contains(t.divided_by(k))) {
                throw Error(ErrorCode::NotDivisorClosed,
                            t.divided_by(k).to_string() + " divides " + t.to_string() + " but is missing");
            }
        }
    }

    std::vector<Monomial> border;
    {
        std::unordered_map<Monomial, bool, MonomialHash> seen;
        for (const auto &t : o.m_terms) {
            for (std::size_t k = 1; k <= n; ++k) {
                Monomial b = t.times(k);
                if (!o.contains(b) && seen.emplace(b, true).second) {
                    border.push_back(std::move(b));
                }
            }
        }
    }
    std::sort(border.begin(), border.end(), CanonicalMonomialLess{});
    if (border_order) {
        auto given = *border_order;
        std::sort(given.begin(), given.end(), CanonicalMonomialLess{});
        if (given != border) {
            throw Error(ErrorCode::BorderOrderMismatch, "explicit border order is not a permutation of the border");
        }
        border = *border_order;
    }
    o.m_border = std::move(border);
    for (std::size_t j = 0; j < o.m_border.size(); ++j) {
        o.m_border_index.emplace(o.m_border[j], j + 1);
    }

    const std::size_t mu = o.m_terms.size();
    const std::size_t nu = o.m_border.size();
    o.m_sigma.assign(n, std::vector<std::size_t>(mu, 0));
    o.m_tau.assign(n, std::vector<std::size_t>(mu, 0));
    o.m_sigma_inv.assign(n, std::vector<std::size_t>(nu, 0));
    o.m_tau_inv.assign(n, std::vector<std::size_t>(mu, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 1; i <= mu; ++i) {
            const Monomial m = o.m_terms[i - 1].times(k);
            if (std::size_t t = o.term_index(m); t != 0) {
                o.m_tau[k - 1][i - 1] = t;
                o.m_tau_inv[k - 1][t - 1] = i;
            } else {
                const std::size_t j = o.border_index(m);
                o.m_sigma[k - 1][i - 1] = j;
                o.m_sigma_inv[k - 1][j - 1] = i;
            }
        }
    }
    return o;
}

// Witness (k, l, q) with k < l: m = x_k x_l t_q and x_k t_q or x_l t_q lies outside O.
struct Witness {
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t q = 0;
    friend auto operator<=>(const Witness &, const Witness &) = default;
};

struct TargetMonomial {
    Monomial monomial;
    std::vector<Witness> witnesses; // sorted
    bool has_witness_pair(std::size_t k, std::size_t l) const
    {
        return std::any_of(witnesses.begin(), witnesses.end(),
                           [&](const Witness &w) { return w.k == k && w.l == l; });
    }
};

struct Arrow {
    std::size_t tail = 0; // index into the terms
    Monomial head;
    MultiDegree displacement;
    friend bool operator==(const Arrow &, const Arrow &) = default;
};

inline Arrow make_arrow(const OrderIdeal &o, std::size_t tail, const Monomial &head)
{
    return Arrow{tail, head, head.multidegree() - o.term(tail).multidegree()};
}

/// All target monomials of O in canonical monomial order, each with its full
/// (sorted) witness set.
inline std::vector<TargetMonomial> target_monomials(const OrderIdeal &o)
{
    std::map<Monomial, std::vector<Witness>, CanonicalMonomialLess> found;
    const std::size_t n = o.dimension();
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t l = k + 1; l <= n; ++l) {
            for (std::size_t q = 1; q <= o.mu(); ++q) {
                if (o.tau(k, q) != 0 && o.tau(l, q) != 0) {
                    continue;
                }
                found[o.term(q).times(k).times(l)].push_back(Witness{k, l, q});
            }
        }
    }
    std::vector<TargetMonomial> out;
    out.reserve(found.size());
    for (auto &[m, w] : found) {
        std::sort(w.begin(), w.end());
        out.push_back(TargetMonomial{m, std::move(w)});
    }
    return out;
}

/// Arrows t_p -> m with m a target monomial and md(m) - md(t_p) = d, ordered by
/// tail index and then head.
inline std::vector<Arrow> arrows_for_displacement(const OrderIdeal &o, const MultiDegree &d)
{
    if (d.size() != o.dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "displacement length differs from the ambient dimension");
    }
    std::unordered_map<Monomial, bool, MonomialHash> targets;
    for (const auto &t : target_monomials(o)) {
        targets.emplace(t.monomial, true);
    }
    std::vector<Arrow> out;
    for (std::size_t p = 1; p <= o.mu(); ++p) {
        Monomial head;
        if (o.term(p).shift(d, head) && targets.count(head) != 0) {
            out.push_back(Arrow{p, head, d});
        }
    }
    return out;
}

// (k,l)-good: both d_k and d_l positive.
inline bool is_good(const MultiDegree &d, std::size_t k, std::size_t l)
{
    if (k == l) {
        throw Error(ErrorCode::IndexOutOfRange, "is_good needs two distinct indices");
    }
    return d.at(k) > 0 && d.at(l) > 0;
}

} // namespace bbsyz
