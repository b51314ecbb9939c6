#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbsyz/error.hpp"
#include "bbsyz/genmat.hpp"
#include "bbsyz/order_ideal.hpp"
#include "bbsyz/ordered_product.hpp"
#include "bbsyz/syzygy.hpp"

namespace bbsyz {

namespace detail {

inline void check_product(const OrderIdeal &o, const OrderedProduct &pi, std::size_t k)
{
    if (pi.max_index() > o.dimension()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    pi.to_string() + " uses a variable beyond n = " + std::to_string(o.dimension()));
    }
    if (!pi.contains(k)) {
        throw Error(ErrorCode::IndexAbsent, "index " + std::to_string(k) + " does not occur in " + pi.to_string());
    }
}

inline PolyMatrix word_product(const RhoTable &table, Word::const_iterator first, Word::const_iterator last)
{
    if (first == last) {
        return PolyMatrix::identity(table.mu());
    }
    PolyMatrix m = table.matrix(*first);
    for (auto it = std::next(first); it != last; ++it) {
        m = m * table.matrix(*it);
    }
    return m;
}

// prefix[v] = A_{w_1} ... A_{w_v}, suffix[v] = A_{w_{v+1}} ... A_{w_s}; empty products are absent.
struct PartialProducts {
    std::vector<std::optional<PolyMatrix>> prefix, suffix;

    PartialProducts(const RhoTable &table, const Word &w) : prefix(w.size() + 1), suffix(w.size() + 1)
    {
        for (std::size_t v = 1; v <= w.size(); ++v) {
            const PolyMatrix &a = table.matrix(w[v - 1]);
            prefix[v] = prefix[v - 1] ? *prefix[v - 1] * a : a;
        }
        for (std::size_t v = w.size(); v-- > 0;) {
            const PolyMatrix &a = table.matrix(w[v]);
            suffix[v] = suffix[v + 1] ? a * *suffix[v + 1] : a;
        }
    }
};

// x * y where either side may be an empty product.
inline PolyMatrix times(const std::optional<PolyMatrix> &x, const PolyMatrix &y) { return x ? *x * y : y; }
inline PolyMatrix times(const PolyMatrix &x, const std::optional<PolyMatrix> &y) { return y ? x * *y : x; }

} // namespace detail

/// Tr( sum_v P_v C_v S_v ) over the extended ring, where P_v and S_v are the
/// products of the multiplication matrices before and after slot v of Pi
/// without its left-most k, and C_v is the grid of R-variables standing for
/// [A_k, A_{l_v}] (negated grid of (l_v, k) when l_v < k, nothing when l_v = k).
/// Uses Tr(P C S) = sum_{p,q} C(p,q) (S P)(q,p).
inline Poly trace_expression(const RhoTable &table, const OrderedProduct &pi, std::size_t k)
{
    const OrderIdeal &o = table.order_ideal();
    detail::check_product(o, pi, k);
    const Word rest = delete_leftmost(pi, k);
    const std::size_t mu = o.mu();
    const detail::PartialProducts parts(table, rest);
    Poly expr;
    for (std::size_t v = 0; v < rest.size(); ++v) {
        const std::size_t lv = rest[v];
        if (lv == k) {
            continue;
        }
        const auto &pre = parts.prefix[v];
        const auto &suf = parts.suffix[v + 1];
        PolyMatrix sp = suf ? detail::times(*suf, pre) : (pre ? *pre : PolyMatrix::identity(mu));
        const std::size_t a = std::min(k, lv);
        const std::size_t b = std::max(k, lv);
        const int sign = k < lv ? 1 : -1;
        for (std::size_t p = 1; p <= mu; ++p) {
            for (std::size_t q = 1; q <= mu; ++q) {
                const Poly &w = sp(q, p);
                if (!w.is_zero()) {
                    expr += (sign * w) * Poly::r(a, b, p, q);
                }
            }
        }
    }
    return expr;
}

/// T_{Pi,k}.
inline Syzygy trace_syzygy(const RhoTable &table, const OrderedProduct &pi, std::size_t k)
{
    SyzygyOrigin origin;
    origin.family = SyzygyOrigin::Family::Trace;
    origin.product = pi.indices();
    origin.distinguished = k;
    return syzygy_from_expression(table, trace_expression(table, pi, k), std::move(origin));
}

/// sum_v P_v [A_k, A_{l_v}] S_v with the actual commutators, before the trace.
inline PolyMatrix trace_expression_matrix(const RhoTable &table, const OrderedProduct &pi, std::size_t k)
{
    detail::check_product(table.order_ideal(), pi, k);
    const Word rest = delete_leftmost(pi, k);
    const detail::PartialProducts parts(table, rest);
    PolyMatrix sum(table.mu());
    for (std::size_t v = 0; v < rest.size(); ++v) {
        const PolyMatrix c = table.commutator_of(k, rest[v]);
        sum = sum + detail::times(detail::times(parts.prefix[v], c), parts.suffix[v + 1]);
    }
    return sum;
}

/// [A_k, A_{l_1} ... A_{l_{s-1}}], which the matrix above must equal.
inline PolyMatrix telescoped_commutator(const RhoTable &table, const OrderedProduct &pi, std::size_t k)
{
    detail::check_product(table.order_ideal(), pi, k);
    const Word rest = delete_leftmost(pi, k);
    return commutator(table.matrix(k), detail::word_product(table, rest.begin(), rest.end()));
}

/// The spine of T_{Pi,k} read off the arrows: rho^{ab}_{pq} with {a,b} = {k,l},
/// d_l > 0, t_p * x^d = x_a x_b t_q a target monomial. Coefficient d_l when
/// k = a, -d_l when k = b.
inline Spine predicted_spine(const OrderIdeal &o, const OrderedProduct &pi, std::size_t k)
{
    detail::check_product(o, pi, k);
    const std::size_t n = o.dimension();
    const MultiDegree d = pi.multidegree(n);
    Spine out;
    for (std::size_t l = 1; l <= n; ++l) {
        if (l == k || d[l] <= 0) {
            continue;
        }
        const std::size_t a = std::min(k, l);
        const std::size_t b = std::max(k, l);
        for (std::size_t p = 1; p <= o.mu(); ++p) {
            Monomial head;
            if (!o.term(p).shift(d, head) || !head.divisible_by(a) || !head.divisible_by(b)) {
                continue;
            }
            const Monomial tq = head.divided_by(a).divided_by(b);
            const std::size_t q = o.term_index(tq);
            if (q == 0 || (o.tau(a, q) != 0 && o.tau(b, q) != 0)) {
                continue;
            }
            out.emplace(RhoId{a, b, p, q}, Integer(k == a ? d[l] : -d[l]));
        }
    }
    return out;
}

struct SpinalDegree {
    MultiDegree degree;
    std::vector<Arrow> arrows; // arrows of this displacement with a witness (k,l,q), d_k, d_l > 0
};

/// Every good multi-degree carrying an arrow t_p -> m onto a target monomial
/// witnessed by some (k,l,q) with d_k, d_l > 0. Degrees in canonical order.
inline std::vector<SpinalDegree> spinal_multidegrees(const OrderIdeal &o)
{
    std::map<MultiDegree, std::vector<Arrow>, CanonicalDegreeLess> found;
    for (const TargetMonomial &tm : target_monomials(o)) {
        for (std::size_t p = 1; p <= o.mu(); ++p) {
            const MultiDegree d = tm.monomial.multidegree() - o.term(p).multidegree();
            if (!d.is_nonnegative()) {
                continue;
            }
            const bool witnessed = std::any_of(tm.witnesses.begin(), tm.witnesses.end(),
                                               [&](const Witness &w) { return d[w.k] > 0 && d[w.l] > 0; });
            if (witnessed) {
                found[d].push_back(make_arrow(o, p, tm.monomial));
            }
        }
    }
    std::vector<SpinalDegree> out;
    for (auto &[d, arrows] : found) {
        std::sort(arrows.begin(), arrows.end(), [](const Arrow &x, const Arrow &y) {
            if (x.tail != y.tail) {
                return x.tail < y.tail;
            }
            return CanonicalMonomialLess{}(x.head, y.head);
        });
        out.push_back(SpinalDegree{d, std::move(arrows)});
    }
    return out;
}

/// A word with multi-degree d: all 1's, then all 2's, and so on.
inline OrderedProduct canonical_product(const MultiDegree &d)
{
    Word w;
    for (std::size_t k = 1; k <= d.size(); ++k) {
        for (int e = 0; e < d[k]; ++e) {
            w.push_back(k);
        }
    }
    return OrderedProduct(std::move(w));
}

/// Memoizes T_{Pi,k} for one table.
class TraceCache
{
public:
    explicit TraceCache(const RhoTable &table) : m_table(&table) {}

    const RhoTable &table() const noexcept { return *m_table; }

    const Syzygy &get(const OrderedProduct &pi, std::size_t k)
    {
        auto key = std::make_pair(pi.indices(), k);
        auto it = m_cache.find(key);
        if (it == m_cache.end()) {
            it = m_cache.emplace(std::move(key), trace_syzygy(*m_table, pi, k)).first;
        }
        return it->second;
    }

private:
    const RhoTable *m_table;
    std::map<std::pair<Word, std::size_t>, Syzygy> m_cache;
};

/// sum_{k : d_k > 0} d_k * T_{Pi,k}; its spine has to be empty.
inline Syzygy weighted_combination(TraceCache &cache, const OrderedProduct &pi)
{
    const MultiDegree d = pi.multidegree(cache.table().dimension());
    Syzygy sum;
    sum.origin.family = SyzygyOrigin::Family::Combination;
    sum.origin.product = pi.indices();
    for (std::size_t k = 1; k <= d.size(); ++k) {
        if (d[k] > 0) {
            sum.add_scaled(cache.get(pi, k), Poly(d[k]));
        }
    }
    const Spine spine = spine_of(sum);
    if (!spine.empty()) {
        throw Error(ErrorCode::SpineNotEmpty, sum.origin.to_string() + " keeps " + spine.begin()->first.to_string() +
                                                  " with coefficient " + to_string(spine.begin()->second));
    }
    return sum;
}

inline Syzygy weighted_combination(const RhoTable &table, const OrderedProduct &pi)
{
    TraceCache cache(table);
    return weighted_combination(cache, pi);
}

/// Compares the spines of T_{Pi,k} and T_{Pi',k}, coefficients included.
inline bool rearrangement_spine_equal(TraceCache &cache, const OrderedProduct &pi, const OrderedProduct &pi2,
                                      std::size_t k)
{
    if (!pi.is_rearrangement_of(pi2)) {
        throw Error(ErrorCode::NotARearrangement, pi2.to_string() + " is not a rearrangement of " + pi.to_string());
    }
    return spine_of(cache.get(pi, k)) == spine_of(cache.get(pi2, k));
}

inline bool rearrangement_spine_equal(const RhoTable &table, const OrderedProduct &pi, const OrderedProduct &pi2,
                                      std::size_t k)
{
    TraceCache cache(table);
    return rearrangement_spine_equal(cache, pi, pi2, k);
}

} // namespace bbsyz
