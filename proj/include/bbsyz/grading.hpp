#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "bbsyz/monomial.hpp"
#include "bbsyz/order_ideal.hpp"
#include "bbsyz/poly.hpp"

namespace bbsyz {

/// Multi-degrees of the indeterminates induced by an order ideal:
///   md(c[i,j])      = md(b_j) - md(t_i)
///   md(R[k,l;p,q])  = md(t_q) + e_k + e_l - md(t_p)
///   md(x[k])        = e_k
class GradingContext
{
public:
    explicit GradingContext(OrderIdeal o) : m_order(std::move(o)) {}

    const OrderIdeal &order_ideal() const noexcept { return m_order; }

    MultiDegree degree(Variable v) const
    {
        const OrderIdeal &o = m_order;
        switch (v.kind()) {
        case Variable::Kind::C:
            return o.border_term(v.column()).multidegree() - o.term(v.row()).multidegree();
        case Variable::Kind::R:
            check_pair(v.k(), v.l());
            return o.term(v.q()).multidegree().inc(v.k()).inc(v.l()) - o.term(v.p()).multidegree();
        case Variable::Kind::X:
            return MultiDegree::unit(o.dimension(), v.k());
        }
        return MultiDegree(o.dimension());
    }

    MultiDegree degree(const PowerProduct &pp) const
    {
        MultiDegree d(m_order.dimension());
        for (const auto &f : pp.factors()) {
            const MultiDegree fd = degree(f.var);
            for (std::uint32_t e = 0; e < f.exp; ++e) {
                d += fd;
            }
        }
        return d;
    }

private:
    void check_pair(std::size_t k, std::size_t l) const
    {
        if (l > m_order.dimension()) {
            throw Error(ErrorCode::IndexOutOfRange, "R-indeterminate variable pair (" + std::to_string(k) + "," +
                                                        std::to_string(l) + ") exceeds the dimension");
        }
    }

    OrderIdeal m_order;
};

/// Result of a homogeneity test. The zero polynomial is homogeneous of every
/// degree and reports AnyDegree rather than a vector.
struct Homogeneity {
    enum class Kind { Degree, AnyDegree, NonHomogeneous };
    Kind kind = Kind::AnyDegree;
    MultiDegree degree;           // when Kind::Degree
    std::string first, second;    // when Kind::NonHomogeneous: two terms with differing degrees
    MultiDegree first_degree, second_degree;

    bool homogeneous() const noexcept { return kind != Kind::NonHomogeneous; }
    // True when p is zero or has exactly degree d.
    bool matches(const MultiDegree &d) const
    {
        return kind == Kind::AnyDegree || (kind == Kind::Degree && degree == d);
    }
};

inline Homogeneity homogeneous_multidegree(const Poly &p, const GradingContext &ctx)
{
    Homogeneity h;
    if (p.is_zero()) {
        return h;
    }
    const auto &terms = p.terms();
    h.kind = Homogeneity::Kind::Degree;
    h.degree = ctx.degree(terms.front().pp);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        MultiDegree d = ctx.degree(terms[i].pp);
        if (d != h.degree) {
            h.kind = Homogeneity::Kind::NonHomogeneous;
            h.first = Poly(terms.front().pp, terms.front().coeff).to_string();
            h.second = Poly(terms[i].pp, terms[i].coeff).to_string();
            h.first_degree = h.degree;
            h.second_degree = d;
            return h;
        }
    }
    return h;
}

} // namespace bbsyz
