#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "bbsyz/error.hpp"
#include "bbsyz/rational.hpp"
#include "bbsyz/variable.hpp"

namespace bbsyz {

using Coefficient = Rational;
using Integer = mpz_class;

inline bool is_integer(const Coefficient &c) { return c.is_integer(); }
inline Integer numerator_of(const Coefficient &c) { return c.numerator(); }
inline Coefficient make_rational(const Integer &num, const Integer &den) { return Coefficient(num, den); }
inline std::string to_string(const Coefficient &c) { return c.str(); }
inline std::string to_string(const Integer &z) { return z.get_str(); }

struct Factor {
    Variable var;
    std::uint32_t exp;
    friend bool operator==(const Factor &, const Factor &) = default;
};

/// A product of variables with positive exponents, kept sorted by variable.
class PowerProduct
{
public:
    using Storage = boost::container::small_vector<Factor, 4>;

    PowerProduct() = default;
    explicit PowerProduct(Variable v, std::uint32_t exp = 1)
    {
        if (exp != 0) {
            m_factors.push_back(Factor{v, exp});
            m_degree = exp;
        }
    }

    const Storage &factors() const noexcept { return m_factors; }
    std::uint32_t degree() const noexcept { return m_degree; }
    bool is_one() const noexcept { return m_factors.empty(); }

    std::uint32_t exponent(Variable v) const
    {
        for (const auto &f : m_factors) {
            if (f.var == v) {
                return f.exp;
            }
        }
        return 0;
    }

    // Degree counted over variables accepted by pred.
    template <typename Pred>
    std::uint32_t degree_if(Pred pred) const
    {
        std::uint32_t d = 0;
        for (const auto &f : m_factors) {
            if (pred(f.var)) {
                d += f.exp;
            }
        }
        return d;
    }

    friend PowerProduct operator*(const PowerProduct &a, const PowerProduct &b)
    {
        PowerProduct r;
        r.m_factors.reserve(a.m_factors.size() + b.m_factors.size());
        auto i = a.m_factors.begin(), j = b.m_factors.begin();
        while (i != a.m_factors.end() && j != b.m_factors.end()) {
            if (i->var < j->var) {
                r.m_factors.push_back(*i++);
            } else if (j->var < i->var) {
                r.m_factors.push_back(*j++);
            } else {
                r.m_factors.push_back(Factor{i->var, i->exp + j->exp});
                ++i;
                ++j;
            }
        }
        r.m_factors.insert(r.m_factors.end(), i, a.m_factors.end());
        r.m_factors.insert(r.m_factors.end(), j, b.m_factors.end());
        r.m_degree = a.m_degree + b.m_degree;
        return r;
    }

    friend bool operator==(const PowerProduct &a, const PowerProduct &b)
    {
        return a.m_degree == b.m_degree && a.m_factors == b.m_factors;
    }

    // Graded lexicographic: higher total degree first, then the first variable
    // (in variable order) with differing exponent decides.
    friend bool grlex_greater(const PowerProduct &a, const PowerProduct &b)
    {
        if (a.m_degree != b.m_degree) {
            return a.m_degree > b.m_degree;
        }
        auto i = a.m_factors.begin(), j = b.m_factors.begin();
        for (; i != a.m_factors.end() && j != b.m_factors.end(); ++i, ++j) {
            if (i->var != j->var) {
                return i->var < j->var;
            }
            if (i->exp != j->exp) {
                return i->exp > j->exp;
            }
        }
        return i != a.m_factors.end() && j == b.m_factors.end();
    }

    std::string to_string() const
    {
        if (m_factors.empty()) {
            return "1";
        }
        std::string s;
        for (const auto &f : m_factors) {
            if (!s.empty()) {
                s += "*";
            }
            s += f.var.to_string();
            if (f.exp > 1) {
                s += "^" + std::to_string(f.exp);
            }
        }
        return s;
    }

private:
    Storage m_factors;
    std::uint32_t m_degree = 0;
};

struct Term {
    PowerProduct pp;
    Coefficient coeff;
    friend bool operator==(const Term &, const Term &) = default;
};

/// Exact sparse polynomial with rational coefficients. Terms are stored in
/// canonical order (graded lex, descending) without zero coefficients, so two
/// equal polynomials always have identical term sequences.
class Poly
{
public:
    Poly() = default;
    Poly(int constant) : Poly(Coefficient(constant)) {}
    explicit Poly(const Coefficient &constant)
    {
        if (constant != 0) {
            m_terms.push_back(Term{PowerProduct{}, constant});
        }
    }
    explicit Poly(Variable v) { m_terms.push_back(Term{PowerProduct(v), Coefficient(1)}); }
    Poly(PowerProduct pp, Coefficient coeff)
    {
        if (coeff != 0) {
            m_terms.push_back(Term{std::move(pp), std::move(coeff)});
        }
    }

    static Poly c(std::size_t i, std::size_t j) { return Poly(Variable::c(i, j)); }
    static Poly r(std::size_t k, std::size_t l, std::size_t p, std::size_t q) { return Poly(Variable::r(k, l, p, q)); }
    static Poly x(std::size_t k) { return Poly(Variable::x(k)); }

    // Collects arbitrary terms into canonical form.
    static Poly from_terms(std::vector<Term> terms)
    {
        Poly p;
        p.m_terms = std::move(terms);
        p.normalize();
        return p;
    }

    const std::vector<Term> &terms() const noexcept { return m_terms; }
    std::size_t size() const noexcept { return m_terms.size(); }
    bool is_zero() const noexcept { return m_terms.empty(); }
    bool is_constant() const noexcept { return m_terms.empty() || (m_terms.size() == 1 && m_terms[0].pp.is_one()); }
    Coefficient constant_value() const
    {
        return (!m_terms.empty() && m_terms.back().pp.is_one()) ? m_terms.back().coeff : Coefficient(0);
    }
    // Constant term (the degree-0 term always sorts last).
    Coefficient constant_term() const { return constant_value(); }

    bool is_integral() const
    {
        return std::all_of(m_terms.begin(), m_terms.end(), [](const Term &t) { return is_integer(t.coeff); });
    }

    std::uint32_t total_degree() const { return m_terms.empty() ? 0 : m_terms.front().pp.degree(); }

    std::vector<Variable> variables() const
    {
        std::vector<Variable> vs;
        for (const auto &t : m_terms) {
            for (const auto &f : t.pp.factors()) {
                vs.push_back(f.var);
            }
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto &t : r.m_terms) {
            t.coeff = -t.coeff;
        }
        return r;
    }

    Poly &operator+=(const Poly &o) { return *this = merge(*this, o, false); }
    Poly &operator-=(const Poly &o) { return *this = merge(*this, o, true); }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }

    friend Poly operator+(const Poly &a, const Poly &b) { return merge(a, b, false); }
    friend Poly operator-(const Poly &a, const Poly &b) { return merge(a, b, true); }

    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Poly{};
        }
        if (a.size() == 1 && b.size() == 1) {
            return Poly(a.m_terms[0].pp * b.m_terms[0].pp, a.m_terms[0].coeff * b.m_terms[0].coeff);
        }
        std::vector<Term> prods;
        prods.reserve(a.size() * b.size());
        for (const auto &x : a.m_terms) {
            for (const auto &y : b.m_terms) {
                prods.push_back(Term{x.pp * y.pp, x.coeff * y.coeff});
            }
        }
        return from_terms(std::move(prods));
    }

    // sum_i a_i * b_i with a single normalization pass.
    static Poly sum_of_products(const std::vector<std::pair<const Poly *, const Poly *>> &pairs)
    {
        std::vector<Term> prods;
        for (const auto &[a, b] : pairs) {
            for (const auto &x : a->m_terms) {
                for (const auto &y : b->m_terms) {
                    prods.push_back(Term{x.pp * y.pp, x.coeff * y.coeff});
                }
            }
        }
        return from_terms(std::move(prods));
    }

    friend Poly operator*(const Coefficient &s, const Poly &p)
    {
        if (s == 0) {
            return Poly{};
        }
        Poly r = p;
        for (auto &t : r.m_terms) {
            t.coeff *= s;
        }
        return r;
    }

    friend Poly operator*(int s, const Poly &p) { return Coefficient(s) * p; }

    friend bool operator==(const Poly &, const Poly &) = default;

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        bool first = true;
        for (const auto &t : m_terms) {
            const bool negative = t.coeff < 0;
            if (first) {
                s += negative ? "-" : "";
            } else {
                s += negative ? " - " : " + ";
            }
            first = false;
            const Coefficient mag = negative ? Coefficient(-t.coeff) : t.coeff;
            if (t.pp.is_one()) {
                s += bbsyz::to_string(mag);
            } else if (mag == 1) {
                s += t.pp.to_string();
            } else {
                s += bbsyz::to_string(mag) + "*" + t.pp.to_string();
            }
        }
        return s;
    }

private:
    void normalize()
    {
        std::sort(m_terms.begin(), m_terms.end(),
                  [](const Term &a, const Term &b) { return grlex_greater(a.pp, b.pp); });
        std::vector<Term> out;
        out.reserve(m_terms.size());
        for (auto &t : m_terms) {
            if (!out.empty() && out.back().pp == t.pp) {
                out.back().coeff += t.coeff;
            } else {
                if (!out.empty() && out.back().coeff == 0) {
                    out.pop_back();
                }
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().coeff == 0) {
            out.pop_back();
        }
        m_terms = std::move(out);
    }

    static Poly merge(const Poly &a, const Poly &b, bool subtract)
    {
        Poly r;
        r.m_terms.reserve(a.size() + b.size());
        auto i = a.m_terms.begin(), j = b.m_terms.begin();
        while (i != a.m_terms.end() && j != b.m_terms.end()) {
            if (grlex_greater(i->pp, j->pp)) {
                r.m_terms.push_back(*i++);
            } else if (grlex_greater(j->pp, i->pp)) {
                r.m_terms.push_back(Term{j->pp, subtract ? Coefficient(-j->coeff) : j->coeff});
                ++j;
            } else {
                Coefficient c = subtract ? Coefficient(i->coeff - j->coeff) : Coefficient(i->coeff + j->coeff);
                if (c != 0) {
                    r.m_terms.push_back(Term{i->pp, std::move(c)});
                }
                ++i;
                ++j;
            }
        }
        for (; i != a.m_terms.end(); ++i) {
            r.m_terms.push_back(*i);
        }
        for (; j != b.m_terms.end(); ++j) {
            r.m_terms.push_back(Term{j->pp, subtract ? Coefficient(-j->coeff) : j->coeff});
        }
        return r;
    }

    std::vector<Term> m_terms;
};

inline std::ostream &operator<<(std::ostream &os, const Poly &p) { return os << p.to_string(); }

/// Replaces variables by polynomials. bind(v, out) returns false to keep v as is.
template <typename Binder>
Poly substitute(const Poly &p, Binder bind)
{
    Poly result;
    for (const auto &t : p.terms()) {
        Poly acc(PowerProduct{}, t.coeff);
        PowerProduct kept;
        for (const auto &f : t.pp.factors()) {
            Poly value;
            if (bind(f.var, value)) {
                for (std::uint32_t e = 0; e < f.exp; ++e) {
                    acc = acc * value;
                }
            } else {
                kept = kept * PowerProduct(f.var, f.exp);
            }
        }
        result += acc * Poly(kept, Coefficient(1));
    }
    return result;
}

} // namespace bbsyz
