#pragma once

#include <map>
#include <string>
#include <utility>

#include "bbsyz/error.hpp"
#include "bbsyz/poly.hpp"

namespace bbsyz {

// Operations on polynomials that mix c-indeterminates with the formal
// R-indeterminates standing in for generators.

struct RDecomposition {
    std::map<Variable, Poly> coefficients; // R-variable -> c-polynomial, nonzero only
    Poly remainder;                        // part free of R-variables
};

/// Writes p = sum coeff(R) * R + remainder. Fails with NotLinearInR when some
/// term has R-degree two or more.
inline RDecomposition linear_decomposition_in_R(const Poly &p)
{
    std::map<Variable, std::vector<Term>> buckets;
    std::vector<Term> rest;
    for (const auto &t : p.terms()) {
        const auto rdeg = t.pp.degree_if([](Variable v) { return v.is_r(); });
        if (rdeg >= 2) {
            throw Error(ErrorCode::NotLinearInR, "term " + Poly(t.pp, t.coeff).to_string() + " has R-degree " +
                                                     std::to_string(rdeg));
        }
        if (rdeg == 0) {
            rest.push_back(t);
            continue;
        }
        PowerProduct cpart;
        Variable rvar = Variable::x(1);
        for (const auto &f : t.pp.factors()) {
            if (f.var.is_r()) {
                rvar = f.var;
            } else {
                cpart = cpart * PowerProduct(f.var, f.exp);
            }
        }
        buckets[rvar].push_back(Term{std::move(cpart), t.coeff});
    }
    RDecomposition out;
    for (auto &[v, terms] : buckets) {
        Poly c = Poly::from_terms(std::move(terms));
        if (!c.is_zero()) {
            out.coefficients.emplace(v, std::move(c));
        }
    }
    out.remainder = Poly::from_terms(std::move(rest));
    return out;
}

/// Replaces every R-variable by its binding. Fails with MissingBinding when an
/// occurring R-variable has none.
inline Poly substitute_R(const Poly &p, const std::map<Variable, Poly> &table)
{
    return substitute(p, [&](Variable v, Poly &out) {
        if (!v.is_r()) {
            return false;
        }
        auto it = table.find(v);
        if (it == table.end()) {
            throw Error(ErrorCode::MissingBinding, "no binding for " + v.to_string());
        }
        out = it->second;
        return true;
    });
}

} // namespace bbsyz
