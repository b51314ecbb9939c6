#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bbsyz/error.hpp"
#include "bbsyz/extended_ring.hpp"
#include "bbsyz/genmat.hpp"
#include "bbsyz/poly.hpp"
#include "bbsyz/poly_parse.hpp"

namespace bbsyz {

// Where a syzygy came from.
struct SyzygyOrigin {
    enum class Family { Relation, Jacobi, Trace, Combination };
    Family family = Family::Relation;
    std::vector<std::size_t> jacobi;  // k, l, m, p, q
    std::vector<std::size_t> product; // ordered product
    std::size_t distinguished = 0;

    std::string to_string() const
    {
        auto join = [](const std::vector<std::size_t> &v, std::size_t from, std::size_t to) {
            std::string s;
            for (std::size_t i = from; i < to && i < v.size(); ++i) {
                if (i != from) {
                    s += ",";
                }
                s += std::to_string(v[i]);
            }
            return s;
        };
        switch (family) {
        case Family::Jacobi:
            return "J[" + join(jacobi, 0, 3) + ";" + join(jacobi, 3, 5) + "]";
        case Family::Trace:
            return "T[<" + join(product, 0, product.size()) + ">," + std::to_string(distinguished) + "]";
        case Family::Combination:
            return "W[<" + join(product, 0, product.size()) + ">]";
        case Family::Relation:
            break;
        }
        return "relation";
    }
};

using Spine = std::map<RhoId, Integer>;

/// A Z[c]-linear relation sum kappa_i * rho_i = 0 among the generators that are
/// not trivially zero. Only nonzero coefficients are stored.
struct Syzygy {
    SyzygyOrigin origin;
    std::map<RhoId, Poly> coeffs;

    bool is_zero() const noexcept { return coeffs.empty(); }

    const Poly &coefficient(const RhoId &id) const
    {
        static const Poly zero;
        auto it = coeffs.find(id);
        return it == coeffs.end() ? zero : it->second;
    }

    void add(const RhoId &id, const Poly &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = coeffs.emplace(id, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                coeffs.erase(it);
            }
        }
    }

    void add_scaled(const Syzygy &other, const Poly &scale)
    {
        for (const auto &[id, c] : other.coeffs) {
            add(id, scale * c);
        }
    }

    friend bool operator==(const Syzygy &a, const Syzygy &b) { return a.coeffs == b.coeffs; }
};

/// Coefficients that are nonzero integer constants.
inline Spine spine_of(const Syzygy &s)
{
    Spine out;
    for (const auto &[id, c] : s.coeffs) {
        if (c.is_constant() && !c.is_zero()) {
            const Coefficient v = c.constant_term();
            if (is_integer(v)) {
                out.emplace(id, numerator_of(v));
            }
        }
    }
    return out;
}

/// sum kappa_i * R_i in the extended ring.
inline Poly syzygy_expression(const Syzygy &s)
{
    Poly out;
    for (const auto &[id, c] : s.coeffs) {
        out += c * Poly(id.variable());
    }
    return out;
}

/// sum kappa_i * rho_i expanded in the c-ring.
inline Poly evaluate_syzygy(const Syzygy &s, const RhoTable &table)
{
    Poly out;
    for (const auto &[id, c] : s.coeffs) {
        out += c * table.poly(id);
    }
    return out;
}

inline bool verify_syzygy(const Syzygy &s, const RhoTable &table) { return evaluate_syzygy(s, table).is_zero(); }

/// Reads the coefficients off an expression that is linear in the R-variables,
/// dropping trivially-zero generators, and checks the result by substitution.
inline Syzygy syzygy_from_expression(const RhoTable &table, const Poly &expr, SyzygyOrigin origin)
{
    RDecomposition dec = linear_decomposition_in_R(expr);
    if (!dec.remainder.is_zero()) {
        throw Error(ErrorCode::VerificationFailed,
                    origin.to_string() + " has a part free of generators: " + dec.remainder.to_string());
    }
    Syzygy s;
    s.origin = std::move(origin);
    for (auto &[v, c] : dec.coefficients) {
        const RhoId id = RhoId::from_variable(v);
        if (!table.is_trivially_zero(id)) {
            s.coeffs.emplace(id, std::move(c));
        }
    }
    const Poly residual = substitute_R(syzygy_expression(s), table.bindings());
    if (!residual.is_zero()) {
        throw Error(ErrorCode::VerificationFailed, s.origin.to_string() + " leaves " + residual.to_string());
    }
    return s;
}

/// e.g. "-c[2,2]*rho[1,2;1,2] + (c[1,2] - c[2,5])*rho[1,2;2,1] + rho[1,2;3,3]"; "0" when empty.
inline std::string format_combination(const std::map<RhoId, Poly> &coeffs)
{
    if (coeffs.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &[id, c] : coeffs) {
        std::string body;
        bool negative = false;
        if (c.size() == 1) {
            const Term &t = c.terms().front();
            negative = t.coeff < 0;
            const Poly mag(t.pp, negative ? Coefficient(-t.coeff) : t.coeff);
            body = mag == Poly(1) ? id.to_string() : mag.to_string() + "*" + id.to_string();
        } else {
            body = "(" + c.to_string() + ")*" + id.to_string();
        }
        if (first) {
            s += negative ? "-" + body : body;
        } else {
            s += (negative ? " - " : " + ") + body;
        }
        first = false;
    }
    return s;
}

inline std::string format_relation(const std::map<RhoId, Poly> &coeffs) { return format_combination(coeffs) + " = 0"; }

inline std::string format_syzygy(const Syzygy &s) { return format_relation(s.coeffs); }

/// Inverse of format_relation.
inline std::map<RhoId, Poly> parse_relation(std::string_view text)
{
    const auto eq = text.rfind('=');
    if (eq == std::string_view::npos) {
        throw ParseError("relation has no '='", 1, text.size() + 1);
    }
    std::string_view rhs = text.substr(eq + 1);
    while (!rhs.empty() && rhs.front() == ' ') {
        rhs.remove_prefix(1);
    }
    while (!rhs.empty() && rhs.back() == ' ') {
        rhs.remove_suffix(1);
    }
    if (rhs != "0") {
        throw ParseError("relation must end in '= 0'", 1, eq + 2);
    }
    std::string lhs(text.substr(0, eq));
    for (std::size_t at = lhs.find("rho["); at != std::string::npos; at = lhs.find("rho[", at)) {
        lhs.replace(at, 4, "  R[");
    }
    RDecomposition dec = linear_decomposition_in_R(parse_poly(lhs));
    if (!dec.remainder.is_zero()) {
        throw ParseError("relation has a term without a generator", 1, 1);
    }
    std::map<RhoId, Poly> out;
    for (auto &[v, c] : dec.coefficients) {
        out.emplace(RhoId::from_variable(v), std::move(c));
    }
    return out;
}

/// Replaces rho_target by sum replacement[j] * rho_j inside a linear combination.
inline std::map<RhoId, Poly> apply_rewriting(std::map<RhoId, Poly> combo, const RhoId &target,
                                             const std::map<RhoId, Poly> &replacement)
{
    auto it = combo.find(target);
    if (it == combo.end()) {
        return combo;
    }
    const Poly k = std::move(it->second);
    combo.erase(it);
    for (const auto &[id, c] : replacement) {
        Poly add = k * c;
        auto [jt, inserted] = combo.emplace(id, add);
        if (!inserted) {
            jt->second += add;
            if (jt->second.is_zero()) {
                combo.erase(jt);
            }
        } else if (jt->second.is_zero()) {
            combo.erase(jt);
        }
    }
    return combo;
}

} // namespace bbsyz
