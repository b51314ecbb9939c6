#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bbsyz/error.hpp"

namespace bbsyz {

// Variables x_1..x_n are addressed with 1-based indices throughout the library.

// Integer degree vector; components may be negative.
class MultiDegree
{
public:
    MultiDegree() = default;
    explicit MultiDegree(std::size_t n) : m_components(n, 0) {}
    explicit MultiDegree(std::vector<int> components) : m_components(std::move(components)) {}
    MultiDegree(std::initializer_list<int> components) : m_components(components) {}

    static MultiDegree unit(std::size_t n, std::size_t k)
    {
        MultiDegree d(n);
        d.at(k) = 1;
        return d;
    }

    std::size_t size() const noexcept { return m_components.size(); }
    const std::vector<int> &components() const noexcept { return m_components; }

    int operator[](std::size_t k) const { return at(k); }
    int &at(std::size_t k)
    {
        check_index(k);
        return m_components[k - 1];
    }
    int at(std::size_t k) const
    {
        check_index(k);
        return m_components[k - 1];
    }

    int total() const { return std::accumulate(m_components.begin(), m_components.end(), 0); }

    bool is_nonnegative() const
    {
        return std::all_of(m_components.begin(), m_components.end(), [](int c) { return c >= 0; });
    }

    // inc_k(d) = d + e_k
    MultiDegree inc(std::size_t k) const
    {
        MultiDegree r = *this;
        ++r.at(k);
        return r;
    }

    MultiDegree &operator+=(const MultiDegree &o)
    {
        same_size(o);
        for (std::size_t i = 0; i < m_components.size(); ++i) {
            m_components[i] += o.m_components[i];
        }
        return *this;
    }
    MultiDegree &operator-=(const MultiDegree &o)
    {
        same_size(o);
        for (std::size_t i = 0; i < m_components.size(); ++i) {
            m_components[i] -= o.m_components[i];
        }
        return *this;
    }
    friend MultiDegree operator+(MultiDegree a, const MultiDegree &b) { return a += b; }
    friend MultiDegree operator-(MultiDegree a, const MultiDegree &b) { return a -= b; }

    friend bool operator==(const MultiDegree &, const MultiDegree &) = default;

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < m_components.size(); ++i) {
            if (i != 0) {
                s += ",";
            }
            s += std::to_string(m_components[i]);
        }
        return s + ")";
    }

private:
    void check_index(std::size_t k) const
    {
        if (k == 0 || k > m_components.size()) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "variable index " + std::to_string(k) + " outside 1.." + std::to_string(m_components.size()));
        }
    }
    void same_size(const MultiDegree &o) const
    {
        if (o.size() != size()) {
            throw Error(ErrorCode::DimensionMismatch, "multidegrees of different lengths");
        }
    }

    std::vector<int> m_components;
};

inline std::ostream &operator<<(std::ostream &os, const MultiDegree &d) { return os << d.to_string(); }

// Ascending total degree, then descending lexicographic with x_1 > x_2 > ... > x_n.
// Used for both monomials and (non-negative) degree vectors.
inline bool canonical_less(const std::vector<int> &a, const std::vector<int> &b)
{
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) {
        return da < db;
    }
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// A power product x_1^a_1 ... x_n^a_n.
class Monomial
{
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : m_exponents(std::move(exponents))
    {
        for (int e : m_exponents) {
            if (e < 0) {
                throw Error(ErrorCode::DimensionMismatch, "negative exponent in monomial");
            }
        }
    }
    Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

    static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }

    std::size_t dimension() const noexcept { return m_exponents.size(); }
    const std::vector<int> &exponents() const noexcept { return m_exponents; }
    int exponent(std::size_t k) const { return m_exponents.at(k - 1); }
    int degree() const { return std::accumulate(m_exponents.begin(), m_exponents.end(), 0); }

    MultiDegree multidegree() const { return MultiDegree(m_exponents); }

    // x_k * m
    Monomial times(std::size_t k) const
    {
        Monomial r = *this;
        ++r.m_exponents.at(k - 1);
        return r;
    }

    bool divisible_by(std::size_t k) const { return m_exponents.at(k - 1) > 0; }

    // m / x_k; requires divisible_by(k).
    Monomial divided_by(std::size_t k) const
    {
        Monomial r = *this;
        --r.m_exponents.at(k - 1);
        return r;
    }

    // m * x^d when every exponent stays non-negative.
    bool shift(const MultiDegree &d, Monomial &out) const
    {
        std::vector<int> e = m_exponents;
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] += d.components()[i];
            if (e[i] < 0) {
                return false;
            }
        }
        out = Monomial(std::move(e));
        return true;
    }

    friend bool operator==(const Monomial &, const Monomial &) = default;

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < m_exponents.size(); ++i) {
            if (m_exponents[i] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += "*";
            }
            s += "x" + std::to_string(i + 1);
            if (m_exponents[i] > 1) {
                s += "^" + std::to_string(m_exponents[i]);
            }
        }
        return s.empty() ? "1" : s;
    }

private:
    std::vector<int> m_exponents;
};

inline std::ostream &operator<<(std::ostream &os, const Monomial &m) { return os << m.to_string(); }

struct CanonicalMonomialLess {
    bool operator()(const Monomial &a, const Monomial &b) const { return canonical_less(a.exponents(), b.exponents()); }
};

struct CanonicalDegreeLess {
    bool operator()(const MultiDegree &a, const MultiDegree &b) const
    {
        return canonical_less(a.components(), b.components());
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept
    {
        std::size_t h = m.dimension();
        for (int e : m.exponents()) {
            h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace bbsyz
