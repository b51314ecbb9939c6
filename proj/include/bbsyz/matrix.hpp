#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bbsyz/error.hpp"

namespace bbsyz {

/// Dense square matrix over a ring type T (needs +, -, *, unary -, and
/// construction from int). Indices are 1-based.
template <typename T>
class SquareMatrix
{
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size) : m_size(size), m_entries(size * size, T(0)) {}

    static SquareMatrix identity(std::size_t size)
    {
        SquareMatrix m(size);
        for (std::size_t i = 1; i <= size; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t size() const noexcept { return m_size; }

    T &operator()(std::size_t r, std::size_t s) { return m_entries.at(offset(r, s)); }
    const T &operator()(std::size_t r, std::size_t s) const { return m_entries.at(offset(r, s)); }

    SquareMatrix operator-() const
    {
        SquareMatrix out(m_size);
        for (std::size_t i = 0; i < m_entries.size(); ++i) {
            out.m_entries[i] = -m_entries[i];
        }
        return out;
    }

    friend SquareMatrix operator+(const SquareMatrix &a, const SquareMatrix &b)
    {
        same_size(a, b);
        SquareMatrix out(a.m_size);
        for (std::size_t i = 0; i < a.m_entries.size(); ++i) {
            out.m_entries[i] = a.m_entries[i] + b.m_entries[i];
        }
        return out;
    }

    friend SquareMatrix operator-(const SquareMatrix &a, const SquareMatrix &b)
    {
        same_size(a, b);
        SquareMatrix out(a.m_size);
        for (std::size_t i = 0; i < a.m_entries.size(); ++i) {
            out.m_entries[i] = a.m_entries[i] - b.m_entries[i];
        }
        return out;
    }

    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b)
    {
        same_size(a, b);
        const std::size_t n = a.m_size;
        SquareMatrix out(n);
        if constexpr (requires { T::sum_of_products(std::vector<std::pair<const T *, const T *>>{}); }) {
            std::vector<std::pair<const T *, const T *>> pairs;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    pairs.clear();
                    for (std::size_t k = 0; k < n; ++k) {
                        const T &aik = a.m_entries[i * n + k];
                        const T &bkj = b.m_entries[k * n + j];
                        if (!is_zero_entry(aik) && !is_zero_entry(bkj)) {
                            pairs.emplace_back(&aik, &bkj);
                        }
                    }
                    out.m_entries[i * n + j] = T::sum_of_products(pairs);
                }
            }
            return out;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const T &aik = a.m_entries[i * n + k];
                if (is_zero_entry(aik)) {
                    continue;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const T &bkj = b.m_entries[k * n + j];
                    if (!is_zero_entry(bkj)) {
                        out.m_entries[i * n + j] += aik * bkj;
                    }
                }
            }
        }
        return out;
    }

    friend bool operator==(const SquareMatrix &, const SquareMatrix &) = default;

    bool is_zero() const
    {
        for (const auto &e : m_entries) {
            if (!is_zero_entry(e)) {
                return false;
            }
        }
        return true;
    }

private:
    std::size_t offset(std::size_t r, std::size_t s) const
    {
        if (r == 0 || s == 0 || r > m_size || s > m_size) {
            throw Error(ErrorCode::IndexOutOfRange, "matrix position (" + std::to_string(r) + "," +
                                                        std::to_string(s) + ") outside a " + std::to_string(m_size) +
                                                        "x" + std::to_string(m_size) + " matrix");
        }
        return (r - 1) * m_size + (s - 1);
    }

    static void same_size(const SquareMatrix &a, const SquareMatrix &b)
    {
        if (a.m_size != b.m_size) {
            throw Error(ErrorCode::SizeMismatch,
                        std::to_string(a.m_size) + "x" + std::to_string(a.m_size) + " against " +
                            std::to_string(b.m_size) + "x" + std::to_string(b.m_size));
        }
    }

    static bool is_zero_entry(const T &e)
    {
        if constexpr (requires { e.is_zero(); }) {
            return e.is_zero();
        } else {
            return e == T(0);
        }
    }

    std::size_t m_size = 0;
    std::vector<T> m_entries;
};

template <typename T>
SquareMatrix<T> commutator(const SquareMatrix<T> &a, const SquareMatrix<T> &b)
{
    return a * b - b * a;
}

template <typename T>
T trace(const SquareMatrix<T> &m)
{
    T sum(0);
    for (std::size_t i = 1; i <= m.size(); ++i) {
        sum += m(i, i);
    }
    return sum;
}

} // namespace bbsyz
