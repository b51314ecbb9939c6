#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "bbsyz/error.hpp"

namespace bbsyz {

/// An indeterminate of the coefficient ring: c[i,j] (row i of the order ideal,
/// border column j), the formal stand-in R[k,l;p,q] for a generator, or an
/// ambient x[k]. Packed into one integer so that comparison of keys gives the
/// canonical variable order: c's by (i,j), then R's by (k,l,p,q), then x's.
class Variable
{
public:
    enum class Kind : std::uint64_t { C = 0, R = 1, X = 2 };

    static Variable c(std::size_t i, std::size_t j)
    {
        if (i == 0 || j == 0 || i >= (1ULL << 30) || j >= (1ULL << 30)) {
            throw Error(ErrorCode::IndexOutOfRange, "c-indeterminate indices must be positive");
        }
        return Variable(tag(Kind::C) | (std::uint64_t(i) << 30) | std::uint64_t(j));
    }

    static Variable r(std::size_t k, std::size_t l, std::size_t p, std::size_t q)
    {
        if (k == 0 || k >= l || l >= (1ULL << 12) || p == 0 || q == 0 || p >= (1ULL << 18) || q >= (1ULL << 18)) {
            throw Error(ErrorCode::IndexOutOfRange, "R-indeterminate needs 1 <= k < l and positive p, q");
        }
        return Variable(tag(Kind::R) | (std::uint64_t(k) << 48) | (std::uint64_t(l) << 36) |
                        (std::uint64_t(p) << 18) | std::uint64_t(q));
    }

    static Variable x(std::size_t k)
    {
        if (k == 0) {
            throw Error(ErrorCode::IndexOutOfRange, "x-variable index must be positive");
        }
        return Variable(tag(Kind::X) | std::uint64_t(k));
    }

    Kind kind() const noexcept { return Kind(m_key >> 60); }
    bool is_c() const noexcept { return kind() == Kind::C; }
    bool is_r() const noexcept { return kind() == Kind::R; }
    bool is_x() const noexcept { return kind() == Kind::X; }

    // c[i,j]
    std::size_t row() const noexcept { return (m_key >> 30) & mask(30); }
    std::size_t column() const noexcept { return m_key & mask(30); }
    // R[k,l;p,q]
    std::size_t k() const noexcept { return is_x() ? (m_key & mask(60)) : (m_key >> 48) & mask(12); }
    std::size_t l() const noexcept { return (m_key >> 36) & mask(12); }
    std::size_t p() const noexcept { return (m_key >> 18) & mask(18); }
    std::size_t q() const noexcept { return m_key & mask(18); }

    std::uint64_t key() const noexcept { return m_key; }

    friend auto operator<=>(const Variable &, const Variable &) = default;

    std::string to_string() const
    {
        switch (kind()) {
        case Kind::C:
            return "c[" + std::to_string(row()) + "," + std::to_string(column()) + "]";
        case Kind::R:
            return "R[" + std::to_string(k()) + "," + std::to_string(l()) + ";" + std::to_string(p()) + "," +
                   std::to_string(q()) + "]";
        case Kind::X:
            return "x[" + std::to_string(k()) + "]";
        }
        return "?";
    }

private:
    explicit Variable(std::uint64_t key) : m_key(key) {}
    static constexpr std::uint64_t tag(Kind k) { return std::uint64_t(k) << 60; }
    static constexpr std::uint64_t mask(int bits) { return (std::uint64_t(1) << bits) - 1; }

    std::uint64_t m_key;
};

struct VariableHash {
    std::size_t operator()(const Variable &v) const noexcept { return std::hash<std::uint64_t>{}(v.key()); }
};

} // namespace bbsyz
