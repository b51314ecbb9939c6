#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "bbsyz/error.hpp"
#include "bbsyz/ordered_product.hpp"

namespace bbsyz {

/// Element of the free associative ring Z<m_1, ..., m_n>: words to coefficients.
class WordPoly
{
public:
    WordPoly() = default;
    explicit WordPoly(Word w, long long coeff = 1)
    {
        if (coeff != 0) {
            m_terms.emplace(std::move(w), coeff);
        }
    }

    const std::map<Word, long long> &terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }

    WordPoly &operator+=(const WordPoly &o)
    {
        for (const auto &[w, c] : o.m_terms) {
            add(w, c);
        }
        return *this;
    }
    WordPoly &operator-=(const WordPoly &o)
    {
        for (const auto &[w, c] : o.m_terms) {
            add(w, -c);
        }
        return *this;
    }
    friend WordPoly operator+(WordPoly a, const WordPoly &b) { return a += b; }
    friend WordPoly operator-(WordPoly a, const WordPoly &b) { return a -= b; }

    friend WordPoly operator*(const WordPoly &a, const WordPoly &b)
    {
        WordPoly out;
        for (const auto &[wa, ca] : a.m_terms) {
            for (const auto &[wb, cb] : b.m_terms) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                out.add(w, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const WordPoly &, const WordPoly &) = default;

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        bool first = true;
        for (const auto &[w, c] : m_terms) {
            const long long mag = c < 0 ? -c : c;
            s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            if (mag != 1 || w.empty()) {
                s += std::to_string(mag);
            }
            for (std::size_t i = 0; i < w.size(); ++i) {
                s += (i || mag != 1 ? "*m" : "m") + std::to_string(w[i]);
            }
            first = false;
        }
        return s;
    }

private:
    void add(const Word &w, long long c)
    {
        auto [it, inserted] = m_terms.emplace(w, c);
        if (!inserted) {
            it->second += c;
        }
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }

    std::map<Word, long long> m_terms;
};

inline WordPoly letter(std::size_t k) { return WordPoly(Word{k}); }
inline WordPoly word_commutator(const WordPoly &a, const WordPoly &b) { return a * b - b * a; }

/// sum_v m_{l_1}..m_{l_{v-1}} [m_k, m_{l_v}] m_{l_{v+1}}..m_{l_{s-1}}, the l's being Pi without its left-most k.
inline WordPoly telescoping_sum(const OrderedProduct &pi, std::size_t k)
{
    const Word rest = delete_leftmost(pi, k);
    WordPoly sum;
    for (std::size_t v = 0; v < rest.size(); ++v) {
        const Word prefix(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(v));
        const Word suffix(rest.begin() + static_cast<std::ptrdiff_t>(v) + 1, rest.end());
        sum += WordPoly(prefix) * word_commutator(letter(k), letter(rest[v])) * WordPoly(suffix);
    }
    return sum;
}

/// Checks that the telescoping sum collapses to [m_k, word(Pi without its left-most k)].
inline bool free_telescope_check(std::size_t n, const OrderedProduct &pi, std::size_t k)
{
    if (pi.max_index() > n || k == 0 || k > n) {
        throw Error(ErrorCode::IndexOutOfRange, pi.to_string() + " with k = " + std::to_string(k) +
                                                    " exceeds n = " + std::to_string(n));
    }
    const WordPoly rhs = word_commutator(letter(k), WordPoly(delete_leftmost(pi, k)));
    return telescoping_sum(pi, k) == rhs;
}

} // namespace bbsyz
