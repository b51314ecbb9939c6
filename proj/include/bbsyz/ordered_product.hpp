#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bbsyz/error.hpp"
#include "bbsyz/monomial.hpp"

namespace bbsyz {

using Word = std::vector<std::size_t>;

/// A word <k_1, ..., k_s> in variable indices with s >= 2 and at least two
/// distinct letters.
class OrderedProduct
{
public:
    OrderedProduct() = default;
    explicit OrderedProduct(Word indices) : m_indices(std::move(indices))
    {
        if (m_indices.size() < 2) {
            throw Error(ErrorCode::InvalidOrderedProduct, to_string() + " has fewer than two factors");
        }
        for (std::size_t k : m_indices) {
            if (k == 0) {
                throw Error(ErrorCode::InvalidOrderedProduct, to_string() + " uses index 0");
            }
        }
        if (std::set<std::size_t>(m_indices.begin(), m_indices.end()).size() < 2) {
            throw Error(ErrorCode::InvalidOrderedProduct, to_string() + " uses a single variable");
        }
    }

    const Word &indices() const noexcept { return m_indices; }
    std::size_t size() const noexcept { return m_indices.size(); }
    std::size_t max_index() const { return *std::max_element(m_indices.begin(), m_indices.end()); }

    bool contains(std::size_t k) const { return std::find(m_indices.begin(), m_indices.end(), k) != m_indices.end(); }

    MultiDegree multidegree(std::size_t n) const
    {
        if (max_index() > n) {
            throw Error(ErrorCode::IndexOutOfRange, to_string() + " uses a variable beyond n = " + std::to_string(n));
        }
        MultiDegree d(n);
        for (std::size_t k : m_indices) {
            d = d.inc(k);
        }
        return d;
    }

    bool is_rearrangement_of(const OrderedProduct &other) const
    {
        Word a = m_indices, b = other.m_indices;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    std::string to_string() const { return word_to_string(m_indices); }

    static std::string word_to_string(const Word &w)
    {
        std::string s = "<";
        for (std::size_t i = 0; i < w.size(); ++i) {
            s += (i ? "," : "") + std::to_string(w[i]);
        }
        return s + ">";
    }

    friend bool operator==(const OrderedProduct &, const OrderedProduct &) = default;

private:
    Word m_indices;
};

/// Pi with its left-most k removed. The result can be a single letter, so it is a plain word.
inline Word delete_leftmost(const Word &w, std::size_t k)
{
    auto it = std::find(w.begin(), w.end(), k);
    if (it == w.end()) {
        throw Error(ErrorCode::IndexAbsent,
                    "index " + std::to_string(k) + " does not occur in " + OrderedProduct::word_to_string(w));
    }
    Word out(w.begin(), it);
    out.insert(out.end(), std::next(it), w.end());
    return out;
}

inline Word delete_leftmost(const OrderedProduct &pi, std::size_t k) { return delete_leftmost(pi.indices(), k); }

/// Reads "<1,1,2>" (spaces allowed).
inline OrderedProduct parse_ordered_product(std::string_view text)
{
    std::size_t pos = 0;
    auto fail = [&](const std::string &what) -> void { throw ParseError(what, 1, pos + 1); };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    skip();
    if (pos >= text.size() || text[pos] != '<') {
        fail("ordered product must start with '<'");
    }
    ++pos;
    Word w;
    for (;;) {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (start == pos) {
            fail("expected an index");
        }
        if (pos - start > 6) {
            fail("index too large");
        }
        w.push_back(std::stoul(std::string(text.substr(start, pos - start))));
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == '>') {
            ++pos;
            break;
        }
        fail("expected ',' or '>'");
    }
    skip();
    if (pos != text.size()) {
        fail("trailing characters after ordered product");
    }
    return OrderedProduct(std::move(w)); // InvalidOrderedProduct for well-formed but bad words
}

} // namespace bbsyz
