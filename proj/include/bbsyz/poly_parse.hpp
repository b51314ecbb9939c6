#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "bbsyz/error.hpp"
#include "bbsyz/poly.hpp"

namespace bbsyz {

namespace detail {

// Recursive-descent reader for the canonical polynomial syntax, e.g.
// "c[1,3]*c[2,1] - c[1,4]", "2*R[1,2;1,1]^2 + 1/2", "(c[1,2] - c[2,5])*x[1]".
class PolyReader
{
public:
    explicit PolyReader(std::string_view text) : m_text(text) {}

    Poly parse()
    {
        Poly p = expression();
        skip_ws();
        if (m_pos != m_text.size()) {
            fail("unexpected '" + std::string(1, m_text[m_pos]) + "'");
        }
        return p;
    }

private:
    Poly expression()
    {
        skip_ws();
        Poly acc;
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = take() == '-';
        }
        acc = negate ? -term() : term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                take();
                acc += term();
            } else if (peek() == '-') {
                take();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term()
    {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') {
                return acc;
            }
            take();
            acc = acc * factor();
        }
    }

    Poly factor()
    {
        skip_ws();
        const char ch = peek();
        Poly base;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Integer num(digits(), 10);
            skip_ws();
            if (peek() == '/') {
                take();
                skip_ws();
                Integer den(digits(), 10);
                if (den == 0) {
                    fail("zero denominator");
                }
                return Poly(make_rational(num, den));
            }
            return Poly(Coefficient(num));
        }
        if (ch == '(') {
            take();
            base = expression();
            skip_ws();
            expect(')');
        } else if (ch == 'c') {
            take();
            expect('[');
            const auto i = index();
            expect(',');
            const auto j = index();
            expect(']');
            base = Poly(make([&] { return Variable::c(i, j); }));
        } else if (ch == 'R') {
            take();
            expect('[');
            const auto k = index();
            expect(',');
            const auto l = index();
            expect(';');
            const auto p = index();
            expect(',');
            const auto q = index();
            expect(']');
            base = Poly(make([&] { return Variable::r(k, l, p, q); }));
        } else if (ch == 'x') {
            take();
            expect('[');
            const auto k = index();
            expect(']');
            base = Poly(make([&] { return Variable::x(k); }));
        } else if (ch == '\0') {
            fail("unexpected end of input");
        } else {
            fail("unexpected '" + std::string(1, ch) + "'");
        }
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            const auto e = index();
            Poly r(1);
            for (std::size_t n = 0; n < e; ++n) {
                r = r * base;
            }
            return r;
        }
        return base;
    }

    template <typename F>
    Variable make(F f)
    {
        const std::size_t at = m_pos;
        try {
            return f();
        } catch (const Error &e) {
            m_pos = at;
            fail(e.what());
        }
    }

    std::string digits()
    {
        skip_ws();
        const std::size_t start = m_pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
        if (start == m_pos) {
            fail("expected a number");
        }
        return std::string(m_text.substr(start, m_pos - start));
    }

    std::size_t index()
    {
        const std::string d = digits();
        if (d.size() > 9) {
            fail("index too large");
        }
        return std::stoul(d);
    }

    void expect(char ch)
    {
        skip_ws();
        if (peek() != ch) {
            fail(std::string("expected '") + ch + "'");
        }
        ++m_pos;
    }

    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }
    char peek() const { return m_pos < m_text.size() ? m_text[m_pos] : '\0'; }
    char take() { return m_text[m_pos++]; }

    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, 1, m_pos + 1); }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace detail

inline Poly parse_poly(std::string_view text) { return detail::PolyReader(text).parse(); }

} // namespace bbsyz
