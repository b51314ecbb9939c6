#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace bbsyz {

/// Exact rational. Values that are integers fitting in 64 bits stay inline;
/// anything else (overflow, proper fractions) lives in a GMP rational.
class Rational
{
public:
    Rational() = default;
    Rational(int v) : m_small(v) {}
    Rational(long v) : m_small(v) {}
    Rational(long long v) : m_small(v) {}
    explicit Rational(const mpq_class &q) : m_big(std::make_unique<mpq_class>(q)) { m_big->canonicalize(), demote(); }
    explicit Rational(const mpz_class &z) : Rational(mpq_class(z)) {}
    Rational(const mpz_class &num, const mpz_class &den) : Rational(mpq_class(num, den)) {}

    Rational(const Rational &o) : m_small(o.m_small), m_big(o.m_big ? std::make_unique<mpq_class>(*o.m_big) : nullptr) {}
    Rational(Rational &&) noexcept = default;
    Rational &operator=(const Rational &o)
    {
        if (this != &o) {
            m_small = o.m_small;
            m_big = o.m_big ? std::make_unique<mpq_class>(*o.m_big) : nullptr;
        }
        return *this;
    }
    Rational &operator=(Rational &&) noexcept = default;

    mpq_class to_mpq() const { return m_big ? *m_big : mpq_class(mpz_class(static_cast<signed long>(m_small))); }

    bool is_integer() const { return !m_big || m_big->get_den() == 1; }
    mpz_class numerator() const { return m_big ? mpz_class(m_big->get_num()) : mpz_class(static_cast<signed long>(m_small)); }
    mpz_class denominator() const { return m_big ? mpz_class(m_big->get_den()) : mpz_class(1); }
    int sign() const { return m_big ? sgn(*m_big) : (m_small > 0) - (m_small < 0); }
    std::string str() const { return m_big ? m_big->get_str() : std::to_string(m_small); }

    Rational operator-() const
    {
        if (!m_big && m_small != std::numeric_limits<std::int64_t>::min()) {
            return Rational(static_cast<long long>(-m_small));
        }
        return Rational(mpq_class(-to_mpq()));
    }

    Rational &operator+=(const Rational &o)
    {
        std::int64_t r;
        if (!m_big && !o.m_big && !__builtin_add_overflow(m_small, o.m_small, &r)) {
            m_small = r;
            return *this;
        }
        return *this = Rational(mpq_class(to_mpq() + o.to_mpq()));
    }
    Rational &operator-=(const Rational &o)
    {
        std::int64_t r;
        if (!m_big && !o.m_big && !__builtin_sub_overflow(m_small, o.m_small, &r)) {
            m_small = r;
            return *this;
        }
        return *this = Rational(mpq_class(to_mpq() - o.to_mpq()));
    }
    Rational &operator*=(const Rational &o)
    {
        std::int64_t r;
        if (!m_big && !o.m_big && !__builtin_mul_overflow(m_small, o.m_small, &r)) {
            m_small = r;
            return *this;
        }
        return *this = Rational(mpq_class(to_mpq() * o.to_mpq()));
    }
    // Division by zero is a caller bug; GMP aborts on it.
    Rational &operator/=(const Rational &o)
    {
        if (!m_big && !o.m_big && o.m_small != 0 && o.m_small != -1 && m_small % o.m_small == 0) {
            m_small /= o.m_small;
            return *this;
        }
        return *this = Rational(mpq_class(to_mpq() / o.to_mpq()));
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        if (!a.m_big && !b.m_big) {
            return a.m_small == b.m_small;
        }
        // both canonical: a big value is never a 64-bit integer
        if (!a.m_big || !b.m_big) {
            return false;
        }
        return *a.m_big == *b.m_big;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        if (!a.m_big && !b.m_big) {
            return a.m_small <=> b.m_small;
        }
        const int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    void demote()
    {
        if (m_big && m_big->get_den() == 1 && m_big->get_num().fits_slong_p()) {
            m_small = m_big->get_num().get_si();
            m_big.reset();
        }
    }

    std::int64_t m_small = 0;
    std::unique_ptr<mpq_class> m_big; // set iff the value is not a 64-bit integer
};

} // namespace bbsyz
