#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ghseries {

/// Per-thread tally of exact rational operations. Used by the bench to
/// report machine-independent work counts next to wall times.
struct OpCounts {
    std::uint64_t add = 0; // add and subtract
    std::uint64_t mul = 0; // multiply and integer power
    std::uint64_t div = 0;

    std::uint64_t total() const noexcept { return add + mul + div; }
};

/// Snapshot of the calling thread's counters.
OpCounts op_counts() noexcept;
void reset_op_counts() noexcept;
/// Adds work done outside Rational (e.g. integer-only inner loops).
void tally_ops(const OpCounts& extra) noexcept;

/// Exact rational number, always in lowest terms with positive denominator.
/// Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(long num, unsigned long den);
    explicit Rational(const mpz_class& integer) : q_(integer) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    /// Accepts "p/q" (sign allowed on p only) or a bare integer "p".
    static Rational parse(std::string_view text);

    /// n! as an integer-valued rational.
    static Rational factorial(unsigned long n);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    /// Bits needed for numerator plus denominator; a proxy for operand size.
    std::size_t bit_size() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    const mpq_class& raw() const noexcept { return q_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

/// base^exp for exp >= 0, with 0^0 = 1.
Rational pow(const Rational& base, unsigned long exp);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ghseries
