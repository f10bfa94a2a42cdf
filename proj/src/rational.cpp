#include "ghseries/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "ghseries/errors.hpp"

namespace ghseries {

namespace {

thread_local OpCounts tls_counts;

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

OpCounts op_counts() noexcept { return tls_counts; }

void reset_op_counts() noexcept { tls_counts = OpCounts{}; }

void tally_ops(const OpCounts& extra) noexcept {
    tls_counts.add += extra.add;
    tls_counts.mul += extra.mul;
    tls_counts.div += extra.div;
}

Rational::Rational(long num, unsigned long den) : q_(num, den) {
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) {
        throw InputError("rational with zero denominator");
    }
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { return InputError("malformed rational '" + std::string(text) + "'"); };

    std::string_view num = text;
    std::string_view den = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (!all_digits(digits) || !all_digits(den)) {
        throw bad();
    }
    // mpz_class rejects a leading '+'.
    const std::string num_str = num.front() == '+' ? std::string(digits) : std::string(num);
    const mpz_class n(num_str, 10);
    const mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw InputError("rational '" + std::string(text) + "' has zero denominator");
    }
    return Rational(n, d);
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    ++tls_counts.add;
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    ++tls_counts.add;
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    ++tls_counts.mul;
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    ++tls_counts.div;
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational pow(const Rational& base, unsigned long exp) {
    ++tls_counts.mul;
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace ghseries
