#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ghseries/rational.hpp"

namespace ghseries {

/// A formal power series in t kept up to t^order, with exact coefficients.
/// Invariant: coeffs().size() == order() + 1.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);

    /// Throws InputError when `coeffs` is empty.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of t^n; throws InputError when n > order().
    const Rational& coeff(std::size_t n) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Coefficientwise sum. Orders must match.
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<Rational> coeffs_;
};

struct Monomial {
    std::size_t degree;
    Rational coeff;
};

/// Places the given terms into a series of order `order`.
/// Degrees must be distinct and not exceed `order`.
TruncatedSeries ts_from_poly(std::span<const Monomial> terms, std::size_t order);

/// Truncated Cauchy product. Orders must match.
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// exp(g) for g with zero constant term, via n f_n = sum_{k=1..n} k g_k f_{n-k}.
TruncatedSeries ts_exp(const TruncatedSeries& g);

const Rational& ts_coeff(const TruncatedSeries& s, std::size_t n);

} // namespace ghseries
