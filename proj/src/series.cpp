#include "ghseries/series.hpp"

#include <string>

#include "ghseries/errors.hpp"

namespace ghseries {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw InputError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()));
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw InputError("a truncated series needs at least one coefficient");
    }
}

const Rational& TruncatedSeries::coeff(std::size_t n) const {
    if (n > order()) {
        throw InputError("coefficient index " + std::to_string(n) + " exceeds order " +
                         std::to_string(order()));
    }
    return coeffs_[n];
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b.coeffs()[i];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries ts_from_poly(std::span<const Monomial> terms, std::size_t order) {
    std::vector<Rational> coeffs(order + 1);
    std::vector<bool> seen(order + 1, false);
    for (const auto& [degree, c] : terms) {
        if (degree > order) {
            throw InputError("degree " + std::to_string(degree) + " exceeds order " +
                             std::to_string(order));
        }
        if (seen[degree]) {
            throw InputError("duplicate degree " + std::to_string(degree));
        }
        seen[degree] = true;
        coeffs[degree] = c;
    }
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const std::size_t order = a.order();
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<Rational> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            out[n] += ac[k] * bc[n - k];
        }
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries ts_exp(const TruncatedSeries& g) {
    if (!g.coeffs()[0].is_zero()) {
        throw InputError("ts_exp needs a zero constant term, got " + g.coeffs()[0].to_string());
    }
    const std::size_t order = g.order();
    const auto gc = g.coeffs();

    // k * g_k, precomputed once.
    std::vector<Rational> dg(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        dg[k] = Rational(static_cast<long>(k)) * gc[k];
    }

    std::vector<Rational> f(order + 1);
    f[0] = Rational(1);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += dg[k] * f[n - k];
        }
        f[n] = acc / Rational(static_cast<long>(n));
    }
    return TruncatedSeries(std::move(f));
}

const Rational& ts_coeff(const TruncatedSeries& s, std::size_t n) { return s.coeff(n); }

} // namespace ghseries
