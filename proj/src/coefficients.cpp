#include "ghseries/coefficients.hpp"

#include "ghseries/errors.hpp"
#include "ghseries/series.hpp"

namespace ghseries {

namespace {

Rational from_size(std::size_t v) { return Rational(static_cast<long>(v)); }

} // namespace

Rational ExpPolySpec::a_at(std::size_t i) const {
    return i >= 2 && i - 2 < a.size() ? a[i - 2] : Rational{};
}

HVector ExpPolySpec::h() const {
    std::vector<Rational> h;
    h.reserve(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        h.push_back(a[s] / from_size(s + 2));
    }
    return HVector(std::move(h));
}

bool ExpPolySpec::satisfies_positivity() const {
    if (x.sign() <= 0) {
        return false;
    }
    for (const auto& ai : a) {
        if (ai.sign() <= 0) {
            return false;
        }
    }
    return true;
}

void ExpPolySpec::validate() const {
    if (N == 0) {
        throw InputError("truncation order N must be >= 1");
    }
}

XSequence x_from_series(const ExpPolySpec& spec) {
    spec.validate();
    const HVector h = spec.h();
    std::vector<Monomial> terms{{1, spec.x}};
    for (std::size_t i = 2; i <= spec.p() && i <= spec.N; ++i) {
        terms.push_back({i, h[i]});
    }
    const TruncatedSeries f = ts_exp(ts_from_poly(terms, spec.N));

    XSequence seq{spec, {}, {Rational(1)}, SequenceRoute::Series};
    seq.xs.reserve(spec.N);
    seq.factorials.reserve(spec.N + 1);
    for (std::size_t n = 1; n <= spec.N; ++n) {
        const Rational& c = f.coeff(n);
        if (c.is_zero()) {
            throw DegenerateInstance(n, "Taylor coefficient c_n vanishes, x_n! undefined");
        }
        seq.xs.push_back(f.coeff(n - 1) / c);
        seq.factorials.push_back(Rational(1) / c);
    }
    return seq;
}

XSequence x_from_recurrence(const ExpPolySpec& spec) {
    spec.validate();
    XSequence seq{spec, {}, {Rational(1)}, SequenceRoute::Recurrence};
    seq.xs.reserve(spec.N);
    seq.factorials.reserve(spec.N + 1);
    auto& fact = seq.factorials;

    for (std::size_t n = 0; n < spec.N; ++n) {
        Rational denom = spec.x;
        for (std::size_t k = 2; k <= spec.p() && k <= n + 1; ++k) {
            const Rational& ak = spec.a[k - 2];
            if (ak.is_zero()) {
                continue;
            }
            denom += ak * (fact[n] / fact[n + 1 - k]);
        }
        if (denom.is_zero()) {
            throw DegenerateInstance(n + 1, "recurrence denominator vanishes");
        }
        Rational next = from_size(n + 1) / denom;
        fact.push_back(fact[n] * next);
        seq.xs.push_back(std::move(next));
    }
    return seq;
}

EquivalenceReport verify_equivalence(const ExpPolySpec& spec) {
    EquivalenceReport report{x_from_series(spec), x_from_recurrence(spec), true, std::nullopt};
    for (std::size_t n = 1; n <= spec.N; ++n) {
        if (report.series.xs[n - 1] != report.recurrence.xs[n - 1] ||
            report.series.factorials[n] != report.recurrence.factorials[n]) {
            report.equal = false;
            report.first_mismatch = n;
            break;
        }
    }
    return report;
}

ConjectureReport conjecture_as_stated_check(const ExpPolySpec& spec) {
    if (spec.x != Rational(1)) {
        throw InputError("the stated recurrence is only defined for x = 1, got x = " +
                         spec.x.to_string());
    }
    const XSequence seq = x_from_series(spec);
    const auto& fact = seq.factorials;

    ConjectureReport report;
    for (std::size_t n = 1; n <= spec.N; ++n) {
        Rational literal(1);
        for (std::size_t i = 2; i <= spec.p() && i <= n + 1; ++i) {
            literal += spec.a_at(i) * (fact[n] / fact[n + 1 - i]);
        }
        Rational shifted = spec.x;
        for (std::size_t k = 2; k <= spec.p() && k <= n; ++k) {
            shifted += spec.a_at(k) * (fact[n - 1] / fact[n - k]);
        }
        const Rational& xn = seq.x_at(n);
        ConjectureRow row{n, xn * literal == from_size(n + 1), xn * shifted == from_size(n)};
        if (!row.literal_holds && !report.first_literal_failure) {
            report.first_literal_failure = n;
        }
        if (!row.shifted_holds && !report.first_shifted_failure) {
            report.first_shifted_failure = n;
        }
        report.rows.push_back(row);
    }
    return report;
}

} // namespace ghseries
