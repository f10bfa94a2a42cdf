#include "ghseries/gould_hopper.hpp"

#include <string>

#include "ghseries/errors.hpp"
#include "ghseries/series.hpp"

namespace ghseries {

namespace {

Rational from_size(std::size_t v) { return Rational(static_cast<long>(v)); }

/// n (n-1) ... (n-k+1); 1 when k == 0.
mpz_class falling_factorial(std::size_t n, std::size_t k) {
    mpz_class r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<unsigned long>(n - i);
    }
    return r;
}

/// powers[i][e] = h_i^e for e <= max_exp, i = 2..p (index 0 and 1 unused).
std::vector<std::vector<Rational>> power_table(const HVector& h, std::size_t max_exp) {
    std::vector<std::vector<Rational>> table(h.p() + 1);
    for (std::size_t i = 2; i <= h.p(); ++i) {
        const std::size_t top = max_exp / i;
        auto& row = table[i];
        row.reserve(top + 1);
        row.emplace_back(1);
        for (std::size_t e = 1; e <= top; ++e) {
            row.push_back(row.back() * h[i]);
        }
    }
    return table;
}

void visit_multi_index(std::size_t p, std::size_t slot, std::size_t remaining, std::size_t weight,
                       std::vector<std::size_t>& idx,
                       const std::function<void(std::span<const std::size_t>, std::size_t)>& visit) {
    if (slot == idx.size()) {
        visit(idx, weight);
        return;
    }
    const std::size_t i = slot + 2;
    for (std::size_t e = 0; e * i <= remaining; ++e) {
        idx[slot] = e;
        visit_multi_index(p, slot + 1, remaining - e * i, weight + e * i, idx, visit);
    }
    idx[slot] = 0;
}

/// n!/((n-m)! prod p_i!) prod h_i^{p_i}, the coefficient of x^{n-m}.
Rational multi_index_term(std::size_t n, std::span<const std::size_t> idx, std::size_t weight,
                          const std::vector<mpz_class>& fact,
                          const std::vector<std::vector<Rational>>& powers) {
    mpz_class denom = fact[n - weight];
    for (const std::size_t e : idx) {
        denom *= fact[e];
    }
    mpz_class coef;
    mpz_divexact(coef.get_mpz_t(), fact[n].get_mpz_t(), denom.get_mpz_t());
    Rational term(coef);
    for (std::size_t s = 0; s < idx.size(); ++s) {
        if (idx[s] != 0) {
            term *= powers[s + 2][idx[s]];
        }
    }
    return term;
}

std::vector<mpz_class> factorial_table(std::size_t n) {
    std::vector<mpz_class> fact(n + 1);
    fact[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        fact[i] = fact[i - 1] * static_cast<unsigned long>(i);
    }
    return fact;
}

} // namespace

HVector HVector::from_map(const std::map<std::size_t, Rational>& entries) {
    if (entries.empty()) {
        return HVector{};
    }
    if (entries.begin()->first < 2) {
        throw InputError("h indices start at 2, got " + std::to_string(entries.begin()->first));
    }
    std::vector<Rational> values(entries.rbegin()->first - 1);
    for (const auto& [i, v] : entries) {
        values[i - 2] = v;
    }
    return HVector(std::move(values));
}

Rational HVector::operator[](std::size_t i) const {
    if (i < 2) {
        throw InputError("h index must be >= 2, got " + std::to_string(i));
    }
    return i - 2 < values_.size() ? values_[i - 2] : Rational{};
}

bool HVector::is_zero() const {
    for (const auto& v : values_) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

std::string_view route_name(Route r) {
    switch (r) {
    case Route::Moment:
        return "moment";
    case Route::Operator:
        return "operator";
    case Route::GenFunc:
        return "genfunc";
    case Route::Recurrence:
        return "recurrence";
    }
    return "?";
}

Rational GHPolyCoeffs::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_in_x.rbegin(); it != coeffs_in_x.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Rational z_moment(std::size_t j, std::size_t k) {
    if (j == 0) {
        throw InputError("z_moment needs j >= 1");
    }
    if (k % j != 0) {
        return Rational{};
    }
    // (pj)!/p! = (pj)(pj-1)...(p+1)
    const std::size_t p = k / j;
    return Rational(falling_factorial(k, k - p));
}

bool cf_truncation_check(std::size_t j, std::size_t K) {
    if (j == 0) {
        throw InputError("cf_truncation_check needs j >= 1");
    }
    std::vector<Monomial> terms;
    if (j <= K) {
        terms.push_back({j, Rational(1)});
    }
    const TruncatedSeries cf = ts_exp(ts_from_poly(terms, K));
    for (std::size_t k = 0; k <= K; ++k) {
        if (z_moment(j, k) / Rational::factorial(k) != cf.coeff(k)) {
            return false;
        }
    }
    return true;
}

void for_each_multi_index(std::size_t p, std::size_t max_weight,
                          const std::function<void(std::span<const std::size_t>, std::size_t)>& visit) {
    std::vector<std::size_t> idx(p >= 2 ? p - 1 : 0, 0);
    visit_multi_index(p, 0, max_weight, 0, idx, visit);
}

GHValue gh_moment_route(std::size_t n, const Rational& x, const HVector& h) {
    // Every term is scaled by L = den(x)^n prod den(h_i)^{n/i} so the sum runs
    // over integers; one division at the end.
    const auto fact = factorial_table(n);
    const auto int_powers = [](const mpz_class& base, std::size_t top) {
        std::vector<mpz_class> out(top + 1);
        out[0] = 1;
        for (std::size_t e = 1; e <= top; ++e) {
            out[e] = out[e - 1] * base;
        }
        return out;
    };
    const auto x_num = int_powers(x.numerator(), n);
    const auto x_den = int_powers(x.denominator(), n);
    mpz_class scale = x_den[n];

    std::vector<std::vector<mpz_class>> h_num(h.p() + 1);
    std::vector<std::vector<mpz_class>> h_den(h.p() + 1);
    for (std::size_t i = 2; i <= h.p(); ++i) {
        const Rational hi = h[i];
        h_num[i] = int_powers(hi.numerator(), n / i);
        h_den[i] = int_powers(hi.denominator(), n / i);
        scale *= h_den[i].back();
    }

    mpz_class sum = 0;
    mpz_class term;
    OpCounts ops;
    for_each_multi_index(h.p(), n, [&](std::span<const std::size_t> idx, std::size_t weight) {
        mpz_class denom = fact[n - weight];
        for (const std::size_t e : idx) {
            denom *= fact[e];
        }
        mpz_divexact(term.get_mpz_t(), fact[n].get_mpz_t(), denom.get_mpz_t());
        term *= x_num[n - weight];
        term *= x_den[weight];
        for (std::size_t s = 0; s < idx.size(); ++s) {
            const std::size_t i = s + 2;
            term *= h_num[i][idx[s]];
            term *= h_den[i][n / i - idx[s]];
        }
        sum += term;
        ops.add += 1;
        ops.div += 1;
        ops.mul += 2 + 3 * idx.size();
    });
    tally_ops(ops);
    return GHValue{n, x, h, Rational(sum, scale), Route::Moment};
}

GHValue gh_operator_route(std::size_t n, const Rational& x, const HVector& h) {
    // poly[d] = coefficient of x^d; start from x^n.
    std::vector<Rational> poly(n + 1);
    poly[n] = Rational(1);
    const auto fact = factorial_table(n);

    for (std::size_t i = 2; i <= h.p(); ++i) {
        const Rational hi = h[i];
        if (hi.is_zero()) {
            continue;
        }
        std::vector<Rational> next(n + 1);
        Rational scale(1); // h_i^m / m!
        for (std::size_t m = 0; m * i <= n; ++m) {
            if (m > 0) {
                scale = scale * hi / from_size(m);
            }
            const std::size_t order = m * i;
            // D^order x^{r+order} = (r+order)!/r! x^r
            for (std::size_t r = 0; r + order <= n; ++r) {
                const Rational& c = poly[r + order];
                if (c.is_zero()) {
                    continue;
                }
                next[r] += scale * c * Rational(mpz_class(fact[r + order] / fact[r]));
            }
        }
        poly = std::move(next);
    }

    const GHPolyCoeffs as_poly{n, h, std::move(poly)};
    return GHValue{n, x, h, as_poly.evaluate(x), Route::Operator};
}

GHValue gh_genfunc_route(std::size_t n, const Rational& x, const HVector& h) {
    std::vector<Monomial> terms;
    if (n >= 1) {
        terms.push_back({1, x});
    }
    for (std::size_t i = 2; i <= h.p() && i <= n; ++i) {
        terms.push_back({i, h[i]});
    }
    const TruncatedSeries f = ts_exp(ts_from_poly(terms, n));
    return GHValue{n, x, h, f.coeff(n) * Rational::factorial(n), Route::GenFunc};
}

std::vector<GHValue> gh_recurrence_route(std::size_t N, const Rational& x, const HVector& h) {
    std::vector<Rational> g(N + 1);
    g[0] = Rational(1);
    for (std::size_t n = 0; n < N; ++n) {
        Rational next = x * g[n];
        for (std::size_t k = 2; k <= h.p() && k <= n + 1; ++k) {
            const Rational hk = h[k];
            if (hk.is_zero()) {
                continue;
            }
            next += from_size(k) * hk * Rational(falling_factorial(n, k - 1)) * g[n + 1 - k];
        }
        g[n + 1] = std::move(next);
    }

    std::vector<GHValue> out;
    out.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        out.push_back(GHValue{n, x, h, std::move(g[n]), Route::Recurrence});
    }
    return out;
}

GHPolyCoeffs gh_poly_coeffs(std::size_t n, const HVector& h) {
    const auto fact = factorial_table(n);
    const auto powers = power_table(h, n);
    std::vector<Rational> coeffs(n + 1);
    for_each_multi_index(h.p(), n, [&](std::span<const std::size_t> idx, std::size_t weight) {
        coeffs[n - weight] += multi_index_term(n, idx, weight, fact, powers);
    });
    return GHPolyCoeffs{n, h, std::move(coeffs)};
}

Rational stein_lhs(std::size_t n, std::size_t k, const Rational& x, const HVector& c) {
    const std::size_t p = c.p();
    const auto fact = factorial_table(n);

    // Exponents q_2..q_p of c_i Z_i; x takes the remaining n - sum q_i.
    std::vector<std::size_t> q(p - 1, 0);
    Rational sum;
    const std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t left) {
        if (slot == q.size()) {
            Rational moment(1);
            mpz_class denom = fact[left];
            for (std::size_t s = 0; s < q.size(); ++s) {
                const std::size_t i = s + 2;
                const std::size_t e = q[s] + (i == k ? 1 : 0);
                moment *= z_moment(i, e);
                if (moment.is_zero()) {
                    return;
                }
                moment *= pow(c[i], q[s]);
                denom *= fact[q[s]];
            }
            sum += Rational(fact[n], denom) * pow(x, left) * moment;
            return;
        }
        for (std::size_t e = 0; e <= left; ++e) {
            q[slot] = e;
            rec(slot + 1, left - e);
        }
        q[slot] = 0;
    };
    rec(0, n);
    return sum;
}

Rational stein_rhs(std::size_t n, std::size_t k, const Rational& x, const HVector& c) {
    if (n + 1 < k) {
        return Rational{};
    }
    std::vector<Rational> h(c.p() - 1);
    for (std::size_t i = 2; i <= c.p(); ++i) {
        h[i - 2] = pow(c[i], i);
    }
    const Rational g = gh_moment_route(n + 1 - k, x, HVector(std::move(h))).value;
    return from_size(k) * pow(c[k], k - 1) * Rational(falling_factorial(n, k - 1)) * g;
}

bool stein_check(std::size_t n, std::size_t k, const Rational& x, const HVector& c) {
    if (k < 2 || k > c.p()) {
        throw InputError("stein_check needs 2 <= k <= p, got k = " + std::to_string(k) +
                         ", p = " + std::to_string(c.p()));
    }
    return stein_lhs(n, k, x, c) == stein_rhs(n, k, x, c);
}

CrossCheckReport gh_cross_check(std::size_t n, const Rational& x, const HVector& h,
                                std::span<const Route> routes) {
    CrossCheckReport report{n, x, h, {}, true};
    for (const Route r : kAllRoutes) {
        bool wanted = false;
        for (const Route s : routes) {
            wanted = wanted || s == r;
        }
        if (!wanted) {
            continue;
        }
        switch (r) {
        case Route::Moment:
            report.values.push_back(gh_moment_route(n, x, h));
            break;
        case Route::Operator:
            report.values.push_back(gh_operator_route(n, x, h));
            break;
        case Route::GenFunc:
            report.values.push_back(gh_genfunc_route(n, x, h));
            break;
        case Route::Recurrence:
            report.values.push_back(std::move(gh_recurrence_route(n, x, h).back()));
            break;
        }
    }
    for (const auto& v : report.values) {
        report.all_equal = report.all_equal && v.value == report.values.front().value;
    }
    return report;
}

} // namespace ghseries
