#include "ghseries/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "ghseries/coefficients.hpp"
#include "ghseries/gould_hopper.hpp"

namespace ghseries {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using CaseFn = std::function<std::optional<std::string>(CaseRng&)>;

std::string describe(const HVector& h) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < h.values().size(); ++i) {
        os << (i ? "," : "") << h.values()[i];
    }
    os << ']';
    return os.str();
}

PropertyResult run_cases(const VerifyOptions& opt, std::uint64_t tag, std::string name,
                         std::string ranges, const CaseFn& body) {
    std::vector<std::optional<std::string>> failures(opt.cases);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < opt.cases; i = next++) {
            CaseRng rng(opt.seed, tag, i);
            try {
                failures[i] = body(rng);
            } catch (const std::exception& e) {
                failures[i] = std::string("exception: ") + e.what();
            }
        }
    };

    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(opt.cases, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    PropertyResult result{std::move(name), std::move(ranges), opt.cases, 0, std::nullopt};
    for (std::size_t i = 0; i < failures.size(); ++i) {
        if (!failures[i]) {
            ++result.passed;
        } else if (!result.first_failure) {
            result.first_failure = "case " + std::to_string(i) + ": " + *failures[i];
        }
    }
    return result;
}

} // namespace

CaseRng::CaseRng(std::uint64_t seed, std::uint64_t tag, std::uint64_t index)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(tag * 0x100000001b3ULL + index))) {}

std::int64_t CaseRng::uniform(std::int64_t lo, std::int64_t hi) {
    // Plain modulo: the bias is negligible for these tiny ranges and, unlike
    // std::uniform_int_distribution, the result is identical on every platform.
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational CaseRng::rational_in(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    const std::int64_t den = uniform(1, max_den);
    const std::int64_t num = uniform(lo * den, hi * den);
    return Rational(static_cast<long>(num), static_cast<unsigned long>(den));
}

Rational CaseRng::positive_rational(std::int64_t bound) {
    const std::int64_t num = uniform(1, bound);
    const std::int64_t den = uniform(1, bound);
    return Rational(static_cast<long>(num), static_cast<unsigned long>(den));
}

bool weight_representable(std::size_t m, std::size_t p) {
    std::vector<bool> reach(m + 1, false);
    reach[0] = true;
    for (std::size_t w = 1; w <= m; ++w) {
        for (std::size_t i = 2; i <= p && i <= w; ++i) {
            if (reach[w - i]) {
                reach[w] = true;
                break;
            }
        }
    }
    return reach[m];
}

PropertyResult verify_route_equality(const VerifyOptions& opt) {
    return run_cases(opt, 1, "route-equality",
                     "n in [0,25], p in [2,5], x in [-3,3], h_i in [0,3], denominators in [1,9]",
                     [](CaseRng& rng) -> std::optional<std::string> {
                         const auto n = static_cast<std::size_t>(rng.uniform(0, 25));
                         const auto p = static_cast<std::size_t>(rng.uniform(2, 5));
                         const Rational x = rng.rational_in(-3, 3, 9);
                         std::vector<Rational> hv;
                         for (std::size_t i = 2; i <= p; ++i) {
                             hv.push_back(rng.rational_in(0, 3, 9));
                         }
                         const HVector h(std::move(hv));
                         if (gh_cross_check(n, x, h).all_equal) {
                             return std::nullopt;
                         }
                         return "n=" + std::to_string(n) + " x=" + x.to_string() + " h=" + describe(h);
                     });
}

PropertyResult verify_monic_sparsity(const VerifyOptions& opt) {
    return run_cases(opt, 2, "monic-sparsity",
                     "n in [0,20], p in [2,4], h_i in [-3,3], denominators in [1,9]",
                     [](CaseRng& rng) -> std::optional<std::string> {
                         const auto n = static_cast<std::size_t>(rng.uniform(0, 20));
                         const auto p = static_cast<std::size_t>(rng.uniform(2, 4));
                         std::vector<Rational> hv;
                         for (std::size_t i = 2; i <= p; ++i) {
                             hv.push_back(rng.rational_in(-3, 3, 9));
                         }
                         const HVector h(std::move(hv));
                         const GHPolyCoeffs poly = gh_poly_coeffs(n, h);
                         const auto where = "n=" + std::to_string(n) + " h=" + describe(h);
                         if (poly.coeffs_in_x.size() != n + 1 || poly.coeffs_in_x[n] != Rational(1)) {
                             return "not monic of degree n: " + where;
                         }
                         for (std::size_t m = 0; m <= n; ++m) {
                             if (!weight_representable(m, p) && !poly.coeffs_in_x[n - m].is_zero()) {
                                 return "forced zero at x^" + std::to_string(n - m) + " violated: " + where;
                             }
                         }
                         return std::nullopt;
                     });
}

PropertyResult verify_stein(const VerifyOptions& opt) {
    return run_cases(opt, 3, "stein-identity",
                     "n in [0,12], 2 <= k <= p <= 4, c_i in [-2,2], x in [-2,2], denominators in [1,9]",
                     [](CaseRng& rng) -> std::optional<std::string> {
                         const auto n = static_cast<std::size_t>(rng.uniform(0, 12));
                         const auto p = static_cast<std::size_t>(rng.uniform(2, 4));
                         const auto k = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(p)));
                         const Rational x = rng.rational_in(-2, 2, 9);
                         std::vector<Rational> cv;
                         for (std::size_t i = 2; i <= p; ++i) {
                             cv.push_back(rng.rational_in(-2, 2, 9));
                         }
                         const HVector c(std::move(cv));
                         if (stein_check(n, k, x, c)) {
                             return std::nullopt;
                         }
                         return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " x=" + x.to_string() +
                                " c=" + describe(c);
                     });
}

PropertyResult verify_cf_truncation(const VerifyOptions& opt) {
    return run_cases(opt, 4, "cf-truncation", "j in [1,6], K in [0,24]",
                     [](CaseRng& rng) -> std::optional<std::string> {
                         const auto j = static_cast<std::size_t>(rng.uniform(1, 6));
                         const auto K = static_cast<std::size_t>(rng.uniform(0, 24));
                         if (cf_truncation_check(j, K)) {
                             return std::nullopt;
                         }
                         return "j=" + std::to_string(j) + " K=" + std::to_string(K);
                     });
}

PropertyResult verify_conjecture_equivalence(const VerifyOptions& opt) {
    return run_cases(opt, 5, "conjecture-equivalence",
                     "p in [2,6], a_i and x = num/den with num, den in [1,20], N = 50",
                     [](CaseRng& rng) -> std::optional<std::string> {
                         ExpPolySpec spec;
                         spec.N = 50;
                         const auto p = static_cast<std::size_t>(rng.uniform(2, 6));
                         spec.x = rng.positive_rational(20);
                         for (std::size_t i = 2; i <= p; ++i) {
                             spec.a.push_back(rng.positive_rational(20));
                         }
                         const EquivalenceReport report = verify_equivalence(spec);
                         if (report.equal) {
                             return std::nullopt;
                         }
                         return "x=" + spec.x.to_string() + " a=" + describe(HVector(spec.a)) +
                                " first mismatch at n=" + std::to_string(*report.first_mismatch);
                     });
}

std::vector<PropertyResult> run_verify(const VerifyOptions& opt) {
    return {verify_route_equality(opt), verify_monic_sparsity(opt), verify_stein(opt),
            verify_cf_truncation(opt), verify_conjecture_equivalence(opt)};
}

} // namespace ghseries
