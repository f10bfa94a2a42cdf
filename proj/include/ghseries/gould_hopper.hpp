#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "ghseries/rational.hpp"

namespace ghseries {

/// Parameter vector h = (h_2, ..., h_p). An empty vector means p = 1 (no
/// terms); indices above p read as zero.
class HVector {
public:
    HVector() = default;
    /// values[0] is h_2, values[1] is h_3, ...
    explicit HVector(std::vector<Rational> values) : values_(std::move(values)) {}
    /// Sparse form; missing indices in 2..max key are zero. Keys < 2 throw InputError.
    static HVector from_map(const std::map<std::size_t, Rational>& entries);

    /// Largest index carried (1 when empty).
    std::size_t p() const noexcept { return values_.size() + 1; }
    /// h_i for i >= 2; zero past p.
    Rational operator[](std::size_t i) const;
    bool is_zero() const;
    std::span<const Rational> values() const noexcept { return values_; }

    friend bool operator==(const HVector&, const HVector&) = default;

private:
    std::vector<Rational> values_;
};

enum class Route { Moment, Operator, GenFunc, Recurrence };

inline constexpr std::array<Route, 4> kAllRoutes{Route::Moment, Route::Operator, Route::GenFunc,
                                                 Route::Recurrence};

std::string_view route_name(Route r);

struct GHValue {
    std::size_t n;
    Rational x;
    HVector h;
    Rational value;
    Route route;
};

/// Coefficients of g_n(x, h) as a polynomial in x; coeffs_in_x[d] multiplies x^d.
struct GHPolyCoeffs {
    std::size_t n;
    HVector h;
    std::vector<Rational> coeffs_in_x;

    /// Horner evaluation.
    Rational evaluate(const Rational& x) const;
};

/// E[Z_j^k]: (pj)!/p! when k = pj, otherwise 0.
Rational z_moment(std::size_t j, std::size_t k);

/// Checks z_moment(j,k)/k! against [u^k] exp(u^j) for every k <= K.
bool cf_truncation_check(std::size_t j, std::size_t K);

/// Visits every (p_2, ..., p_p) with p_i >= 0 and sum i*p_i <= max_weight in
/// lexicographic order. The callback receives the multi-index (entry 0 is
/// p_2) and its weight sum i*p_i.
void for_each_multi_index(std::size_t p, std::size_t max_weight,
                          const std::function<void(std::span<const std::size_t>, std::size_t)>& visit);

/// Multinomial expansion of E(x + sum h_i^{1/i} Z_i)^n with the moment law
/// applied, which leaves only integer powers of h_i.
GHValue gh_moment_route(std::size_t n, const Rational& x, const HVector& h);

/// prod_i exp(h_i D^i) applied to x^n, then evaluated at x.
GHValue gh_operator_route(std::size_t n, const Rational& x, const HVector& h);

/// n! [t^n] exp(x t + sum h_i t^i).
GHValue gh_genfunc_route(std::size_t n, const Rational& x, const HVector& h);

/// g_0..g_N from g_{n+1} = x g_n + sum_k k h_k n!/(n-k+1)! g_{n+1-k};
/// terms with n+1-k < 0 are zero.
std::vector<GHValue> gh_recurrence_route(std::size_t N, const Rational& x, const HVector& h);

GHPolyCoeffs gh_poly_coeffs(std::size_t n, const HVector& h);

/// Stein identity for f(y) = y^n with h_i = c_i^i:
///   E(Z_k (x + sum c_i Z_i)^n) == k c_k^{k-1} n!/(n-k+1)! g_{n-k+1}(x, h).
/// `c` holds c_2..c_p; k must lie in 2..p.
bool stein_check(std::size_t n, std::size_t k, const Rational& x, const HVector& c);

/// Left side of the Stein identity, by direct multinomial enumeration.
Rational stein_lhs(std::size_t n, std::size_t k, const Rational& x, const HVector& c);
/// Right side of the Stein identity.
Rational stein_rhs(std::size_t n, std::size_t k, const Rational& x, const HVector& c);

struct CrossCheckReport {
    std::size_t n;
    Rational x;
    HVector h;
    std::vector<GHValue> values; // one per route, in kAllRoutes order
    bool all_equal;
};

/// Runs the selected routes (all four by default) and compares them.
CrossCheckReport gh_cross_check(std::size_t n, const Rational& x, const HVector& h,
                                std::span<const Route> routes = kAllRoutes);

} // namespace ghseries
