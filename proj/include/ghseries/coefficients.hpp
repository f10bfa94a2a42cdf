#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ghseries/gould_hopper.hpp"
#include "ghseries/rational.hpp"

namespace ghseries {

/// The instance exp(x t + sum_{i=2..p} a_i/i t^i) truncated at t^N.
struct ExpPolySpec {
    Rational x{1};
    std::vector<Rational> a; // a[0] is a_2, a[1] is a_3, ...
    std::size_t N = 1;

    std::size_t p() const noexcept { return a.size() + 1; }
    /// a_i for i >= 2, zero past p.
    Rational a_at(std::size_t i) const;
    /// h_i = a_i / i.
    HVector h() const;
    /// x > 0 and every a_i > 0.
    bool satisfies_positivity() const;
    /// Throws InputError when N == 0.
    void validate() const;
};

enum class SequenceRoute { Series, Recurrence };

/// x_1..x_N of the instance and the running products x_n! = x_1 ... x_n.
struct XSequence {
    ExpPolySpec spec;
    std::vector<Rational> xs;         // xs[n-1] = x_n, n = 1..N
    std::vector<Rational> factorials; // factorials[n] = x_n!, factorials[0] = 1
    SequenceRoute route;

    const Rational& x_at(std::size_t n) const { return xs.at(n - 1); }
};

/// x_n! = 1/c_n and x_n = c_{n-1}/c_n from the Taylor coefficients c_n.
/// Throws DegenerateInstance at the first zero coefficient.
XSequence x_from_series(const ExpPolySpec& spec);

/// x_{n+1} = (n+1) / (x + sum_k a_k x_n!/x_{n+1-k}!), summands with
/// n+1-k < 0 omitted. Throws DegenerateInstance on a zero denominator.
XSequence x_from_recurrence(const ExpPolySpec& spec);

struct EquivalenceReport {
    XSequence series;
    XSequence recurrence;
    bool equal;
    std::optional<std::size_t> first_mismatch; // n of the first differing x_n or x_n!
};

EquivalenceReport verify_equivalence(const ExpPolySpec& spec);

struct ConjectureRow {
    std::size_t n;
    bool literal_holds; // x_n (1 + sum a_i x_n!/x_{n-i+1}!) == n + 1
    bool shifted_holds; // x_n (x + sum a_k x_{n-1}!/x_{n-k}!) == n
};

struct ConjectureReport {
    std::vector<ConjectureRow> rows; // n = 1..N
    std::optional<std::size_t> first_literal_failure;
    std::optional<std::size_t> first_shifted_failure;
};

/// Tests both the literally indexed recurrence and the shifted recurrence
/// against the series-derived sequence. Requires x == 1.
ConjectureReport conjecture_as_stated_check(const ExpPolySpec& spec);

} // namespace ghseries
