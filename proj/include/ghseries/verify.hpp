#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ghseries/rational.hpp"

namespace ghseries {

/// Deterministic per-case generator. The stream depends only on
/// (seed, property tag, case index), so cases can run in any order.
class CaseRng {
public:
    CaseRng(std::uint64_t seed, std::uint64_t tag, std::uint64_t index);

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Rational in [lo, hi] with denominator drawn from 1..max_den.
    Rational rational_in(std::int64_t lo, std::int64_t hi, std::int64_t max_den);
    /// num/den with num, den drawn from 1..bound.
    Rational positive_rational(std::int64_t bound);

private:
    std::mt19937_64 engine_;
};

struct PropertyResult {
    std::string name;
    std::string ranges; // sampling ranges, for the report header
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::optional<std::string> first_failure; // description of the lowest failing case

    bool ok() const noexcept { return passed == cases; }
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::size_t cases = 100;
    unsigned threads = 0; // 0 = hardware concurrency
};

// Each battery runs `cases` independent random instances.
PropertyResult verify_route_equality(const VerifyOptions& opt);
PropertyResult verify_monic_sparsity(const VerifyOptions& opt);
PropertyResult verify_stein(const VerifyOptions& opt);
PropertyResult verify_cf_truncation(const VerifyOptions& opt);
PropertyResult verify_conjecture_equivalence(const VerifyOptions& opt);

/// All batteries, in a fixed order.
std::vector<PropertyResult> run_verify(const VerifyOptions& opt);

/// True when m = sum i*p_i has a solution with p_i >= 0, i in 2..p.
bool weight_representable(std::size_t m, std::size_t p);

} // namespace ghseries
