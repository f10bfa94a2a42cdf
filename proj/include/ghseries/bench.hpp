#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ghseries/coefficients.hpp"
#include "ghseries/rational.hpp"

namespace ghseries {

struct RouteTiming {
    std::string route;
    std::string scope;          // what the route computed
    std::vector<double> seconds; // one per repeat
    double min_seconds = 0;
    double median_seconds = 0;
    OpCounts ops;               // rational operations of a single run
    std::size_t result_bits = 0; // bit size of the final computed quantity
};

struct BenchReport {
    ExpPolySpec spec;
    std::size_t repeats;
    std::vector<RouteTiming> routes; // recurrence, genfunc, moment
};

/// Times x_from_recurrence, x_from_series and the multinomial g_N on `spec`.
/// Each route runs `repeats` times on the calling thread.
BenchReport run_bench(const ExpPolySpec& spec, std::size_t repeats);

} // namespace ghseries
