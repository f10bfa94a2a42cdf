#include "ghseries/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "ghseries/gould_hopper.hpp"

namespace ghseries {

namespace {

/// `run` returns the bit size of its result.
RouteTiming time_route(std::string route, std::string scope, std::size_t repeats,
                       const std::function<std::size_t()>& run) {
    RouteTiming t{std::move(route), std::move(scope), {}, 0, 0, {}, 0};
    for (std::size_t r = 0; r < repeats; ++r) {
        reset_op_counts();
        const auto start = std::chrono::steady_clock::now();
        t.result_bits = run();
        const auto stop = std::chrono::steady_clock::now();
        t.ops = op_counts();
        t.seconds.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::vector<double> sorted = t.seconds;
    std::sort(sorted.begin(), sorted.end());
    t.min_seconds = sorted.front();
    const std::size_t mid = sorted.size() / 2;
    t.median_seconds = sorted.size() % 2 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2;
    return t;
}

} // namespace

BenchReport run_bench(const ExpPolySpec& spec, std::size_t repeats) {
    spec.validate();
    repeats = std::max<std::size_t>(repeats, 1);
    BenchReport report{spec, repeats, {}};

    report.routes.push_back(time_route("recurrence", "x_1..x_N", repeats, [&] {
        return x_from_recurrence(spec).factorials.back().bit_size();
    }));
    report.routes.push_back(time_route("genfunc", "x_1..x_N", repeats, [&] {
        return x_from_series(spec).factorials.back().bit_size();
    }));
    const HVector h = spec.h();
    report.routes.push_back(time_route("moment", "g_N only", repeats, [&] {
        return gh_moment_route(spec.N, spec.x, h).value.bit_size();
    }));
    return report;
}

} // namespace ghseries
