#include <doctest.h>

#include "ghseries/bench.hpp"

using namespace ghseries;

namespace {

ExpPolySpec spec_with_n(std::size_t N) {
    ExpPolySpec s;
    s.x = Rational(1);
    s.a = {Rational(1), Rational(1)};
    s.N = N;
    return s;
}

} // namespace

TEST_CASE("bench reports three routes with repeat statistics") {
    const auto rep = run_bench(spec_with_n(20), 3);
    REQUIRE(rep.routes.size() == 3);
    CHECK(rep.routes[0].route == "recurrence");
    CHECK(rep.routes[1].route == "genfunc");
    CHECK(rep.routes[2].route == "moment");
    for (const auto& t : rep.routes) {
        CHECK(t.seconds.size() == 3);
        CHECK(t.min_seconds <= t.median_seconds);
        CHECK(t.ops.total() > 0);
        CHECK(t.result_bits > 0);
    }
    // Both sequence routes end at the same x_N!.
    CHECK(rep.routes[0].result_bits == rep.routes[1].result_bits);
}

TEST_CASE("operation counts grow quadratically for genfunc and linearly for recurrence") {
    const auto small = run_bench(spec_with_n(100), 1);
    const auto large = run_bench(spec_with_n(200), 1);
    const double rec_ratio = static_cast<double>(large.routes[0].ops.total()) / small.routes[0].ops.total();
    const double gf_ratio = static_cast<double>(large.routes[1].ops.total()) / small.routes[1].ops.total();
    CHECK(rec_ratio < 2.2);
    CHECK(gf_ratio > 3.8);
    CHECK(gf_ratio > rec_ratio);
    CHECK(small.routes[0].ops.total() < small.routes[1].ops.total());
}
