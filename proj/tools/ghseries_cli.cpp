// ghseries: exact Gould-Hopper polynomials and exp-polynomial coefficient
// sequences from the command line.
//
// Exit codes: 0 all checks pass, 1 mathematical mismatch, 2 input error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghseries/bench.hpp"
#include "ghseries/coefficients.hpp"
#include "ghseries/errors.hpp"
#include "ghseries/gould_hopper.hpp"
#include "ghseries/verify.hpp"
#include "report.hpp"

namespace {

using namespace ghseries;
using cli::Report;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct CommonFlags {
    std::string format;
    bool timestamps = false;
};

struct SpecFlags {
    std::string x = "1";
    std::vector<std::string> list; // --a or --h
    std::optional<std::size_t> p;
    std::size_t N = 10;
};

std::string now_utc() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Parses the positional coefficient list; `fill` pads an absent list when --p is given.
std::vector<Rational> parse_list(const SpecFlags& f, const char* flag, const Rational& fill) {
    std::vector<Rational> out;
    for (const auto& s : f.list) {
        out.push_back(Rational::parse(s));
    }
    if (f.p) {
        if (*f.p < 2) {
            throw InputError("--p must be >= 2");
        }
        if (f.list.empty()) {
            out.assign(*f.p - 1, fill);
        } else if (out.size() != *f.p - 1) {
            throw InputError(std::string(flag) + " has " + std::to_string(out.size()) +
                             " entries but --p " + std::to_string(*f.p) + " needs " +
                             std::to_string(*f.p - 1));
        }
    }
    return out;
}

ExpPolySpec to_spec(const SpecFlags& f, const Rational& fill) {
    ExpPolySpec spec;
    spec.x = Rational::parse(f.x);
    spec.a = parse_list(f, "--a", fill);
    spec.N = f.N;
    spec.validate();
    return spec;
}

std::vector<std::string> as_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) {
        out.push_back(r.to_string());
    }
    return out;
}

void emit(Report& report, const CommonFlags& common) {
    if (common.timestamps) {
        report.timestamp = now_utc();
    }
    std::cout << cli::render(report, cli::parse_format(common.format));
}

int cmd_compute(const SpecFlags& flags, const CommonFlags& common) {
    const ExpPolySpec spec = to_spec(flags, Rational(0));
    const EquivalenceReport eq = verify_equivalence(spec);

    Report report;
    report.command = "compute";
    report.params["x"] = spec.x.to_string();
    report.params["a"] = as_strings(spec.a);
    report.params["N"] = spec.N;
    report.columns = {"n", "x_n", "x_n!", "recurrence_x_n", "recurrence_x_n!"};
    for (std::size_t n = 1; n <= spec.N; ++n) {
        report.rows.push_back({std::to_string(n), eq.series.xs[n - 1].to_string(),
                               eq.series.factorials[n].to_string(), eq.recurrence.xs[n - 1].to_string(),
                               eq.recurrence.factorials[n].to_string()});
    }
    report.summary["equal"] = eq.equal;
    if (eq.first_mismatch) {
        report.summary["first_mismatch"] = *eq.first_mismatch;
    }
    emit(report, common);
    return eq.equal ? kExitOk : kExitMismatch;
}

int cmd_gh_table(const SpecFlags& flags, const std::vector<std::string>& route_names,
                 const CommonFlags& common) {
    const Rational x = Rational::parse(flags.x);
    const HVector h(parse_list(flags, "--h", Rational(0)));
    std::vector<Route> routes;
    for (const auto& name : route_names) {
        bool known = false;
        for (const Route r : kAllRoutes) {
            if (route_name(r) == name) {
                routes.push_back(r);
                known = true;
            }
        }
        if (!known) {
            throw InputError("unknown route '" + name + "'");
        }
    }
    if (routes.empty()) {
        routes.assign(kAllRoutes.begin(), kAllRoutes.end());
    }

    Report report;
    report.command = "gh-table";
    report.params["x"] = x.to_string();
    report.params["h"] = as_strings(std::vector<Rational>(h.values().begin(), h.values().end()));
    report.params["N"] = flags.N;
    report.columns = {"n"};
    bool all_agree = true;
    for (std::size_t n = 0; n <= flags.N; ++n) {
        const CrossCheckReport check = gh_cross_check(n, x, h, routes);
        if (n == 0) {
            for (const auto& v : check.values) {
                report.columns.emplace_back(route_name(v.route));
            }
            report.columns.emplace_back("agree");
        }
        std::vector<std::string> row{std::to_string(n)};
        for (const auto& v : check.values) {
            row.push_back(v.value.to_string());
        }
        row.emplace_back(check.all_equal ? "true" : "false");
        report.rows.push_back(std::move(row));
        all_agree = all_agree && check.all_equal;
    }
    report.summary["all_agree"] = all_agree;
    emit(report, common);
    return all_agree ? kExitOk : kExitMismatch;
}

int cmd_verify(const VerifyOptions& opt, const CommonFlags& common) {
    const auto results = run_verify(opt);

    Report report;
    report.command = "verify";
    report.params["seed"] = opt.seed;
    report.params["cases"] = opt.cases;
    report.params["ranges"] = nlohmann::ordered_json::object();
    report.columns = {"property", "cases", "passed", "status", "first_failure"};
    bool all_ok = true;
    for (const auto& r : results) {
        report.params["ranges"][r.name] = r.ranges;
        report.rows.push_back({r.name, std::to_string(r.cases), std::to_string(r.passed),
                               r.ok() ? "pass" : "FAIL", r.first_failure.value_or("")});
        all_ok = all_ok && r.ok();
    }
    report.summary["all_passed"] = all_ok;
    emit(report, common);
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_bench(const SpecFlags& flags, std::size_t repeats, const CommonFlags& common) {
    const ExpPolySpec spec = to_spec(flags, Rational(1));
    const BenchReport bench = run_bench(spec, repeats);

    const auto ns = [](double s) { return std::to_string(static_cast<long long>(s * 1e9)); };
    Report report;
    report.command = "bench";
    report.params["x"] = spec.x.to_string();
    report.params["a"] = as_strings(spec.a);
    report.params["N"] = spec.N;
    report.params["repeats"] = bench.repeats;
    report.columns = {"route", "scope", "min_ns", "median_ns", "rational_ops", "adds", "muls", "divs",
                      "result_bits"};
    for (const auto& t : bench.routes) {
        report.rows.push_back({t.route, t.scope, ns(t.min_seconds), ns(t.median_seconds),
                               std::to_string(t.ops.total()), std::to_string(t.ops.add),
                               std::to_string(t.ops.mul), std::to_string(t.ops.div),
                               std::to_string(t.result_bits)});
    }
    report.summary["recurrence_faster_than_genfunc"] =
        bench.routes[0].median_seconds < bench.routes[1].median_seconds;
    emit(report, common);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gould-Hopper polynomials and exp-polynomial coefficient sequences"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonFlags common;
    const char* env_format = std::getenv("GHSERIES_FORMAT");
    common.format = env_format && *env_format ? env_format : "text";
    app.add_option("--format", common.format, "json, csv or text (default: $GHSERIES_FORMAT or text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--timestamps", common.timestamps, "Include a UTC timestamp in the output");

    const auto add_spec_flags = [](CLI::App* sub, SpecFlags& f, const char* list_flag, const char* list_help) {
        sub->add_option("--x", f.x, "Rational x")->capture_default_str();
        sub->add_option(list_flag, f.list, list_help)->delimiter(',');
        sub->add_option("--p", f.p, "Largest index p; the list must then have p-1 entries");
        sub->add_option("--N", f.N, "Truncation order")->check(CLI::PositiveNumber)->capture_default_str();
    };

    SpecFlags compute_flags;
    auto* compute = app.add_subcommand("compute", "x_n and x_n! by the series and recurrence routes");
    add_spec_flags(compute, compute_flags, "--a", "a_2,a_3,... (comma separated rationals)");

    SpecFlags table_flags;
    std::vector<std::string> routes;
    auto* table = app.add_subcommand("gh-table", "g_n(x,h) for n = 0..N by every route");
    table->set_help_flag("--help", "Print this help message and exit"); // frees -h for --h
    add_spec_flags(table, table_flags, "--h", "h_2,h_3,... (comma separated rationals)");
    table->add_option("--routes", routes, "Subset of moment,operator,genfunc,recurrence")->delimiter(',');
    table_flags.N = 5;

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Randomized property batteries");
    verify->add_option("--seed", verify_opt.seed, "Seed")->capture_default_str();
    verify->add_option("--cases", verify_opt.cases, "Cases per property")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--threads", verify_opt.threads, "Worker threads (0 = all cores)");

    SpecFlags bench_flags;
    bench_flags.N = 2000;
    bench_flags.p = 3;
    std::size_t repeats = 3;
    auto* bench = app.add_subcommand("bench", "Time the sequence routes (a_i default to 1)");
    add_spec_flags(bench, bench_flags, "--a", "a_2,a_3,... (comma separated rationals)");
    bench->add_option("--repeats", repeats, "Runs per route")->check(CLI::PositiveNumber)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*compute) {
            return cmd_compute(compute_flags, common);
        }
        if (*table) {
            return cmd_gh_table(table_flags, routes, common);
        }
        if (*verify) {
            return cmd_verify(verify_opt, common);
        }
        if (*bench) {
            if (!bench->get_option("--a")->empty() && bench->get_option("--p")->empty()) {
                bench_flags.p.reset();
            }
            return cmd_bench(bench_flags, repeats, common);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DegenerateInstance& e) {
        std::cerr << "error: degenerate instance: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
