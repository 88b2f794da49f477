// SPDX-License-Identifier: MIT
//
// Command-line front end: evaluate the built-in special functions, print
// CNCT convergence tables, compare accelerated against plain summation,
// and query the Lerch distribution family. Output is text, CSV, or JSON
// with identical numeric content (17 significant digits, round-trip safe).
//
// Exit codes: 0 converged, 1 record printed with converged=false or a
// kernel breakdown, 2 usage or domain errors (no record printed).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cnct/accel.hpp"
#include "cnct/condense.hpp"
#include "cnct/distributions.hpp"
#include "cnct/errors.hpp"
#include "cnct/functions.hpp"
#include "cnct/kernel.hpp"

namespace {

using namespace cnct;

// ---------------------------------------------------------------------
// rendering

std::string fmt17(double x) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Plain decimal numbers get their fractional digits grouped in threes,
// easing visual comparison of long mantissas; scientific notation and
// integers pass through.
std::string grouped(const std::string& plain) {
    const auto dot = plain.find('.');
    if (dot == std::string::npos || plain.find_first_of("eE") != std::string::npos) return plain;
    std::string out = plain.substr(0, dot + 1);
    const std::string frac = plain.substr(dot + 1);
    for (std::size_t i = 0; i < frac.size(); ++i) {
        if (i > 0 && i % 3 == 0) out += ' ';
        out += frac[i];
    }
    return out;
}

std::string json_number(double x) {
    if (!std::isfinite(x)) return "null";
    return fmt17(x);
}

struct OutputRecord {
    double value = 0.0;
    double error_estimate = 0.0;
    int order = -1;
    std::int64_t terms_used = 0;
    bool converged = false;
    std::string method;
};

OutputRecord to_record(const AccelResult& r) {
    return {r.value, r.error_estimate, r.order, r.terms_used, r.converged, std::string(to_string(r.method))};
}

constexpr const char* kRecordHeader = "value,error_estimate,order,terms_used,converged,method";

void print_record_text(const OutputRecord& r) {
    std::printf("value          = %s\n", grouped(fmt17(r.value)).c_str());
    std::printf("error_estimate = %s\n", fmt17(r.error_estimate).c_str());
    std::printf("order          = %d\n", r.order);
    std::printf("terms_used     = %lld\n", static_cast<long long>(r.terms_used));
    std::printf("converged      = %s\n", r.converged ? "true" : "false");
    std::printf("method         = %s\n", r.method.c_str());
}

std::string record_csv_row(const OutputRecord& r) {
    std::ostringstream os;
    os << fmt17(r.value) << ',' << fmt17(r.error_estimate) << ',' << r.order << ','
       << r.terms_used << ',' << (r.converged ? "true" : "false") << ',' << r.method;
    return os.str();
}

std::string record_json(const OutputRecord& r) {
    std::ostringstream os;
    os << "{\"value\": " << json_number(r.value)
       << ", \"error_estimate\": " << json_number(r.error_estimate)
       << ", \"order\": " << r.order
       << ", \"terms_used\": " << r.terms_used
       << ", \"converged\": " << (r.converged ? "true" : "false")
       << ", \"method\": \"" << r.method << "\"}";
    return os.str();
}

void print_record(const OutputRecord& r, const std::string& format) {
    if (format == "text") {
        print_record_text(r);
    } else if (format == "csv") {
        std::printf("%s\n%s\n", kRecordHeader, record_csv_row(r).c_str());
    } else {
        std::printf("%s\n", record_json(r).c_str());
    }
}

// ---------------------------------------------------------------------
// series plumbing

struct CommonFlags {
    double tol = 1e-14;
    int max_order = 50;
    std::int64_t max_terms = 10'000'000;
    double scale = 1.0;
    std::string format = "text";

    ToleranceSpec tolerance() const { return {tol, 1e-300, max_order, max_terms}; }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_scale = true) {
    cmd->add_option("--tol", flags.tol, "relative tolerance")->capture_default_str();
    cmd->add_option("--max-order", flags.max_order, "highest transformation order")->capture_default_str();
    cmd->add_option("--max-terms", flags.max_terms, "oracle evaluation budget")->capture_default_str();
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    if (with_scale)
        cmd->add_option("--scale", flags.scale, "multiply series terms by a constant")->capture_default_str();
}

void require_arity(const std::string& function, std::size_t got, std::size_t want) {
    if (got != want)
        throw std::domain_error("function '" + function + "' takes " + std::to_string(want) +
                                " argument(s), got " + std::to_string(got));
}

// term oracle of the named series, with every term scaled
TermOracle make_series_oracle(const std::string& function, const std::vector<double>& args, double scale) {
    TermOracle base;
    if (function == "zeta") {
        require_arity(function, args.size(), 1);
        if (!(args[0] > 1.0)) throw std::domain_error("zeta: requires s > 1");
        base = zeta_term(args[0]);
    } else if (function == "hurwitz") {
        require_arity(function, args.size(), 2);
        if (!(args[0] > 1.0)) throw std::domain_error("hurwitz: requires s > 1");
        if (!(args[1] > 0.0)) throw std::domain_error("hurwitz: requires v > 0");
        base = hurwitz_term(args[0], args[1]);
    } else if (function == "polylog") {
        require_arity(function, args.size(), 2);
        LerchParams{args[1], args[0], 1.0}.validate();
        base = polylog_term(args[0], args[1]);
    } else if (function == "lerch") {
        require_arity(function, args.size(), 3);
        const LerchParams p{args[0], args[1], args[2]};
        p.validate();
        base = lerch_term(p);
    } else if (function == "eulersum") {
        require_arity(function, args.size(), 0);
        base = euler_harmonic_term();
    } else {
        throw std::domain_error("unknown function '" + function +
                                "' (expected zeta, hurwitz, polylog, lerch, or eulersum)");
    }
    if (scale == 1.0) return base;
    return [base, scale](std::int64_t k) { return scale * base(k); };
}

AccelResult evaluate_function(const std::string& function, const std::vector<double>& args,
                              const ToleranceSpec& tol) {
    if (function == "zeta") {
        require_arity(function, args.size(), 1);
        return riemann_zeta(args[0], tol);
    }
    if (function == "hurwitz") {
        require_arity(function, args.size(), 2);
        return hurwitz_zeta(args[0], args[1], tol);
    }
    if (function == "polylog") {
        require_arity(function, args.size(), 2);
        return polylog(args[0], args[1], tol);
    }
    if (function == "lerch") {
        require_arity(function, args.size(), 3);
        return lerch_phi({args[0], args[1], args[2]}, tol);
    }
    if (function == "eulersum") {
        require_arity(function, args.size(), 0);
        return euler_harmonic_sum(tol);
    }
    throw std::domain_error("unknown function '" + function +
                            "' (expected zeta, hurwitz, polylog, lerch, or eulersum)");
}

// ---------------------------------------------------------------------
// subcommands

int run_eval(const std::string& function, const std::vector<double>& args, const CommonFlags& flags) {
    AccelResult r = evaluate_function(function, args, flags.tolerance());
    r.value *= flags.scale;
    r.error_estimate *= std::abs(flags.scale);
    print_record(to_record(r), flags.format);
    return r.converged ? 0 : 1;
}

int digits_agreeing(double row, double final_value) {
    if (row == final_value) return 15;
    const double rel = std::abs(row - final_value) / std::max(std::abs(final_value), 1e-300);
    const int digits = static_cast<int>(std::floor(-std::log10(rel)));
    return std::clamp(digits, 0, 15);
}

int run_table(const std::string& function, const std::vector<double>& args, int orders,
              const CommonFlags& flags) {
    const TermOracle oracle = make_series_oracle(function, args, flags.scale);
    const auto rows = cnct_table(oracle, orders, flags.tol);
    if (flags.format == "csv") {
        std::printf("n,delta,terms_used\n");
        for (const auto& row : rows)
            std::printf("%d,%s,%lld\n", row.order, fmt17(row.delta).c_str(),
                        static_cast<long long>(row.terms_used));
    } else if (flags.format == "json") {
        std::printf("[");
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::printf("%s{\"n\": %d, \"delta\": %s, \"terms_used\": %lld}", i == 0 ? "" : ", ",
                        rows[i].order, json_number(rows[i].delta).c_str(),
                        static_cast<long long>(rows[i].terms_used));
        std::printf("]\n");
    } else {
        const double final_value = rows.back().delta;
        std::printf("%3s  %-26s  %6s  %10s\n", "n", "delta", "digits", "terms_used");
        for (const auto& row : rows)
            std::printf("%3d  %-26s  %6d  %10lld\n", row.order, grouped(fmt17(row.delta)).c_str(),
                        digits_agreeing(row.delta, final_value), static_cast<long long>(row.terms_used));
    }
    return 0;
}

int run_compare(const std::string& function, const std::vector<double>& args, const CommonFlags& flags) {
    const TermOracle oracle = make_series_oracle(function, args, flags.scale);
    const ToleranceSpec tol = flags.tolerance();
    const OutputRecord accelerated = to_record(cnct_sum(oracle, tol));
    const OutputRecord plain = to_record(direct_sum(oracle, tol));
    const double ratio = accelerated.terms_used > 0
                             ? static_cast<double>(plain.terms_used) / static_cast<double>(accelerated.terms_used)
                             : 0.0;
    if (flags.format == "csv") {
        std::printf("method,value,error_estimate,order,terms_used,converged,terms_ratio\n");
        for (const OutputRecord* r : {&accelerated, &plain})
            std::printf("%s,%s,%s,%d,%lld,%s,%s\n", r->method.c_str(), fmt17(r->value).c_str(),
                        fmt17(r->error_estimate).c_str(), r->order, static_cast<long long>(r->terms_used),
                        r->converged ? "true" : "false", fmt17(ratio).c_str());
    } else if (flags.format == "json") {
        std::printf("{\"cnct\": %s, \"direct\": %s, \"terms_ratio\": %s}\n",
                    record_json(accelerated).c_str(), record_json(plain).c_str(),
                    json_number(ratio).c_str());
    } else {
        std::printf("-- cnct --\n");
        print_record_text(accelerated);
        std::printf("-- direct --\n");
        print_record_text(plain);
        std::printf("terms_ratio    = %s\n", fmt17(ratio).c_str());
    }
    return (accelerated.converged && plain.converged) ? 0 : 1;
}

struct DistFlags {
    double z = 0.0, s = 0.0, v = 1.0;
    std::int64_t k = 0;
    double p = 0.0;
    int r = 1;
};

int run_dist(const std::string& query, const DistFlags& d, const CommonFlags& flags) {
    const LerchDistribution dist({d.z, d.s, d.v}, flags.tolerance());
    const AccelResult& norm = dist.norm_result();
    const double norm_rel = dist.norm_error() / dist.norm();

    OutputRecord record = to_record(norm);
    if (query == "pmf") {
        record.value = dist.pmf(d.k);
        record.error_estimate = record.value * norm_rel;
    } else if (query == "cdf") {
        record.value = dist.cdf(d.k);
        record.error_estimate = record.value * norm_rel;
    } else if (query == "quantile") {
        record.value = static_cast<double>(dist.quantile(d.p));
        record.error_estimate = 0.0;
    } else {
        record = to_record(dist.moment(d.r, flags.tolerance()));
        record.terms_used += norm.terms_used;
    }
    print_record(record, flags.format);
    return record.converged ? 0 : 1;
}

std::vector<double> read_sums(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw std::domain_error("cannot open input file '" + path + "'");
        in = &file;
    }
    std::vector<double> sums;
    std::string line;
    for (int lineno = 1; std::getline(*in, line); ++lineno) {
        std::istringstream ls(line);
        std::string token;
        while (ls >> token) {
            try {
                std::size_t used = 0;
                const double value = std::stod(token, &used);
                if (used != token.size() || !std::isfinite(value))
                    throw std::invalid_argument(token);
                sums.push_back(value);
            } catch (const std::exception&) {
                throw std::domain_error("parse error at line " + std::to_string(lineno) + ": '" + token + "'");
            }
        }
    }
    if (sums.size() < 3)
        throw std::domain_error("need at least 3 finite partial sums, got " + std::to_string(sums.size()));
    return sums;
}

int run_accel(const std::string& input, const std::string& method, const CommonFlags& flags) {
    const std::vector<double> sums = read_sums(input);
    OutputRecord record;
    record.terms_used = static_cast<std::int64_t>(sums.size());
    record.method = method;

    if (method == "delta") {
        DeltaAccelerator<double> acc;
        for (double s : sums) acc.push(s);
        record.value = acc.estimate().value();
        record.order = acc.order();
        record.converged = !acc.broke_down();
        if (acc.terminated())
            record.error_estimate = 0.0;
        else if (acc.previous_estimate())
            record.error_estimate = std::abs(record.value - *acc.previous_estimate());
        else
            record.error_estimate = std::abs(record.value);
    } else {
        EpsilonTable<double> table{std::span<const double>(sums)};
        record.value = table.estimate();
        record.order = table.max_even_column();
        record.converged = true;
        record.error_estimate =
            table.max_even_column() >= 2
                ? std::abs(record.value - table.column(table.max_even_column() - 2).back())
                : 0.0;
    }
    print_record(record, flags.format);
    return record.converged ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"series summation by nonlinear condensation and sequence transformation"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string function;
    std::vector<double> args;

    auto* eval = app.add_subcommand("eval", "evaluate a built-in function");
    eval->add_option("function", function, "zeta | hurwitz | polylog | lerch | eulersum")->required();
    eval->add_option("args", args, "function arguments");
    add_common_flags(eval, flags);

    int orders = 12;
    auto* table = app.add_subcommand("table", "CNCT convergence table of a built-in series");
    table->add_option("function", function, "zeta | hurwitz | polylog | lerch | eulersum")->required();
    table->add_option("args", args, "function arguments");
    table->add_option("--orders", orders, "highest transformation order")->capture_default_str();
    add_common_flags(table, flags);

    auto* compare = app.add_subcommand("compare", "accelerated vs term-by-term summation");
    compare->add_option("function", function, "zeta | hurwitz | polylog | lerch | eulersum")->required();
    compare->add_option("args", args, "function arguments");
    add_common_flags(compare, flags);

    DistFlags dist_flags;
    std::string dist_query;
    auto* dist = app.add_subcommand("dist", "query a Lerch-family distribution");
    dist->add_option("query", dist_query, "pmf | cdf | quantile | moment")
        ->required()
        ->check(CLI::IsMember({"pmf", "cdf", "quantile", "moment"}));
    dist->add_option("--z", dist_flags.z, "power parameter, 0 <= z <= 1")->required();
    dist->add_option("--s", dist_flags.s, "exponent parameter")->required();
    dist->add_option("--v", dist_flags.v, "shift parameter, v > 0")->capture_default_str();
    dist->add_option("--k", dist_flags.k, "support point for pmf/cdf");
    dist->add_option("--p", dist_flags.p, "probability level for quantile");
    dist->add_option("--r", dist_flags.r, "moment order");
    add_common_flags(dist, flags, /*with_scale=*/false);

    std::string accel_input;
    std::string accel_method = "delta";
    auto* accel = app.add_subcommand("accel", "accelerate partial sums from a file or stdin");
    accel->add_option("--input", accel_input, "input file ('-' or omit for stdin)");
    accel->add_option("--method", accel_method, "delta | epsilon")
        ->check(CLI::IsMember({"delta", "epsilon"}))
        ->capture_default_str();
    add_common_flags(accel, flags, /*with_scale=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(function, args, flags);
        if (table->parsed()) return run_table(function, args, orders, flags);
        if (compare->parsed()) return run_compare(function, args, flags);
        if (dist->parsed()) return run_dist(dist_query, dist_flags, flags);
        return run_accel(accel_input, accel_method, flags);
    } catch (const BreakdownError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
