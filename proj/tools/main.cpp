#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selberg/moments.hpp"
#include "selberg/record.hpp"
#include "selberg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSingular = 2;
constexpr int kExitVerifyFailed = 3;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stoi(item));
    }
    if (values.empty()) throw std::invalid_argument("empty list: '" + text + "'");
    return values;
}

int run_compute(long n, long mu, const std::string& tau_s, const std::string& a_s,
                const std::string& b_s, const std::string& format) {
    selberg::MomentRequest req;
    req.n = n;
    req.mu = mu;
    req.tau = selberg::rational_from_string(tau_s);
    req.a = selberg::rational_from_string(a_s);
    req.b = selberg::rational_from_string(b_s);
    selberg::MomentResult result = selberg::moment_polynomial(req);
    selberg::OutputRecord record = selberg::make_output_record(result);
    if (format == "plain")
        std::cout << selberg::to_plain(record);
    else
        std::cout << selberg::to_json(record) << "\n";
    return kExitOk;
}

int run_verify(const std::string& suite, int max_n, unsigned seed) {
    using selberg::SuiteOutcome;
    const selberg::CheckReporter reporter = [](bool ok, const std::string& line) {
        if (ok)
            std::cout << "ok " << line << "\n";
        else
            std::cout << "FAIL " << line << "\n";
    };
    struct Entry {
        std::string name;
        std::function<SuiteOutcome()> run;
    };
    selberg::SuiteOptions opt{max_n, seed};
    const std::vector<Entry> entries = {
        {"matrices", [&] { return selberg::run_matrices_suite(opt, reporter); }},
        {"three-term", [&] { return selberg::run_three_term_suite(reporter); }},
        {"corollary", [&] { return selberg::run_corollary_suite(reporter); }},
        {"appendix-a", [&] { return selberg::run_appendix_a_suite(reporter); }},
        {"oracle", [&] { return selberg::run_oracle_equivalence_suite(reporter); }},
        {"mu1", [&] { return selberg::run_mu1_suite(reporter); }},
        {"w2", [&] { return selberg::run_w2_suite(reporter); }},
    };
    for (const Entry& entry : entries) {
        if (suite != "all" && suite != entry.name) continue;
        SuiteOutcome outcome = entry.run();
        if (outcome.failures > 0) {
            std::cout << "suite " << entry.name << ": FAILED, reproducer: " << outcome.first_failure
                      << "\n";
            return kExitVerifyFailed;
        }
        std::cout << "suite " << entry.name << ": " << outcome.checks << " checks passed\n";
    }
    return kExitOk;
}

int run_bench(const std::string& n_list, int mu, const std::string& tau_s, int repeat) {
    const std::vector<int> ns = parse_int_list(n_list);
    const selberg::Rational tau = selberg::rational_from_string(tau_s);
    if (repeat < 1) throw std::invalid_argument("--repeat must be >= 1");
    std::cout << "n wall-seconds ratio\n";
    double previous = 0.0;
    for (std::size_t idx = 0; idx < ns.size(); ++idx) {
        double total = 0.0;
        for (int r = 0; r < repeat; ++r) total += selberg::time_moment_chain(ns[idx], mu, tau);
        const double mean = total / repeat;
        std::cout << ns[idx] << " " << std::fixed << std::setprecision(6) << mean << " ";
        if (idx == 0)
            std::cout << "-";
        else
            std::cout << std::setprecision(3) << (previous > 0.0 ? mean / previous : 0.0);
        std::cout << "\n";
        previous = mean;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact moment polynomials of the Jacobi beta-ensemble via its matrix "
                 "difference system"};
    app.require_subcommand(1);

    CLI::App* compute = app.add_subcommand("compute", "compute one moment polynomial");
    long n = 1, mu = 1;
    std::string tau_s, a_s, b_s, format = "json";
    compute->add_option("--n", n, "number of variables")->required();
    compute->add_option("--tau", tau_s, "interaction exponent (rational p/q)")->required();
    compute->add_option("--alpha", a_s, "weight exponent of z (rational p/q)")->required();
    compute->add_option("--beta", b_s, "weight exponent of 1-z (rational p/q)")->required();
    compute->add_option("--mu", mu, "moment order")->required();
    compute->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "plain"}));

    CLI::App* verify = app.add_subcommand("verify", "run exact verification suites");
    std::string suite;
    int max_n = 8;
    unsigned seed = 1;
    verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(
            {"matrices", "three-term", "corollary", "appendix-a", "oracle", "mu1", "w2", "all"}));
    verify->add_option("--max-n", max_n, "largest matrix order for the random suites");
    verify->add_option("--seed", seed, "seed for the random parameter tuples");

    CLI::App* bench = app.add_subcommand("bench", "time the moment pipeline");
    std::string n_list = "5,10,20";
    int bench_mu = 2;
    std::string bench_tau = "1";
    int repeat = 1;
    bench->add_option("--n-list", n_list, "comma-separated list of n values");
    bench->add_option("--mu", bench_mu, "moment order");
    bench->add_option("--tau", bench_tau, "interaction exponent (rational p/q)");
    bench->add_option("--repeat", repeat, "runs to average per n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(n, mu, tau_s, a_s, b_s, format);
        if (verify->parsed()) return run_verify(suite, max_n, seed);
        if (bench->parsed()) return run_bench(n_list, bench_mu, bench_tau, repeat);
    } catch (const selberg::ParameterSingular& e) {
        std::cerr << "singular parameters: " << e.what() << "\n";
        return kExitSingular;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
