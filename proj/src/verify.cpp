#include "selberg/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <vector>

#include "selberg/matrices.hpp"
#include "selberg/moments.hpp"
#include "selberg/oracle.hpp"
#include "selberg/selberg_integral.hpp"

namespace selberg {

namespace {

struct Recorder {
    const CheckReporter& report;
    SuiteOutcome out;

    bool record(bool ok, const std::string& line) {
        ++out.checks;
        if (report) report(ok, line);
        if (!ok) {
            ++out.failures;
            if (out.first_failure.empty()) out.first_failure = line;
        }
        return ok;
    }
};

Rational random_positive(std::mt19937& rng, int max_num = 12, int max_den = 4) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return rat(num(rng), den(rng));
}

std::string describe(const GenericParams& p) {
    std::ostringstream os;
    os << "a1=" << p.alpha1 << " a2=" << p.alpha2 << " a3=" << p.alpha3 << " tau=" << p.tau
       << " x1=" << p.x1 << " x2=" << p.x2 << " x3=" << p.x3;
    return os.str();
}

// The documented small-parameter grid for the brute-force checks.
struct OracleGridEntry {
    int n, tau, a1;
    Rational a2, a3, x1;
};

std::vector<OracleGridEntry> oracle_grid(std::initializer_list<int> ns) {
    const std::vector<std::pair<Rational, Rational>> pairs = {
        {rat(2), rat(2)}, {rat(5, 2), rat(7, 2)}, {rat(2), rat(3)}};
    const std::vector<Rational> x1s = {rat(-1), rat(2)};
    std::vector<OracleGridEntry> grid;
    for (int n : ns)
        for (int tau : {1, 2})
            for (int a1 : {1, 2, 3})
                for (const auto& [a2, a3] : pairs)
                    for (const Rational& x1 : x1s) grid.push_back({n, tau, a1, a2, a3, x1});
    return grid;
}

std::string describe(const OracleGridEntry& g) {
    std::ostringstream os;
    os << "n=" << g.n << " tau=" << g.tau << " a1=" << g.a1 << " a2=" << g.a2 << " a3=" << g.a3
       << " x1=" << g.x1;
    return os.str();
}

} // namespace

SuiteOutcome run_matrices_suite(const SuiteOptions& opt, const CheckReporter& report) {
    Recorder rec{report, {}};
    std::mt19937 rng(opt.seed);
    for (int n = 1; n <= opt.max_n; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const Rational a1 = random_positive(rng);
            const Rational a2 = random_positive(rng);
            const Rational a3 = random_positive(rng);
            const Rational tau = random_positive(rng, 6, 3);
            const Rational x1 = -random_positive(rng, 8, 3);
            const Rational x2 = random_positive(rng, 6, 3);
            const Rational x3 = x2 + random_positive(rng, 4, 2);
            GenericParams p(a1, a2, a3, tau, x1, x2, x3);
            const std::string tag = "n=" + std::to_string(n) + " trial=" + std::to_string(trial) +
                                    " " + describe(p);

            MatrixR L = build_L(p, n);
            MatrixR D = build_D(p, n);
            MatrixR U = build_U(p, n);
            MatrixR A = L * D * U;

            PrimedFactors pf = build_primed(p, n);
            if (!rec.record(pf.u_prime * pf.d_prime * pf.l_prime == A, "matrices LDU=U'D'L' " + tag))
                return rec.out;

            if (!rec.record(U * build_U_inverse(p, n) == MatrixR::identity(n + 1),
                            "matrices U*Uinv=I " + tag))
                return rec.out;

            if (!rec.record(check_tilde_consistency(p, n), "matrices A*Ut=Lt " + tag))
                return rec.out;

            // Factored assembly against the plain triangular product.
            MatrixP Af = build_A(p, n);
            bool factored_ok = true;
            for (int i = 0; i <= n && factored_ok; ++i)
                for (int j = 0; j <= n && factored_ok; ++j)
                    factored_ok = Af(i, j).is_constant() && Af(i, j).constant_value() == A(i, j);
            if (!rec.record(factored_ok, "matrices A-factored=LDU " + tag)) return rec.out;

            // Same with a symbolic first coordinate, sampled at rational points.
            GenericParams ps(a1, a2, a3, tau, Poly::indeterminate(), Poly(x2), Poly(x3));
            MatrixP As = build_A(ps, n);
            bool sampled_ok = true;
            const std::vector<Rational> samples = {x1, Rational(x3 + 1), Rational(x3 + rat(1, 2))};
            for (const Rational& s : samples) {
                GenericParams pc(a1, a2, a3, tau, s, x2, x3);
                MatrixR Ac = build_L(pc, n) * build_D(pc, n) * build_U(pc, n);
                for (int i = 0; i <= n && sampled_ok; ++i)
                    for (int j = 0; j <= n && sampled_ok; ++j)
                        sampled_ok = As(i, j).eval(s) == Ac(i, j);
            }
            if (!rec.record(sampled_ok, "matrices A(x) sampled=LDU " + tag)) return rec.out;

            // UL factors from the coordinate interchange.
            GenericParams swapped = p.with_coordinates_swapped();
            bool interchange_ok = pf.u_prime == build_L(swapped, n).reversed() &&
                                  pf.d_prime == build_D(swapped, n).reversed() &&
                                  pf.l_prime == build_U(swapped, n).reversed();
            if (!rec.record(interchange_ok, "matrices U'=JLbarJ " + tag)) return rec.out;

            // Cleared-system column sums, generic coordinates with x2 = x3.
            GenericParams pdeg(a1, a2, a3, tau, x1, x3, x3);
            TildeSystem td = build_tilde(pdeg, n);
            bool sums_ok = true;
            for (int j = 0; j <= n && sums_ok; ++j) {
                Rational us(0), ls(0);
                for (int i = 0; i <= j; ++i) us += td.u_tilde(i, j);
                for (int i = j; i <= n; ++i) ls += td.l_tilde(i, j);
                sums_ok = us == td.u_tilde(0, 0) && ls == td.l_tilde(n, n);
            }
            if (!rec.record(sums_ok, "matrices tilde column sums " + tag)) return rec.out;

            // At coordinates (0, 1, 1) with the last two exponents merged the
            // system collapses to the one-step Selberg ratio.
            GenericParams psa(a1, a2, a3, tau, rat(0), rat(1), rat(1));
            TildeSystem ts = build_tilde(psa, n);
            Rational collapsed = ts.l_tilde(n, n) / ts.u_tilde(0, 0);
            Rational expected =
                selberg_ratio_alpha(SelbergParams::continued(a1, a2 + a3, tau, n), 1);
            if (!rec.record(collapsed == expected, "matrices degeneration=Selberg " + tag))
                return rec.out;
        }
    }
    return rec.out;
}

SuiteOutcome run_three_term_suite(const CheckReporter& report) {
    Recorder rec{report, {}};
    for (const OracleGridEntry& g : oracle_grid({1, 2, 3})) {
        OracleParams p(g.n, g.tau, g.a1, g.a2, g.a3, g.x1);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) {
                const std::string ij = " i=" + std::to_string(i) + " j=" + std::to_string(j);
                if (three_term_up_admissible(i, j, g.n)) {
                    if (!rec.record(check_three_term_up(i, j, p),
                                    "three-term-up " + describe(g) + ij))
                        return rec.out;
                }
                if (three_term_down_admissible(i, j, g.n)) {
                    if (!rec.record(check_three_term_down(i, j, p),
                                    "three-term-down " + describe(g) + ij))
                        return rec.out;
                }
            }
    }
    return rec.out;
}

SuiteOutcome run_corollary_suite(const CheckReporter& report) {
    Recorder rec{report, {}};
    for (const OracleGridEntry& g : oracle_grid({1, 2, 3})) {
        OracleParams p(g.n, g.tau, g.a1, g.a2, g.a3, g.x1);
        for (int j = 0; j <= g.n; ++j)
            for (int k = j; k <= g.n; ++k) {
                const std::string jk = " j=" + std::to_string(j) + " k=" + std::to_string(k);
                if (!rec.record(check_corollary(j, k, p), "corollary " + describe(g) + jk))
                    return rec.out;
            }
    }
    return rec.out;
}

SuiteOutcome run_appendix_a_suite(const CheckReporter& report) {
    Recorder rec{report, {}};
    for (const OracleGridEntry& g : oracle_grid({2, 3})) {
        OracleParams p(g.n, g.tau, g.a1, g.a2, g.a3, g.x1);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) {
                const std::string ij = " i=" + std::to_string(i) + " j=" + std::to_string(j);
                if (!rec.record(check_H_vanishing(i, j, p), "orbit-sum <H>=0 " + describe(g) + ij))
                    return rec.out;
            }
    }
    return rec.out;
}

SuiteOutcome run_oracle_equivalence_suite(const CheckReporter& report) {
    Recorder rec{report, {}};
    const std::vector<std::pair<Rational, Rational>> targets = {{rat(2), rat(2)}, {rat(3), rat(2)}};
    for (int n : {1, 2, 3})
        for (int tau : {1, 2})
            for (int mu : {1, 2, 3})
                for (const auto& [a, b] : targets) {
                    MomentRequest req{n, rat(tau), a, b, mu};
                    Poly engine = moment_polynomial(req).poly;
                    Poly brute = oracle_moment_polynomial(n, a, b, tau, mu);
                    std::ostringstream os;
                    os << "moment engine=brute-force n=" << n << " tau=" << tau << " mu=" << mu
                       << " a=" << a << " b=" << b;
                    if (!rec.record(engine == brute, os.str())) return rec.out;
                }
    return rec.out;
}

SuiteOutcome run_mu1_suite(const CheckReporter& report) {
    Recorder rec{report, {}};
    const std::vector<std::pair<Rational, Rational>> targets = {
        {rat(2), rat(2)}, {rat(3), rat(2)}, {rat(5, 2), rat(7, 2)}};
    for (int n = 1; n <= 6; ++n)
        for (int tau : {1, 2, 3})
            for (const auto& [a, b] : targets) {
                MomentRequest req{n, rat(tau), a, b, 1};
                Poly engine = moment_polynomial(req).poly;
                Poly closed = closed_form_mu1(n, a, b, rat(tau));
                std::ostringstream os;
                os << "mu1 engine=closed-form n=" << n << " tau=" << tau << " a=" << a << " b=" << b;
                if (!rec.record(engine == closed, os.str())) return rec.out;
            }
    return rec.out;
}

SuiteOutcome run_w2_suite(const CheckReporter& report) {
    Recorder rec{report, {}};
    const std::vector<std::pair<Rational, Rational>> targets = {{rat(3), rat(2)},
                                                                {rat(4), rat(5, 2)}};
    for (int n : {1, 2, 3})
        for (int tau : {1, 2})
            for (const auto& [a, b] : targets)
                for (int k = 0; k <= n && a > k; ++k) {
                    std::ostringstream os;
                    os << "elementary-symmetric W2 n=" << n << " tau=" << tau << " a=" << a
                       << " b=" << b << " k=" << k;
                    if (!rec.record(check_W2(k, a, b, tau, n), os.str())) return rec.out;
                }
    return rec.out;
}

double time_moment_chain(int n, int mu, const Rational& tau) {
    MomentRequest req{n, tau, rat(2), rat(2), mu};
    const auto start = std::chrono::steady_clock::now();
    MomentResult result = moment_polynomial(req);
    const auto stop = std::chrono::steady_clock::now();
    if (result.poly.degree() != n * mu) throw std::logic_error("bench result has wrong degree");
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace selberg
