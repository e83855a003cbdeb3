// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "numrad/checks.hpp"
#include "numrad/cli.hpp"
#include "numrad/ensembles.hpp"
#include "numrad/norms.hpp"
#include "numrad/radius.hpp"
#include "numrad/rng.hpp"
#include "numrad/spectral.hpp"
#include "numrad/suite.hpp"

using namespace numrad;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Matrix i of the shared 200-matrix sweep: ginibre, normal and nil in turn,
// n cycling through 2..8.
CMat sweep_matrix(int i) {
    static const EnsembleKind kinds[] = {EnsembleKind::ginibre, EnsembleKind::normal,
                                         EnsembleKind::square_zero};
    const std::size_t n = 2 + static_cast<std::size_t>((i / 3) % 7);
    return generate({kinds[i % 3], n, 5000u + static_cast<std::uint64_t>(i), 1.0}).first;
}

Outcome paper_example() {
    const auto start = std::chrono::steady_clock::now();
    cli::RunConfig config;
    config.command = cli::Command::paper_example;
    config.format = Format::machine;
    std::ostringstream out;
    const int code = cli::cmd_paper_example(config, out);
    const double secs = seconds_since(start);
    const std::string text = out.str();
    const auto lines = std::count(text.begin(), text.end(), '\n');
    return {code == 0 && secs < 5.0 && lines == 9,
            fmt::format("exit {}, {} records, {:.3f} s", code, lines, secs)};
}

Outcome proposition_omega_radius() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        const CMat t = sweep_matrix(i);
        const double w = numerical_radius(t).value;
        const double slow = omega_radius_slow(t).value;
        const double err = std::abs(slow - std::numbers::sqrt2 * w) / std::max(1.0, w);
        worst = std::max(worst, err);
        bad += err > 1e-7 ? 1 : 0;
    }
    const double secs = seconds_since(start);
    return {bad == 0 && secs < 120.0,
            fmt::format("max |w_Omega - sqrt2 w|/max(1,w) = {:.3e} over 200, {:.1f} s", worst, secs)};
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 8);
        const CMat t = generate({EnsembleKind::ginibre, n, 7000u + static_cast<std::uint64_t>(i), 1.0}).first;
        const double fast = numerical_radius(t).value;
        const double oracle = numerical_radius_oracle(t);
        worst = std::max(worst, std::abs(fast - oracle) / std::max(1.0, oracle));
    }
    return {worst <= 1e-8, fmt::format("max relative gap {:.3e} over 100", worst)};
}

struct SuiteRun {
    int code = 2;
    double secs = 0.0;
    SuiteReport report;
};

const SuiteRun& default_suite() {
    static const SuiteRun run = [] {
        SuiteRun r;
        const auto start = std::chrono::steady_clock::now();
        cli::RunConfig config;
        config.command = cli::Command::verify;
        r.report = run_suite(cli::suite_config(config));
        r.code = r.report.passed() ? cli::kPass : cli::kViolation;
        r.secs = seconds_since(start);
        return r;
    }();
    return run;
}

Outcome full_suite() {
    const SuiteRun& run = default_suite();
    double min_slack = 0.0;
    for (const auto& [name, sum] : run.report.summaries) {
        if (sum.min_slack) {
            min_slack = std::min(min_slack, *sum.min_slack);
        }
    }
    return {run.code == 0 && run.secs < 600.0 && min_slack >= -1e-9,
            fmt::format("exit {}, {} records, {} failures, min normalized slack {:.3e}, {:.1f} s",
                        run.code, run.report.records.size(), run.report.failures, min_slack,
                        run.secs)};
}

Outcome equality_witnesses() {
    const SuiteReport& report = default_suite().report;
    auto tight = [&](const std::string& check, const std::string& ens, const std::string& norm,
                     const std::string& rel) {
        const auto it = report.tightest.find(tightest_key(check, ens, norm, rel));
        return it == report.tightest.end() ? std::nan("") : it->second.normalized_slack;
    };
    const double a = tight("basic_bounds", "nil:4", "", "||T||/2 <= w(T)");
    const double b = tight("basic_bounds", "normal:4", "", "w(T) <= ||T||");
    const double c = std::max(tight("omega_upper", "nil:4", "", "Omega(T) <= sqrt(||TT*+T*T||)"),
                              tight("omega_upper", "nil:4", "", "Omega(T) <= sqrt(||T||^2 + w(T^2))"));
    const CMat e12 = CMat::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    const InequalityReport lb = check_lower_bound(e12, operator_norm_spec());
    const double d = lb.slack / std::max(1.0, std::abs(lb.rhs));
    auto witness = [](double v) { return std::isfinite(v) && v <= 1e-8 && v >= -1e-9; };
    return {witness(a) && witness(b) && witness(c) && witness(d) && lb.status == CheckStatus::holds,
            fmt::format("(a) {:.2e} (b) {:.2e} (c) {:.2e} (d) {:.2e}", a, b, c, d)};
}

Outcome hilbert_schmidt() {
    const NormSpec fro = schatten_norm_spec(2.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const CMat t = sweep_matrix(i);
        const double w2 = generalized_radius(t, fro).value;
        const double hs = hs_radius_sq(t);
        worst = std::max(worst, std::abs(w2 * w2 - hs) / std::max(1.0, hs));
    }
    return {worst <= 1e-9, fmt::format("max |w_2^2 - hs|/max(1,hs) = {:.3e} over 200", worst)};
}

Outcome trace_sup_closed_form() {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const CMat t = sweep_matrix(i);
        const CMat ta = adjoint(t);
        const SupOverPhi sup = sup_over_phi(
            [&](double phi) {
                const CMat x = rotate(t, phi);
                const CMat xa = rotate(ta, -phi);
                return std::abs(trace(matmul(x, x)) + trace(matmul(xa, xa)));
            },
            RadiusOptions{});
        const double closed = 2.0 * std::abs(trace(matmul(t, t)));
        worst = std::max(worst, std::abs(sup.value - closed) / std::max(1.0, closed));
    }
    return {worst <= 1e-10, fmt::format("max relative gap {:.3e} over 200", worst)};
}

Outcome norm_registry() {
    cli::RunConfig config;
    config.command = cli::Command::validate_norms;
    std::ostringstream out;
    const int code = cli::cmd_validate_norms(config, out);
    const NormAudit wnum = validate_norm(numerical_radius_norm_spec(), 2, cli::kValidateTrials, config.seed);
    const bool witness = wnum.algebra_witness.has_value() &&
                         wnum.algebra_witness->product_norm > wnum.algebra_witness->bound;
    return {code == 0 && witness,
            witness ? fmt::format("exit {}, wnum witness {} : w(TS) = {:.6g} > w(T)w(S) = {:.6g}", code,
                                  wnum.algebra_witness->pair, wnum.algebra_witness->product_norm,
                                  wnum.algebra_witness->bound)
                    : fmt::format("exit {}, no wnum witness", code)};
}

Outcome cross_structure() {
    SplitMix64 rng(0x5eed);
    // Cartesian identity.
    double cart = 0.0;
    for (int i = 0; i < 20; ++i) {
        const CMat a = ginibre(rng, 1 + static_cast<std::size_t>(i % 8));
        const CMat rhs = scale(add(matmul(a, adjoint(a)), matmul(adjoint(a), a)), 0.5);
        for (int k = 0; k < 16; ++k) {
            const double phi = 2.0 * std::numbers::pi * rng.uniform();
            const CMat r = re_part(rotate(a, phi));
            const CMat m = im_part(rotate(a, phi));
            const CMat lhs = add(matmul(r, r), matmul(m, m));
            cart = std::max(cart, max_abs_diff(lhs, rhs) / std::max(1.0, frobenius_norm_sq(a)));
        }
    }
    // (α, β) parametrization.
    double ab = 0.0;
    const NormSpec norms[] = {operator_norm_spec(), schatten_norm_spec(2.0)};
    for (int i = 0; i < 50; ++i) {
        const CMat t = ginibre(rng, 2 + static_cast<std::size_t>(i % 5));
        const NormSpec& n = norms[i % 2];
        const double g = generalized_radius(t, n).value;
        ab = std::max(ab, std::abs(alphabeta_radius(t, n) - g) / std::max(1.0, g));
    }
    // Weak unitary invariance of w and Ω.
    double wui_w = 0.0;
    double wui_omega = 0.0;
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 5);
        const CMat t = ginibre(rng, n);
        const CMat u = haar_unitary(rng, n);
        const CMat conj = matmul(adjoint(u), matmul(t, u));
        wui_w = std::max(wui_w, std::abs(numerical_radius(conj).value - numerical_radius(t).value));
        wui_omega = std::max(wui_omega, std::abs(omega_norm(conj).value - omega_norm(t).value));
    }
    // Buzano-type vector inequality.
    double buzano = -1.0;
    auto unit = [&](std::size_t n) {
        std::vector<cplx> v(n);
        for (cplx& x : v) {
            x = rng.complex_gaussian();
        }
        const double len = vec_norm(v);
        for (cplx& x : v) {
            x /= len;
        }
        return v;
    };
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 8);
        const auto a = unit(n);
        const auto b = unit(n);
        const auto c = unit(n);
        const double lhs = std::norm(dotc(a, c)) + std::norm(dotc(b, c));
        const double cc = std::norm(vec_norm(c));
        const double rhs = cc * (std::max(std::norm(vec_norm(a)), std::norm(vec_norm(b))) +
                                 std::abs(dotc(a, b)));
        buzano = std::max(buzano, lhs - rhs);
    }
    const bool pass = cart <= 1e-12 && ab <= 1e-9 && wui_w <= 1e-8 && wui_omega <= 1e-8 &&
                      buzano <= 1e-12;
    return {pass, fmt::format("cartesian {:.2e}, alpha-beta {:.2e}, w {:.2e}, Omega {:.2e}, "
                              "buzano excess {:.2e}",
                              cart, ab, wui_w, wui_omega, buzano)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 golden 2x2 example", paper_example},
        {"2 w_Omega = sqrt(2) w via the slow path", proposition_omega_radius},
        {"3 numerical radius vs dense-grid oracle", oracle_equivalence},
        {"4 full inequality suite", full_suite},
        {"5 equality witnesses", equality_witnesses},
        {"6 Hilbert-Schmidt radius identity", hilbert_schmidt},
        {"7 closed-form trace sup", trace_sup_closed_form},
        {"8 norm registry audit", norm_registry},
        {"9 cross-structure properties", cross_structure},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        fmt::print("{} [{}] {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
