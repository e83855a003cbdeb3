#include "numrad/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "numrad/checks.hpp"
#include "numrad/errors.hpp"
#include "numrad/matrix_io.hpp"
#include "numrad/radius.hpp"
#include "numrad/spectral.hpp"
#include "numrad/suite.hpp"

namespace numrad::cli {
namespace {

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

double tol_or(const RunConfig& c, double fallback) { return c.tol.value_or(fallback); }

// Writes to --out when given, otherwise to the caller's stream.
int emit(const RunConfig& config, std::ostream& out, const std::vector<Record>& records, int code) {
    const std::string text = render(records, config.format);
    if (config.out_path) {
        std::ofstream file(*config.out_path);
        if (!file) {
            throw Error("cannot write " + config.out_path->string());
        }
        file << text;
    } else {
        out << text;
    }
    return code;
}

}  // namespace

void validate(const RunConfig& c) {
    if (c.trials && *c.trials < 1) {
        throw ParseError("trials", "must be at least 1");
    }
    if (c.tol && !(*c.tol > 0.0)) {
        throw ParseError("tol", "must be positive");
    }
    if (c.command == Command::compute && !c.matrix_path) {
        throw ParseError("matrix", "compute requires --matrix");
    }
    if (c.threads < 1) {
        throw ParseError("threads", "must be at least 1");
    }
    if (c.norm_id) {
        (void)norm_from_id(*c.norm_id);
    }
    for (const std::string& id : c.ensemble_ids) {
        (void)parse_ensemble_id(id);
    }
    (void)select_checks(c.checks);
}

int cmd_compute(const RunConfig& config, std::ostream& out) {
    const CMat t = read_matrix(*config.matrix_path);
    require_square(t, "matrix");
    const NormSpec norm = norm_from_id(config.norm_id.value_or("op"));
    const RadiusResult w = numerical_radius(t);
    const RadiusResult wn = generalized_radius(t, norm);
    const OmegaResult omega = omega_norm(t);
    const double w_omega = omega_radius(t);

    Record r("compute");
    r.add("rows", static_cast<long long>(t.rows()))
        .add("norm", spectral_norm(t))
        .add("frobenius", frobenius_norm(t))
        .add("w", w.value)
        .add("w_argmax_theta", w.argmax_theta)
        .add("norm_id", norm.id)
        .add("w_N", wn.value)
        .add("w_N_argmax_theta", wn.argmax_theta)
        .add("omega", omega.value)
        .add("omega_s", omega.s)
        .add("omega_psi", omega.psi)
        .add("w_omega", w_omega)
        .add("hs_radius_sq", hs_radius_sq(t))
        .add("norm_re", spectral_norm(re_part(t)))
        .add("norm_im", spectral_norm(im_part(t)))
        .add("N_re", norm.evaluate(re_part(t)))
        .add("N_im", norm.evaluate(im_part(t)));
    return emit(config, out, {r}, kPass);
}

SuiteConfig suite_config(const RunConfig& config) {
    SuiteConfig suite;
    if (config.ensemble_ids.empty()) {
        suite.ensembles = default_ensembles();
    } else {
        for (const std::string& id : config.ensemble_ids) {
            suite.ensembles.push_back(parse_ensemble_id(id));
        }
    }
    suite.checks = select_checks(config.checks);
    if (config.norm_id) {
        suite.norms = {norm_from_id(*config.norm_id)};
    } else {
        suite.norms = default_suite_norms();
    }
    suite.trials = config.trials.value_or(100);
    suite.seed = config.seed;
    suite.options.tol = tol_or(config, 1e-9);
    suite.threads = config.threads;
    return suite;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    const SuiteReport report = run_suite(suite_config(config));
    return emit(config, out, suite_records(report), report.passed() ? kPass : kViolation);
}

int cmd_paper_example(const RunConfig& config, std::ostream& out) {
    const double tol = tol_or(config, 1e-8);
    const CMat t = CMat::from_rows({{1.0, 1.0}, {0.0, 0.0}});
    const CMat re = re_part(t);
    const CMat im = im_part(t);
    const double sqrt2 = std::numbers::sqrt2;

    std::vector<Record> records;
    bool all = true;
    auto assert_close = [&](const std::string& name, double got, double expected) {
        const double err = std::abs(got - expected);
        const bool ok = err <= tol;
        all = all && ok;
        records.push_back(Record("assertion")
                              .add("name", name)
                              .add("value", got)
                              .add("expected", expected)
                              .add("error", err)
                              .add("tolerance", tol)
                              .add("passed", ok));
    };

    const double w = numerical_radius(t).value;
    const double n_re = spectral_norm(re);
    const double n_im = spectral_norm(im);
    assert_close("w(T)", w, (1.0 + sqrt2) / 2.0);
    assert_close("||Re T||", n_re, std::sqrt(3.0 + 2.0 * sqrt2) / 2.0);
    assert_close("||Im T||", n_im, 0.5);

    double worst_re = 0.0;
    double worst_im = 0.0;
    constexpr int kPhiGrid = 360;
    for (int k = 0; k < kPhiGrid; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / kPhiGrid;
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const double a = spectral_norm(re_part(rotate(t, phi)));
        const double b = spectral_norm(im_part(rotate(t, phi)));
        const double re_closed = (1.0 + 2.0 * c * c) / 4.0 + std::sqrt(c * c + c * c * c * c) / 2.0;
        const double im_closed = (1.0 + 2.0 * s * s) / 4.0 + std::sqrt(s * s + s * s * s * s) / 2.0;
        worst_re = std::max(worst_re, std::abs(a * a - re_closed));
        worst_im = std::max(worst_im, std::abs(b * b - im_closed));
    }
    assert_close("||Re(e^{i phi}T)||^2 closed form, max error", worst_re, 0.0);
    assert_close("||Im(e^{i phi}T)||^2 closed form, max error", worst_im, 0.0);

    const SupOverPhi inf = inf_over_phi(
        [&](double phi) {
            const double a = spectral_norm(re_part(rotate(t, phi)));
            const double b = spectral_norm(im_part(rotate(t, phi)));
            return std::sqrt(a * a + b * b);
        },
        RadiusOptions{});
    const double sum = n_re + n_im;
    assert_close("inf_phi sqrt(||Re||^2 + ||Im||^2)", inf.value, std::sqrt(1.0 + sqrt2 / 2.0));
    assert_close("||Re T|| + ||Im T||", sum, 1.0 + sqrt2 / 2.0);

    const bool strict = w < inf.value && inf.value < sum;
    all = all && strict;
    records.push_back(Record("assertion")
                          .add("name", "w < inf < ||Re T|| + ||Im T||")
                          .add("w", w)
                          .add("inf", inf.value)
                          .add("sum", sum)
                          .add("passed", strict));
    records.push_back(Record("paper_example").add("passed", all));
    return emit(config, out, records, all ? kPass : kViolation);
}

int validate_registry(const std::vector<NormSpec>& registry, const RunConfig& config,
                      std::ostream& out) {
    const int trials = config.trials.value_or(kValidateTrials);
    std::vector<Record> records;
    bool all = true;
    for (const NormSpec& spec : registry) {
        for (std::size_t dim : {2u, 4u, 8u}) {
            const NormAudit audit = validate_norm(spec, dim, trials, config.seed);
            std::string reason;
            const bool ok = audit_passes(audit, spec, &reason);
            all = all && ok;
            for (Record& r : audit_records(audit, ok, reason)) {
                records.push_back(std::move(r));
            }
        }
    }
    records.push_back(Record("validate_norms").add("passed", all));
    return emit(config, out, records, all ? kPass : kViolation);
}

int cmd_validate_norms(const RunConfig& config, std::ostream& out) {
    std::vector<NormSpec> registry;
    if (config.norm_id) {
        registry.push_back(norm_from_id(*config.norm_id));
    } else {
        registry = default_registry();
    }
    return validate_registry(registry, config, out);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical radii, generalized norm-radii and the Omega norm, with inequality checks"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string matrix;
    std::string norm;
    std::string ensembles;
    std::string checks;
    int trials = 0;
    double tol = 0.0;
    std::string out_path;
    std::string format = "human";

    auto* o_matrix = app.add_option("--matrix", matrix, "Matrix document (JSON)");
    auto* o_norm = app.add_option("--norm", norm, "Norm id: op, schatten:p, wnum, omega");
    app.add_option("--ensembles", ensembles, "Comma-separated ensemble ids, e.g. ginibre:4,nil:4");
    app.add_option("--checks", checks, "Comma-separated check names");
    auto* o_trials = app.add_option("--trials", trials, "Trials per (check, ensemble)");
    app.add_option("--seed", config.seed, "Base seed; trial i uses seed + i");
    auto* o_tol = app.add_option("--tol", tol, "Slack tolerance");
    auto* o_out = app.add_option("--out", out_path, "Write the report here instead of stdout");
    app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--threads", config.threads, "Worker threads for verify");

    auto* c_compute = app.add_subcommand("compute", "Radii and norms of one matrix");
    auto* c_verify = app.add_subcommand("verify", "Run the inequality suite");
    auto* c_paper = app.add_subcommand("paper-example", "Reproduce the 2x2 golden example");
    auto* c_norms = app.add_subcommand("validate-norms", "Audit the norm registry flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    if (c_compute->parsed()) {
        config.command = Command::compute;
    } else if (c_verify->parsed()) {
        config.command = Command::verify;
    } else if (c_paper->parsed()) {
        config.command = Command::paper_example;
    } else if (c_norms->parsed()) {
        config.command = Command::validate_norms;
    }
    if (o_matrix->count() > 0) {
        config.matrix_path = matrix;
    }
    if (o_norm->count() > 0) {
        config.norm_id = norm;
    }
    config.ensemble_ids = split_csv(ensembles);
    config.checks = split_csv(checks);
    if (o_trials->count() > 0) {
        config.trials = trials;
    }
    if (o_tol->count() > 0) {
        config.tol = tol;
    }
    if (o_out->count() > 0) {
        config.out_path = out_path;
    }
    config.format = format == "machine" ? Format::machine : Format::human;

    try {
        validate(config);
        switch (config.command) {
            case Command::compute: return cmd_compute(config, out);
            case Command::verify: return cmd_verify(config, out);
            case Command::paper_example: return cmd_paper_example(config, out);
            case Command::validate_norms: return cmd_validate_norms(config, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kUsage;
}

}  // namespace numrad::cli
