#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <fstream>
#include <sstream>

#include "numrad/cli.hpp"
#include "numrad/matrix_io.hpp"

using namespace numrad;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "numrad");
    std::vector<const char*> argv;
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(nlohmann::json::parse(line));
    }
    return out;
}

std::string temp_matrix(const std::string& name, const CMat& a) {
    const auto path = std::filesystem::temp_directory_path() / name;
    write_matrix(path, a);
    return path.string();
}

}  // namespace

TEST(CliCompute, GoldenMatrix) {
    const std::string path = temp_matrix("numrad_cli_t.json", CMat::from_rows({{1, 1}, {0, 0}}));
    const CliRun r = run({"compute", "--matrix", path, "--format", "machine"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rec = json_lines(r.out).at(0);
    EXPECT_NEAR(rec["w"].get<double>(), 1.207106781, 1e-8);
    EXPECT_NEAR(rec["norm_re"].get<double>(), 1.207106781, 1e-8);
    EXPECT_NEAR(rec["norm_im"].get<double>(), 0.5, 1e-12);
    EXPECT_TRUE(rec.contains("omega"));
    EXPECT_TRUE(rec.contains("w_argmax_theta"));
}

TEST(CliCompute, SquareZeroAndZero) {
    const std::string e12 = temp_matrix("numrad_cli_e12.json", CMat::from_rows({{0, 1}, {0, 0}}));
    const auto rec = json_lines(run({"compute", "--matrix", e12, "--format", "machine"}).out).at(0);
    EXPECT_NEAR(rec["w"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(rec["omega"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(rec["w_omega"].get<double>(), 0.707106781, 1e-9);

    const std::string zero = temp_matrix("numrad_cli_zero.json", CMat::zeros(2));
    const auto z = json_lines(run({"compute", "--matrix", zero, "--format", "machine"}).out).at(0);
    for (const char* key : {"norm", "frobenius", "w", "w_N", "omega", "w_omega", "hs_radius_sq"}) {
        EXPECT_EQ(z[key].get<double>(), 0.0) << key;
    }
}

TEST(CliCompute, UsageErrors) {
    EXPECT_EQ(run({"compute"}).code, 2);
    const CliRun missing = run({"compute", "--matrix", "/nonexistent/matrix.json"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("path"), std::string::npos);

    const auto bad = std::filesystem::temp_directory_path() / "numrad_cli_bad.json";
    std::ofstream(bad) << R"({"rows": 2, "cols": 2, "data": [[0, 0]]})";
    const CliRun r = run({"compute", "--matrix", bad.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("'data'"), std::string::npos);

    const std::string rect = temp_matrix("numrad_cli_rect.json", CMat(2, 3));
    EXPECT_EQ(run({"compute", "--matrix", rect}).code, 2);
}

TEST(CliVerify, KittanehOnSquareZero) {
    const CliRun r = run({"verify", "--checks", "kittaneh", "--ensembles", "nil:4", "--trials", "10",
                       "--format", "machine"});
    ASSERT_EQ(r.code, 0) << r.err;
    bool seen = false;
    for (const auto& rec : json_lines(r.out)) {
        if (rec["record"] == "summary") {
            seen = true;
            // w = 1/2 against (√2/2)·1 for every unit square-zero matrix.
            EXPECT_NEAR(rec["min_slack"].get<double>(), 0.70710678118654757 - 0.5, 1e-9);
        }
    }
    EXPECT_TRUE(seen);
}

TEST(CliVerify, ConfigErrors) {
    EXPECT_EQ(run({"verify", "--trials", "0"}).code, 2);
    EXPECT_EQ(run({"verify", "--tol", "-1"}).code, 2);
    EXPECT_EQ(run({"verify", "--ensembles", "gue:3"}).code, 2);
    EXPECT_EQ(run({"verify", "--checks", "nonsense"}).code, 2);
    EXPECT_EQ(run({"verify", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(CliVerify, MachineOutputIsStable) {
    const std::vector<std::string> args{"verify", "--checks", "dragomir,product", "--ensembles", "ginibre:3",
                                        "--trials", "3", "--format", "machine"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(CliVerify, HumanAndMachineAgree) {
    const CliRun m = run({"verify", "--checks", "kittaneh", "--ensembles", "ginibre:2", "--trials", "2",
                       "--format", "machine"});
    const CliRun h = run({"verify", "--checks", "kittaneh", "--ensembles", "ginibre:2", "--trials", "2"});
    for (const auto& rec : json_lines(m.out)) {
        if (rec["record"] == "trial") {
            const std::string lhs = "lhs=" + format_real(rec["lhs"].get<double>());
            EXPECT_NE(h.out.find(lhs), std::string::npos) << lhs;
        }
    }
}

TEST(CliPaperExample, DefaultPasses) {
    const CliRun r = run({"paper-example", "--format", "machine"});
    EXPECT_EQ(r.code, 0);
    const auto recs = json_lines(r.out);
    EXPECT_EQ(recs.size(), 9u);
    for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
        EXPECT_EQ(recs[k]["record"], "assertion");
        EXPECT_EQ(recs[k]["passed"], true);
    }
    EXPECT_EQ(recs.back()["passed"], true);
}

TEST(CliPaperExample, ExtremeToleranceIsReported) {
    const CliRun r = run({"paper-example", "--tol", "1e-15"});
    EXPECT_TRUE(r.code == 0 || r.code == 1);
}

TEST(CliValidateNorms, FlaggedNumericalRadiusFails) {
    NormSpec w = numerical_radius_norm_spec();
    w.algebra = true;
    cli::RunConfig config;
    config.command = cli::Command::validate_norms;
    config.trials = 5;
    config.format = Format::machine;
    std::ostringstream out;
    EXPECT_EQ(cli::validate_registry({w}, config, out), 1);
    bool witness = false;
    for (const auto& rec : json_lines(out.str())) {
        witness = witness || rec["record"] == "algebra_witness";
    }
    EXPECT_TRUE(witness);
}

TEST(CliValidateNorms, SingleNormAndUnknownId) {
    EXPECT_EQ(run({"validate-norms", "--norm", "schatten:2", "--trials", "5"}).code, 0);
    EXPECT_EQ(run({"validate-norms", "--norm", "kyfan:2"}).code, 2);
}

TEST(CliOut, WritesReportFile) {
    const auto path = std::filesystem::temp_directory_path() / "numrad_cli_out.txt";
    std::filesystem::remove(path);
    const CliRun r = run({"paper-example", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_GT(std::filesystem::file_size(path), 100u);
}
