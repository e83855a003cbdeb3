#include <gtest/gtest.h>

#include "numrad/errors.hpp"
#include "numrad/suite.hpp"

using namespace numrad;

namespace {

SuiteConfig small_config(std::vector<std::string> checks, std::vector<EnsembleId> ensembles) {
    SuiteConfig c;
    c.checks = select_checks(checks);
    c.ensembles = std::move(ensembles);
    c.norms = default_suite_norms();
    c.trials = 4;
    c.seed = 11;
    return c;
}

}  // namespace

TEST(Suite, EmptyEnsembleListGivesEmptyReport) {
    SuiteConfig c = small_config({}, {});
    const SuiteReport r = run_suite(c);
    EXPECT_TRUE(r.records.empty());
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.summaries.size(), default_checks().size());
}

TEST(Suite, RecordsOrderedByCheckEnsembleNormTrial) {
    const SuiteReport r =
        run_suite(small_config({"kittaneh", "lower_bound"}, {{EnsembleKind::ginibre, 3}, {EnsembleKind::square_zero, 3}}));
    ASSERT_EQ(r.records.size(), 2u * 4u + 2u * 3u * 4u);
    EXPECT_EQ(r.records.front().check, "kittaneh");
    EXPECT_EQ(r.records.front().ensemble, "ginibre:3");
    EXPECT_EQ(r.records[4].ensemble, "nil:3");
    EXPECT_EQ(r.records[8].check, "lower_bound");
    EXPECT_EQ(r.records[8].norm_id, "op");
    EXPECT_EQ(r.records[12].norm_id, "schatten:2");
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(r.records[k].trial, static_cast<int>(k));
        EXPECT_EQ(r.records[k].seed, 11u + k);
    }
    EXPECT_TRUE(r.passed());
}

TEST(Suite, SkipsInapplicableEnsembles) {
    const SuiteReport r = run_suite(small_config({"commuting_product"}, {{EnsembleKind::ginibre, 4}}));
    EXPECT_TRUE(r.records.empty());
}

TEST(Suite, CorruptedCheckSurfacesWitness) {
    SuiteConfig c = small_config({"kittaneh"}, {{EnsembleKind::ginibre, 3}});
    auto original = c.checks[0].run;
    c.checks[0].run = [original](const CheckInput& in, const NormSpec& n, const CheckOptions& o) {
        InequalityReport r = original(in, n, o);
        for (Relation& rel : r.relations) {
            rel.rhs -= 1.0;
            rel.slack = rel.rhs - rel.lhs;
            rel.holds = rel.slack >= -rel.tolerance;
        }
        r.rhs -= 1.0;
        r.slack = r.rhs - r.lhs;
        r.holds = r.slack >= -r.tolerance;
        r.status = r.holds ? CheckStatus::holds : CheckStatus::violated;
        return r;
    };
    const SuiteReport r = run_suite(c);
    EXPECT_FALSE(r.passed());
    EXPECT_GT(r.failures, 0);
    const CheckSummary& s = r.summaries.at("kittaneh");
    EXPECT_GT(s.violated, 0);
    EXPECT_NE(s.witness.find("digest"), std::string::npos);
    EXPECT_NE(s.witness.find("ginibre:3"), std::string::npos);
    ASSERT_TRUE(s.min_slack.has_value());
    EXPECT_LT(*s.min_slack, 0.0);
}

TEST(Suite, ErrorsCountAsFailuresWithoutAbortingOthers) {
    SuiteConfig c = small_config({"kittaneh", "dragomir"}, {{EnsembleKind::ginibre, 2}});
    c.checks[0].run = [](const CheckInput&, const NormSpec&, const CheckOptions&) -> InequalityReport {
        throw Error("boom");
    };
    const SuiteReport r = run_suite(c);
    EXPECT_EQ(r.summaries.at("kittaneh").errors, 4);
    EXPECT_NE(r.summaries.at("kittaneh").first_error.find("boom"), std::string::npos);
    EXPECT_EQ(r.summaries.at("dragomir").holds, 4);
    EXPECT_EQ(r.failures, 4);
}

TEST(Suite, ThreadedRunMatchesSequential) {
    SuiteConfig c = small_config({"basic_bounds", "product"}, {{EnsembleKind::ginibre, 3}, {EnsembleKind::normal, 3}});
    const SuiteReport seq = run_suite(c);
    c.threads = 3;
    const SuiteReport par = run_suite(c);
    ASSERT_EQ(seq.records.size(), par.records.size());
    for (std::size_t k = 0; k < seq.records.size(); ++k) {
        ASSERT_TRUE(seq.records[k].report && par.records[k].report);
        EXPECT_EQ(seq.records[k].report->lhs, par.records[k].report->lhs);
        EXPECT_EQ(seq.records[k].report->rhs, par.records[k].report->rhs);
        EXPECT_EQ(seq.records[k].report->input_digest, par.records[k].report->input_digest);
    }
    EXPECT_EQ(seq.summaries.at("product").min_slack, par.summaries.at("product").min_slack);
}

TEST(Suite, EqualityWitnessesAreRecorded) {
    const SuiteReport r = run_suite(small_config({"basic_bounds", "lower_bound"},
                                                 {{EnsembleKind::square_zero, 4}, {EnsembleKind::normal, 4}}));
    const auto left = r.tightest.at(tightest_key("basic_bounds", "nil:4", "", "||T||/2 <= w(T)"));
    EXPECT_LE(std::abs(left.normalized_slack), 1e-8);
    const auto right = r.tightest.at(tightest_key("basic_bounds", "normal:4", "", "w(T) <= ||T||"));
    EXPECT_LE(std::abs(right.normalized_slack), 1e-8);
    const auto lb = r.tightest.at(tightest_key(
        "lower_bound", "nil:4", "op", "N(TT*+T*T)/4 + sup|N^2(Re)-N^2(Im)|/2 <= w_N^2"));
    EXPECT_LE(std::abs(lb.normalized_slack), 1e-8);
}

TEST(Suite, SelectChecksRejectsUnknownNames) {
    EXPECT_THROW(select_checks({"nope"}), InvalidArgument);
    EXPECT_EQ(select_checks({}).size(), 16u);
}

TEST(Suite, RejectsZeroTrials) {
    SuiteConfig c = small_config({"kittaneh"}, {{EnsembleKind::ginibre, 2}});
    c.trials = 0;
    EXPECT_THROW(run_suite(c), InvalidArgument);
}
