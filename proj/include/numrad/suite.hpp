#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numrad/checks.hpp"
#include "numrad/ensembles.hpp"

namespace numrad {

// Matrices handed to a check. `second` is always set: pair kinds supply it,
// single kinds draw it from the same kind at seed mix_seed(seed).
struct CheckInput {
    CMat t;
    CMat s;
    EnsembleKind kind;
};

struct CheckEntry {
    std::string name;
    std::vector<EnsembleKind> ensembles;  // kinds the check is run on
    bool takes_norm = false;
    std::function<InequalityReport(const CheckInput&, const NormSpec&, const CheckOptions&)> run;
};

// Every check of the inequality lab with its applicable ensembles.
std::vector<CheckEntry> default_checks();

// Checks are selected by name; throws InvalidArgument on an unknown name.
std::vector<CheckEntry> select_checks(const std::vector<std::string>& names);

std::vector<EnsembleId> default_ensembles();
std::vector<NormSpec> default_suite_norms();  // op, schatten:2, schatten:1

struct SuiteConfig {
    std::vector<EnsembleId> ensembles;
    std::vector<CheckEntry> checks;
    std::vector<NormSpec> norms;  // used by checks with takes_norm
    int trials = 100;
    std::uint64_t seed = 2024;
    CheckOptions options{};
    int threads = 1;
};

struct TrialRecord {
    std::string check;
    std::string ensemble;
    std::string norm_id;
    int trial = 0;
    std::uint64_t seed = 0;
    std::optional<InequalityReport> report;
    std::string error;  // set when the check threw

    bool failed() const;
};

// Smallest normalized slack seen for one relation of one check on one
// ensemble; an equality witness when it is within 1e-8.
struct Tightest {
    double normalized_slack = 0.0;
    double slack = 0.0;
    double scale = 0.0;
    std::uint64_t seed = 0;
    std::string digest;
};

struct CheckSummary {
    std::string check;
    int records = 0;
    int holds = 0;
    int violated = 0;
    int inapplicable = 0;
    int errors = 0;
    std::optional<double> min_slack;  // normalized, over applicable records
    std::string witness;              // "ensemble seed digest" of the first failure
    std::string first_error;
};

struct SuiteReport {
    std::vector<TrialRecord> records;  // ordered by (check, ensemble, norm, trial)
    std::map<std::string, CheckSummary> summaries;
    // Keyed "check|ensemble|norm|relation label".
    std::map<std::string, Tightest> tightest;
    std::vector<std::string> near_equality;  // noted inputs, never failures
    int failures = 0;

    bool passed() const { return failures == 0; }
};

SuiteReport run_suite(const SuiteConfig& config);

// Key into SuiteReport::tightest.
std::string tightest_key(const std::string& check, const std::string& ensemble,
                         const std::string& norm_id, const std::string& relation);

}  // namespace numrad
