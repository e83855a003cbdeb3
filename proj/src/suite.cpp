#include "numrad/suite.hpp"

#include <algorithm>
#include <atomic>
#include <fmt/format.h>
#include <thread>

#include "numrad/errors.hpp"
#include "numrad/rng.hpp"

namespace numrad {
namespace {

using K = EnsembleKind;

CheckInput make_input(const EnsembleId& id, std::uint64_t seed) {
    Sample sample = generate({id.kind, id.dim, seed, 1.0});
    CMat s = sample.second ? std::move(*sample.second)
                           : generate({id.kind, id.dim, mix_seed(seed), 1.0}).first;
    return {std::move(sample.first), std::move(s), id.kind};
}

double normalized(const Relation& r) { return r.slack / std::max(1.0, r.scale); }

double report_min_normalized(const InequalityReport& r) {
    double out = 0.0;
    bool first = true;
    for (const Relation& rel : r.relations) {
        const double v = normalized(rel);
        if (first || v < out) {
            out = v;
            first = false;
        }
    }
    return out;
}

std::optional<SpecialForm> form_for(K kind) {
    switch (kind) {
        case K::normal:
        case K::haar_unitary: return SpecialForm::normal;
        case K::square_zero: return SpecialForm::square_zero;
        case K::hermitian: return SpecialForm::self_adjoint;
        default: return std::nullopt;
    }
}

struct Cell {
    const CheckEntry* entry;
    const EnsembleId* ensemble;
    const NormSpec* norm;
    int trial;
};

}  // namespace

bool TrialRecord::failed() const {
    return !error.empty() || (report && report->status == CheckStatus::violated);
}

std::vector<CheckEntry> default_checks() {
    const std::vector<K> single{K::ginibre, K::hermitian, K::normal, K::haar_unitary,
                                K::square_zero};
    std::vector<CheckEntry> out;
    out.push_back({"basic_bounds", single, false,
                   [](const CheckInput& in, const NormSpec&, const CheckOptions& o) {
                       return check_basic_bounds(in.t, o);
                   }});
    out.push_back({"kittaneh", single, false,
                   [](const CheckInput& in, const NormSpec&, const CheckOptions& o) {
                       return check_kittaneh(in.t, o);
                   }});
    out.push_back({"dragomir", single, false,
                   [](const CheckInput& in, const NormSpec&, const CheckOptions& o) {
                       return check_dragomir(in.t, o);
                   }});
    out.push_back({"inf_upper", {K::ginibre, K::normal, K::square_zero}, true,
                   [](const CheckInput& in, const NormSpec& n, const CheckOptions& o) {
                       return check_inf_upper(in.t, n, o);
                   }});
    out.push_back({"lower_bound", {K::ginibre, K::normal, K::square_zero, K::hermitian}, true,
                   [](const CheckInput& in, const NormSpec& n, const CheckOptions& o) {
                       return check_lower_bound(in.t, n, o);
                   }});
    out.push_back({"product_chain", {K::ginibre, K::square_zero}, true,
                   [](const CheckInput& in, const NormSpec& n, const CheckOptions& o) {
                       return check_product_chain(in.t, in.s, n, o);
                   }});
    out.push_back({"commutator", {K::ginibre, K::square_zero}, true,
                   [](const CheckInput& in, const NormSpec& n, const CheckOptions& o) {
                       return check_commutator(in.t, in.s, n, o);
                   }});
    out.push_back({"unitary_commutator",
                   {K::hermitian_contraction, K::commuting_hermitian_pair,
                    K::anticommuting_hermitian_pair},
                   true,
                   [](const CheckInput& in, const NormSpec& n, const CheckOptions& o) {
                       return check_unitary_commutator(in.t, in.s, n, o);
                   }});
    out.push_back({"self_commutator", {K::square_zero, K::haar_unitary, K::hermitian_contraction},
                   true,
                   [](const CheckInput& in, const NormSpec& n, const CheckOptions& o) {
                       return check_self_commutator(in.t, n, o);
                   }});
    out.push_back({"product", {K::ginibre, K::square_zero, K::normal}, true,
                   [](const CheckInput& in, const NormSpec& n, const CheckOptions& o) {
                       return check_product(in.t, in.s, n, o);
                   }});
    out.push_back({"commuting_product",
                   {K::commuting_hermitian_pair, K::anticommuting_hermitian_pair}, true,
                   [](const CheckInput& in, const NormSpec& n, const CheckOptions& o) {
                       return check_commuting_product(in.t, in.s, n, o);
                   }});
    out.push_back({"omega_upper", {K::ginibre, K::square_zero, K::normal, K::hermitian}, false,
                   [](const CheckInput& in, const NormSpec&, const CheckOptions& o) {
                       return check_omega_upper(in.t, o);
                   }});
    out.push_back({"w_omega_chain", {K::ginibre, K::square_zero, K::normal}, false,
                   [](const CheckInput& in, const NormSpec&, const CheckOptions& o) {
                       return check_w_omega_chain(in.t, o);
                   }});
    out.push_back({"omega_equality", {K::ginibre, K::square_zero}, false,
                   [](const CheckInput& in, const NormSpec&, const CheckOptions& o) {
                       return check_omega_equality_condition(in.t, o);
                   }});
    out.push_back({"special_forms", {K::normal, K::haar_unitary, K::square_zero, K::hermitian},
                   false,
                   [](const CheckInput& in, const NormSpec&, const CheckOptions& o) {
                       return check_special_forms(in.t, *form_for(in.kind), o);
                   }});
    out.push_back({"c2_corollary", {K::ginibre, K::square_zero, K::normal}, false,
                   [](const CheckInput& in, const NormSpec&, const CheckOptions& o) {
                       return check_c2_corollary(in.t, in.s, o);
                   }});
    return out;
}

std::vector<CheckEntry> select_checks(const std::vector<std::string>& names) {
    std::vector<CheckEntry> all = default_checks();
    if (names.empty()) {
        return all;
    }
    std::vector<CheckEntry> out;
    for (const std::string& name : names) {
        auto it = std::find_if(all.begin(), all.end(),
                               [&](const CheckEntry& e) { return e.name == name; });
        if (it == all.end()) {
            throw InvalidArgument("unknown check '" + name + "'");
        }
        out.push_back(*it);
    }
    return out;
}

std::vector<EnsembleId> default_ensembles() {
    return {{K::ginibre, 4},      {K::hermitian, 4},
            {K::normal, 4},       {K::haar_unitary, 4},
            {K::square_zero, 4},  {K::hermitian_contraction, 4},
            {K::commuting_hermitian_pair, 4}, {K::anticommuting_hermitian_pair, 4}};
}

std::vector<NormSpec> default_suite_norms() {
    return {operator_norm_spec(), schatten_norm_spec(2.0), schatten_norm_spec(1.0)};
}

std::string tightest_key(const std::string& check, const std::string& ensemble,
                         const std::string& norm_id, const std::string& relation) {
    return check + "|" + ensemble + "|" + norm_id + "|" + relation;
}

SuiteReport run_suite(const SuiteConfig& config) {
    if (config.trials < 1) {
        throw InvalidArgument("trials must be at least 1");
    }
    static const NormSpec kNoNorm{};
    std::vector<Cell> cells;
    for (const CheckEntry& entry : config.checks) {
        for (const EnsembleId& ens : config.ensembles) {
            if (std::find(entry.ensembles.begin(), entry.ensembles.end(), ens.kind) ==
                entry.ensembles.end()) {
                continue;
            }
            std::vector<const NormSpec*> norms;
            if (entry.takes_norm) {
                for (const NormSpec& n : config.norms) {
                    norms.push_back(&n);
                }
            } else {
                norms.push_back(&kNoNorm);
            }
            for (const NormSpec* n : norms) {
                for (int trial = 0; trial < config.trials; ++trial) {
                    cells.push_back({&entry, &ens, n, trial});
                }
            }
        }
    }

    SuiteReport out;
    out.records.resize(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const Cell& c = cells[i];
            TrialRecord& rec = out.records[i];
            rec.check = c.entry->name;
            rec.ensemble = ensemble_id(c.ensemble->kind, c.ensemble->dim);
            rec.norm_id = c.norm->id;
            rec.trial = c.trial;
            rec.seed = config.seed + static_cast<std::uint64_t>(c.trial);
            try {
                const CheckInput input = make_input(*c.ensemble, rec.seed);
                rec.report = c.entry->run(input, *c.norm, config.options);
            } catch (const std::exception& e) {
                rec.error = e.what();
            }
        }
    };
    const int threads = std::max(1, config.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    for (const CheckEntry& entry : config.checks) {
        out.summaries[entry.name].check = entry.name;
    }
    for (const TrialRecord& rec : out.records) {
        CheckSummary& sum = out.summaries[rec.check];
        ++sum.records;
        if (!rec.error.empty()) {
            ++sum.errors;
            ++out.failures;
            if (sum.first_error.empty()) {
                sum.first_error = fmt::format("{} seed {}: {}", rec.ensemble, rec.seed, rec.error);
            }
            continue;
        }
        const InequalityReport& r = *rec.report;
        switch (r.status) {
            case CheckStatus::inapplicable: ++sum.inapplicable; continue;
            case CheckStatus::holds: ++sum.holds; break;
            case CheckStatus::violated:
                ++sum.violated;
                ++out.failures;
                if (sum.witness.empty()) {
                    sum.witness = fmt::format("{} {} seed {} digest {}", rec.ensemble, rec.norm_id,
                                              rec.seed, r.input_digest);
                }
                break;
        }
        const double m = report_min_normalized(r);
        if (!sum.min_slack || m < *sum.min_slack) {
            sum.min_slack = m;
        }
        for (const Relation& rel : r.relations) {
            const std::string key = tightest_key(rec.check, rec.ensemble, rec.norm_id, rel.label);
            const double v = normalized(rel);
            auto it = out.tightest.find(key);
            if (it == out.tightest.end() || v < it->second.normalized_slack) {
                out.tightest[key] = {v, rel.slack, rel.scale, rec.seed, r.input_digest};
            }
        }
        if (rec.check == "omega_equality" && !r.note.empty()) {
            out.near_equality.push_back(
                fmt::format("{} seed {} digest {}: {}", rec.ensemble, rec.seed, r.input_digest, r.note));
        }
    }
    return out;
}

}  // namespace numrad
