#include "numrad/report.hpp"

#include <cmath>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace numrad {

Record& Record::add(std::string key, double v) {
    fields_.emplace_back(std::move(key), v);
    return *this;
}
Record& Record::add(std::string key, long long v) {
    fields_.emplace_back(std::move(key), v);
    return *this;
}
Record& Record::add(std::string key, std::uint64_t v) {
    fields_.emplace_back(std::move(key), fmt::format("{}", v));
    return *this;
}
Record& Record::add(std::string key, bool v) {
    fields_.emplace_back(std::move(key), v);
    return *this;
}
Record& Record::add(std::string key, std::string v) {
    fields_.emplace_back(std::move(key), std::move(v));
    return *this;
}

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string value_text(const Record::Value& v, bool machine) {
    return std::visit(
        [machine](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                return machine && !std::isfinite(x) ? "null" : format_real(x);
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, long long>) {
                return fmt::format("{}", x);
            } else {
                return machine ? quoted(x) : x;
            }
        },
        v);
}

}  // namespace

std::string render(const Record& r, Format f) {
    std::string out;
    if (f == Format::machine) {
        out = "{\"record\": " + quoted(r.kind());
        for (const auto& [key, value] : r.fields()) {
            out += ", " + quoted(key) + ": " + value_text(value, true);
        }
        out += "}\n";
    } else {
        out = r.kind();
        for (const auto& [key, value] : r.fields()) {
            out += "  " + key + "=" + value_text(value, false);
        }
        out += "\n";
    }
    return out;
}

std::string render(const std::vector<Record>& rs, Format f) {
    std::string out;
    for (const Record& r : rs) {
        out += render(r, f);
    }
    return out;
}

std::vector<Record> suite_records(const SuiteReport& report) {
    std::vector<Record> out;
    for (const TrialRecord& rec : report.records) {
        Record r("trial");
        r.add("check", rec.check).add("ensemble", rec.ensemble);
        if (!rec.norm_id.empty()) {
            r.add("norm", rec.norm_id);
        }
        r.add("trial", rec.trial).add("seed", rec.seed);
        if (!rec.error.empty()) {
            r.add("status", "error").add("error", rec.error);
        } else {
            const InequalityReport& ir = *rec.report;
            r.add("name", ir.name)
                .add("paper_tag", ir.paper_tag)
                .add("status", std::string(to_string(ir.status)))
                .add("lhs", ir.lhs)
                .add("rhs", ir.rhs)
                .add("slack", ir.slack)
                .add("holds", ir.holds)
                .add("tolerance", ir.tolerance)
                .add("input_digest", ir.input_digest);
            if (!ir.note.empty()) {
                r.add("note", ir.note);
            }
        }
        out.push_back(std::move(r));
    }
    for (const auto& [name, sum] : report.summaries) {
        Record r("summary");
        r.add("check", name)
            .add("records", sum.records)
            .add("holds", sum.holds)
            .add("violated", sum.violated)
            .add("inapplicable", sum.inapplicable)
            .add("errors", sum.errors);
        if (sum.min_slack) {
            r.add("min_slack", *sum.min_slack);
        }
        if (!sum.witness.empty()) {
            r.add("witness", sum.witness);
        }
        if (!sum.first_error.empty()) {
            r.add("first_error", sum.first_error);
        }
        out.push_back(std::move(r));
    }
    for (const std::string& note : report.near_equality) {
        out.push_back(Record("near_equality").add("input", note));
    }
    Record total("total");
    total.add("records", static_cast<long long>(report.records.size()))
        .add("failures", report.failures)
        .add("passed", report.passed());
    out.push_back(std::move(total));
    return out;
}

std::vector<Record> audit_records(const NormAudit& a, bool passed, const std::string& reason) {
    Record r("norm_audit");
    r.add("norm", a.id)
        .add("dim", static_cast<long long>(a.dim))
        .add("trials", a.trials)
        .add("zero", a.zero)
        .add("homogeneity", a.homogeneity)
        .add("triangle", a.triangle)
        .add("self_adjoint", a.self_adjoint)
        .add("algebra", a.algebra)
        .add("unitary_invariance", a.unitary_invariance)
        .add("max_unitary_value", a.max_unitary_value);
    if (a.unitary_sup) {
        r.add("unitary_sup", *a.unitary_sup)
            .add("unitary_sup_excess", a.unitary_sup_excess)
            .add("unitary_sup_gap", a.unitary_sup_gap);
    }
    r.add("passed", passed);
    if (!reason.empty()) {
        r.add("reason", reason);
    }
    std::vector<Record> out{std::move(r)};
    if (a.algebra_witness) {
        Record w("algebra_witness");
        w.add("norm", a.id)
            .add("dim", static_cast<long long>(a.dim))
            .add("pair", a.algebra_witness->pair)
            .add("digest", a.algebra_witness->digest)
            .add("product_norm", a.algebra_witness->product_norm)
            .add("bound", a.algebra_witness->bound);
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace numrad
