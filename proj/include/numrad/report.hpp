#pragma once
//
// Flat records rendered either as aligned text or as JSON lines. Both forms
// print reals with 17 significant digits, so they carry identical values and
// machine output is byte-stable for a fixed configuration.
//

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "numrad/norms.hpp"
#include "numrad/suite.hpp"

namespace numrad {

enum class Format { human, machine };

class Record {
  public:
    using Value = std::variant<double, long long, bool, std::string>;

    explicit Record(std::string kind) : kind_(std::move(kind)) {}

    Record& add(std::string key, double v);
    Record& add(std::string key, long long v);
    Record& add(std::string key, int v) { return add(std::move(key), static_cast<long long>(v)); }
    Record& add(std::string key, std::uint64_t v);
    Record& add(std::string key, bool v);
    Record& add(std::string key, std::string v);
    Record& add(std::string key, const char* v) { return add(std::move(key), std::string(v)); }

    const std::string& kind() const noexcept { return kind_; }
    const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }

  private:
    std::string kind_;
    std::vector<std::pair<std::string, Value>> fields_;
};

std::string format_real(double v);
std::string render(const Record& r, Format f);
std::string render(const std::vector<Record>& rs, Format f);

// One record per (check, ensemble, norm, trial), then one footer per check.
std::vector<Record> suite_records(const SuiteReport& report);
std::vector<Record> audit_records(const NormAudit& audit, bool passed, const std::string& reason);

}  // namespace numrad
