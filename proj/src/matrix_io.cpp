#include "numrad/matrix_io.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "numrad/errors.hpp"

namespace numrad {
namespace {

using nlohmann::json;

std::size_t read_dim(const json& doc, const char* field) {
    if (!doc.contains(field)) {
        throw ParseError(field, "missing");
    }
    const json& v = doc.at(field);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ParseError(field, "must be a positive integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
}

double read_component(const json& v, const std::string& field) {
    if (!v.is_number()) {
        throw ParseError(field, "must be a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ParseError(field, "must be finite");
    }
    return x;
}

}  // namespace

CMat parse_matrix(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("document", e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("document", "expected an object with rows, cols and data");
    }
    const std::size_t rows = read_dim(doc, "rows");
    const std::size_t cols = read_dim(doc, "cols");
    if (!doc.contains("data")) {
        throw ParseError("data", "missing");
    }
    const json& data = doc.at("data");
    if (!data.is_array()) {
        throw ParseError("data", "must be an array of [re, im] pairs");
    }
    if (data.size() != rows * cols) {
        throw ParseError("data", fmt::format("has {} entries, rows*cols = {}", data.size(), rows * cols));
    }
    std::vector<cplx> values;
    values.reserve(data.size());
    for (std::size_t k = 0; k < data.size(); ++k) {
        const json& pair = data[k];
        const std::string field = fmt::format("data[{}]", k);
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError(field, "must be a [re, im] pair");
        }
        values.emplace_back(read_component(pair[0], field + "[0]"),
                            read_component(pair[1], field + "[1]"));
    }
    return CMat(rows, cols, std::move(values));
}

CMat read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("path", "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

std::string format_matrix(const CMat& a) {
    std::string out = fmt::format("{{\"rows\": {}, \"cols\": {}, \"data\": [", a.rows(), a.cols());
    const auto& d = a.data();
    for (std::size_t k = 0; k < d.size(); ++k) {
        out += fmt::format("{}[{:.17g}, {:.17g}]", k == 0 ? "" : ", ", d[k].real(), d[k].imag());
    }
    out += "]}\n";
    return out;
}

void write_matrix(const std::filesystem::path& path, const CMat& a) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << format_matrix(a);
}

}  // namespace numrad
