#include "zmlab/serialize.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace zmlab {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const OutputRecord& rec, std::ostream& os) {
    os << "# schema_version," << rec.schema_version << "\n";
    os << "# subcommand," << rec.subcommand << "\n";
    for (const auto& [k, v] : rec.inputs) os << "# " << k << "," << v << "\n";
    for (const auto& [k, v] : rec.verdicts) os << "# verdict_" << k << "," << v << "\n";
    for (std::size_t i = 0; i < rec.columns.size(); ++i)
        os << rec.columns[i] << (i + 1 < rec.columns.size() ? "," : "");
    os << "\n";
    for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
        os << "\n";
    }
}

void write_json(const OutputRecord& rec, std::ostream& os) {
    nlohmann::json j;
    j["schema_version"] = rec.schema_version;
    j["subcommand"] = rec.subcommand;
    j["inputs"] = rec.inputs;
    j["columns"] = rec.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rec.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (double v : row) r.push_back(v); // shortest round-trip rendering
        rows.push_back(r);
    }
    j["rows"] = rows;
    j["verdicts"] = rec.verdicts;
    os << j.dump(2) << "\n";
}

} // namespace zmlab
