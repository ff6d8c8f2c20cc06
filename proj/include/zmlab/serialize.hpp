#pragma once

#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace zmlab {

// One tabular result: echoed inputs, fixed columns, rows of doubles, and
// named pass/fail verdicts.  CSV and JSON carry the same content; numbers
// are printed with 17 significant digits so they parse back bit-exactly.
struct OutputRecord {
    int schema_version = 1;
    std::string subcommand;
    std::map<std::string, std::string> inputs;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, std::string> verdicts; // "pass"/"fail"/free-form

    bool all_pass() const {
        for (const auto& [k, v] : verdicts)
            if (v == "fail") return false;
        return true;
    }
};

std::string format_double(double v);

void write_csv(const OutputRecord& rec, std::ostream& os);
void write_json(const OutputRecord& rec, std::ostream& os);

} // namespace zmlab
