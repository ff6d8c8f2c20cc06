#pragma once

#include <stdexcept>
#include <string>

namespace zmlab {

// Invalid or inadmissible inputs (bad parameters, pole arguments, malformed
// windows).  The CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation exceeded its budget or could not reach the requested
// truncation quality (divergent tail, non-convergent series, window too
// small).  The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace zmlab
