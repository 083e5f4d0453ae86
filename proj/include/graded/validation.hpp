#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace graded {

// One violated axiom with the tuple of element ids that witnesses it.
struct Violation {
    std::string axiom;
    std::vector<int> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string axiom, std::vector<int> witness = {}, std::string detail = "") {
        violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
    }
    std::string summary() const;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport rep)
        : std::runtime_error(rep.summary()), report(std::move(rep)) {}
    ValidationReport report;
};

// Raised when a proved identity fails at runtime; always an engine defect,
// never a mathematical discovery. Carries a reproduction bundle.
class TheoremFailure : public std::runtime_error {
public:
    TheoremFailure(const std::string& what, std::string bundle_json)
        : std::runtime_error(what), bundle(std::move(bundle_json)) {}
    std::string bundle;
};

// Boolean query outcome plus the witness that settles it.
struct CheckResult {
    bool ok = false;
    std::string reason;
    std::vector<int> witness;

    explicit operator bool() const { return ok; }
};

}  // namespace graded
