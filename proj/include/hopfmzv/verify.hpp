#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hopfmzv {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    /// First failing input, empty when passed.
    std::string counterexample;
};

struct VerifyOptions {
    int guard = 4;
};

using Property = std::function<PropertyResult(const VerifyOptions&)>;

struct NamedProperty {
    std::string suite;
    Property run;
};

/// Properties of one suite ("hopf", "birkhoff", "rota-baxter", "qseries").
/// Throws std::invalid_argument for an unknown name.
std::vector<NamedProperty> suite_properties(const std::string& suite);
std::vector<std::string> suite_names();

/// Runs a suite, or every suite for "all".
std::vector<PropertyResult> run_suite(const std::string& suite, const VerifyOptions& options = {});

/// "name: PASS" / "name: FAIL (counterexample: ...)" lines.
void print_report(const std::vector<PropertyResult>& results, std::ostream& out);
bool all_passed(const std::vector<PropertyResult>& results);

} // namespace hopfmzv
