#pragma once

#include <string>
#include <vector>

namespace cli {

struct PropertyResult {
    std::string name;
    bool pass = true;
    std::string detail;
    std::vector<std::string> witnesses;  // every failing case, exact values
    std::vector<std::string> notes;
};

const std::vector<std::string>& verification_selections();
bool selection_known(const std::string& selection);

/// Runs one named property suite, or every suite for "all".
std::vector<PropertyResult> run_verification(const std::string& selection);

std::string format_report(const std::vector<PropertyResult>& results);
bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace cli
