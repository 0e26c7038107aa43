#pragma once

#include <string>
#include <vector>

namespace bn {

// chain: alpha / alpha_bn / alpha_h with the inequality chain between them.
// corona: the alpha_bn(corona) = n + alpha identity plus witness round-trips.
// trees: degree partition, branch bound, and the n-1 characterization.
// caterpillars: exact bound and the closed-form special cases.
// q61: does the branch bound hold on trees? Violations are findings.
enum class Suite { chain, corona, trees, caterpillars, q61, all };

Suite suite_from_string(const std::string& name);
std::string to_string(Suite suite);

struct BatchOptions {
    Suite suite = Suite::chain;
    int jobs = 1;
};

// One JSON object per input line, in input order, plus a trailing summary
// object. Records carry no timing or host details, so output is
// byte-identical for any job count.
struct BatchResult {
    std::vector<std::string> records;
    std::string summary;
    int passed = 0;
    int failed = 0;
    int findings = 0;
    int skipped = 0;
    int parse_errors = 0;

    std::string jsonl() const;
};

// Each line is one graph6 graph; blank lines and '#' comments are ignored.
BatchResult run_batch(const std::vector<std::string>& lines, const BatchOptions& options);

}  // namespace bn
