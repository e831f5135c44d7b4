#pragma once

#include "sgharm/permutation.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sgh {

// Deliberate single-constant corruptions, used to demonstrate that the
// verification suite can actually fail. Each id names the identity whose
// constant it breaks; the corruption is applied at the checking site in
// verify.cpp, never in the library proper. set_mutation("") clears; unknown
// ids throw std::invalid_argument.
std::vector<std::string> mutation_ids();
void set_mutation(const std::string& id);
bool mutation_enabled(const char* id);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure, empty otherwise
};

struct VerifyReport {
    int n_max = 0;
    std::vector<CheckResult> checks;
    // Informational lines (residual diagnostics); never affect pass/fail.
    std::vector<std::string> diagnostics;
    bool all_pass() const;
};

// Runs every exact identity the library promises, for each pair size
// n <= n_max. Deterministic: fixed seeds, fixed check order, and results
// independent of thread count. Throws when n_max < 1 or when the suite
// would enumerate past the given bound.
VerifyReport run_verification(int n_max, int bound = kEnumerationBound);

void print_report(std::ostream& out, const VerifyReport& r);

}  // namespace sgh
