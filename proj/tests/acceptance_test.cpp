// Runs every acceptance criterion at its stated tolerance and prints one
// pass/fail line per criterion.

#include <iostream>

#include "fragmenta/verify.hpp"

int main() {
    fragmenta::VerifyReport report = fragmenta::run_all_claims();
    std::cout << fragmenta::criterion_summary(report);
    std::cout << "total: " << report.passed << " passed, " << report.failed << " failed, "
              << report.skipped << " skipped\n";
    return report.exit_code;
}
