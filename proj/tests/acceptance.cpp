// Acceptance run: one line per criterion, nonzero exit if a core row fails.
// Extended rows are included; they may end indeterminate without failing.

#include <dismantle/suite.hpp>

#include <cstdio>

using namespace dismantle;

int main() {
    SuiteOptions opts;
    opts.extended = true;
    opts.on_row = [](const SuiteRow & r) {
        const char * verdict = r.outcome == Outcome::pass ? "PASS" : r.outcome == Outcome::fail ? "FAIL" : "INDETERMINATE";
        std::printf("criterion %-3s %-13s %7.2fs  %s: %s\n", r.id.c_str(), verdict, r.seconds, r.title.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
    };
    auto rows = run_suite(opts);
    bool ok = suite_passed(rows);
    std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}
