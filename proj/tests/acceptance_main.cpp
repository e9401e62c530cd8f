// Acceptance gate: runs the built-in ground-truth suite and prints one
// [PASS]/[FAIL] line per check. Exit code is the number of failures.

#include "hessplus/groundtruth.hpp"

#include <cstdio>

int main() {
    auto results = hessplus::run_ground_truth_suite();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] %-26s %8.1f ms", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.elapsed_ms);
        if (!r.detail.empty()) std::printf("  %s", r.detail.c_str());
        std::printf("\n");
        if (!r.pass) ++failures;
    }
    std::printf("%zu/%zu checks passed\n", results.size() - static_cast<size_t>(failures),
                results.size());
    return failures;
}
