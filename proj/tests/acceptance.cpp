// Cross-validation acceptance suite: one pass/fail line per criterion.
#include "z2gg/validate.hpp"

#include <chrono>
#include <iostream>

int main() {
    auto t0 = std::chrono::steady_clock::now();
    auto results = z2gg::run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.description << "\n";
        std::cout << "      " << r.detail << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES above")
              << "  (" << secs << " s)\n";
    return all ? 0 : 1;
}
