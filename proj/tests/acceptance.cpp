// Acceptance criteria runner.  Prints one pass/fail line per criterion.
// Usage: acceptance [--seed N] [--only K]
// Exit 0 iff every executed criterion passes.

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "iqr/verify.hpp"

int main(int argc, char** argv) {
    iqr::VerifyOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) {
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
            opt.only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--seed N] [--only K]\n";
            return 64;
        }
    }
    const auto results = iqr::run_criteria(opt);
    std::cout << iqr::render_report(results);
    return iqr::all_passed(results) ? 0 : 1;
}
