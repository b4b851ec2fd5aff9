// Runs criteria 1-12 and exits nonzero if any fails.

#include <cstring>
#include <iostream>

#include "rwa/acceptance.hpp"

int main(int argc, char** argv) {
    rwa::acceptance::Options opts;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--artifacts") == 0) opts.artifact_dir = argv[i + 1];
    const auto results = rwa::acceptance::run_acceptance(opts, std::cout);
    return rwa::acceptance::print_summary(results, std::cout) ? 0 : 1;
}
