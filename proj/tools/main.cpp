#include "rwa/cli.hpp"

int main(int argc, char** argv) {
    return rwa::cli::run(argc, argv);
}
