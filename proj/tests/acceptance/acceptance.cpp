#include <cstdlib>
#include <iostream>

#include "support/acceptance.hpp"

// Usage: acceptance [criterion ids...]; no arguments runs all eight.
int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    return kempf::acceptance::run_all(std::cout, false, only) == 0 ? 0 : 1;
}
