#include <cstdlib>
#include <iostream>

#include "dimers/acceptance.hpp"

int main() {
    bool ok = dimers::acceptance::report(std::cout);
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
