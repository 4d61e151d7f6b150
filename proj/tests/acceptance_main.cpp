#include <iostream>

#include "bgls/acceptance.hpp"

int main() {
    const auto results = bgls::run_acceptance(std::cout);
    return bgls::all_passed(results) ? 0 : 1;
}
