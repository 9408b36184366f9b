#include <iostream>

#include "polyext/suite.hpp"

int main() { return polyext::run_acceptance_suite(std::cout); }
