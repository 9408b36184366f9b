#pragma once

#include <iosfwd>

namespace polyext {

// Runs the full acceptance suite, printing one PASS/FAIL line per criterion.
// Returns the number of failed criteria.  Stretch computations run only when
// POLYEXT_STRETCH is set in the environment.
int run_acceptance_suite(std::ostream& out);

}  // namespace polyext
