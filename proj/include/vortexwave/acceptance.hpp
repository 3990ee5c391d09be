#ifndef VORTEXWAVE_ACCEPTANCE_HPP
#define VORTEXWAVE_ACCEPTANCE_HPP

#include <iosfwd>

namespace vortexwave::acceptance {

// Runs the full acceptance suite, printing one PASS/FAIL line per
// criterion. Returns the number of failed criteria.
int run_all(std::ostream& out);

}  // namespace vortexwave::acceptance

#endif  // VORTEXWAVE_ACCEPTANCE_HPP
