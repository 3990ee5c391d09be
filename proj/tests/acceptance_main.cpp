// Runs every acceptance criterion at its stated tolerance and prints one
// pass/fail line per criterion. Exit 0 iff all pass.

#include <iostream>

#include "vortexwave/acceptance.hpp"

int main() {
  const int failures = vortexwave::acceptance::run_all(std::cout);
  if (failures != 0)
    std::cout << failures << " criterion(s) failed\n";
  else
    std::cout << "all acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
