#include <iostream>

#include "opensys/acceptance.hpp"

int main() {
  bool ok = true;
  for (const auto& r : opensys::run_acceptance(OPENSYS_DATA_DIR)) {
    std::cout << opensys::format(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
