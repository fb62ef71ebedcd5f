#pragma once

#include <string>
#include <vector>

namespace qmono {

struct SelftestCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Relation identities, the fixed vector a + b, the bounded orbit claim and
// the fixture loop classifications.
std::vector<SelftestCheck> run_selftest();

}  // namespace qmono
