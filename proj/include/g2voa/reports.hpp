#pragma once

#include <string>

namespace g2voa {

struct IdentityResult {
  std::string id;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

// A pinned discrepancy between the engine and a printed line: the corrected
// value asserted by the suite together with the printed form it replaces.
struct DeviationReport {
  std::string id;
  std::string engine_value;
  std::string printed_value;
  std::string note;
  bool relationship_holds = false;
};

}  // namespace g2voa
