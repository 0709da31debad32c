#pragma once

#include <string>
#include <vector>

namespace signlab {

struct SuiteItem {
  std::string name;
  bool passed = false;
  double value = 0.0;   // the quantity checked (margin, deviation, ...)
  std::string note;
};

struct SuiteReport {
  std::string suite;
  bool passed = false;
  std::vector<SuiteItem> items;
};

/// Known suites: fig1-minimizer, prop1, step1, bathtub, improvement,
/// torus-bridge, properties.  Throws Error for unknown names.
SuiteReport run_suite(const std::string& name, unsigned seed = 1234);

const std::vector<std::string>& suite_names();

std::string suite_report_json(const SuiteReport& r);

}  // namespace signlab
