#pragma once

#include <functional>
#include <string>
#include <vector>

namespace godgraph::checks {

enum class Tier { fast, slow };

struct Outcome {
  bool pass = false;
  std::string detail;  // mismatch description, or a short note when passing
};

// One reference check: a frozen expected value (or invariant) recomputed from
// scratch. Checks are grouped into numbered criteria for the acceptance
// report.
struct Check {
  std::string id;
  int criterion = 0;
  Tier tier = Tier::fast;
  std::string name;
  std::function<Outcome()> run;
};

const std::vector<Check>& all_checks();

// Directory with the generator data files; GODGRAPH_DATA_DIR in the
// environment overrides the build-time default.
std::string data_dir();

}  // namespace godgraph::checks
