#pragma once

#include "refinery/encoders.hpp"

namespace refinery {

// The fixed query set shared by the pruning tests and the benchmarks:
// stabiliser, transporter, and intersection problems at desk scale, each
// carrying its refiners so it can be searched with or without them.
struct BenchQuery {
  std::string name;
  int degree = 0;
  std::vector<RefinerPair> refiners;
  bool fully_perfect = false;
};

std::vector<BenchQuery> standard_query_set();

}  // namespace refinery
