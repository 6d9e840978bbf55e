#pragma once

#include <functional>

#include "refinery/action.hpp"

namespace refinery {

// Brute-force ground truth over Sym(degree). Everything here enumerates the
// full symmetric group and never touches the search engine, so it can
// certify it.
struct OracleConfig {
  int max_degree = 8;
  unsigned seed = 0;
};

// Reads REFINERY_ORACLE_CAP when set.
OracleConfig oracle_config_from_env();

// All of Sym(degree), lexicographic by image table; cached per degree.
const std::vector<Permutation>& sym_elements(int degree, const OracleConfig& cfg = {});

// Exact transporter set {g : x^g = y} as a coset (least representative).
GroupCoset brute_transporter(const Obj& x, const Obj& y, int degree,
                             const OracleConfig& cfg = {});
std::vector<Permutation> brute_transporter_elements(const Obj& x, const Obj& y,
                                                    int degree,
                                                    const OracleConfig& cfg = {});

std::vector<Permutation> brute_filter(const std::function<bool(const Permutation&)>& pred,
                                      int degree, const OracleConfig& cfg = {});

}  // namespace refinery
