#include "refinery/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

namespace refinery {

OracleConfig oracle_config_from_env() {
  OracleConfig cfg;
  if (const char* v = std::getenv("REFINERY_ORACLE_CAP")) {
    int d = std::atoi(v);
    if (d >= 1) cfg.max_degree = d;
  }
  return cfg;
}

const std::vector<Permutation>& sym_elements(int degree, const OracleConfig& cfg) {
  if (degree < 1) throw Error("oracle degree must be positive");
  if (degree > cfg.max_degree) throw Error("degree exceeds the oracle cap");
  static std::map<int, std::vector<Permutation>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i + 1;
  std::vector<Permutation> all;
  do {
    all.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return cache.emplace(degree, std::move(all)).first->second;
}

std::vector<Permutation> brute_transporter_elements(const Obj& x, const Obj& y,
                                                    int degree,
                                                    const OracleConfig& cfg) {
  std::vector<Permutation> out;
  for (const auto& g : sym_elements(degree, cfg))
    if (obj_equal_brute(act(g, x), y)) out.push_back(g);
  return out;
}

GroupCoset brute_transporter(const Obj& x, const Obj& y, int degree,
                             const OracleConfig& cfg) {
  return coset_from_elements(degree, brute_transporter_elements(x, y, degree, cfg));
}

std::vector<Permutation> brute_filter(const std::function<bool(const Permutation&)>& pred,
                                      int degree, const OracleConfig& cfg) {
  std::vector<Permutation> out;
  for (const auto& g : sym_elements(degree, cfg))
    if (pred(g)) out.push_back(g);
  return out;
}

}  // namespace refinery
