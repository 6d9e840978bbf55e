#include "refinery/objects.hpp"
#include "refinery/search.hpp"

namespace refinery {

namespace {

// Pins every domain vertex to itself, so a transporter between stacks that
// include this entry fixes the domain pointwise and only the extra vertices
// may move.
LabelledDigraph domain_pin(int omega, int total) {
  LabelledDigraph d;
  for (int v = 1; v <= total; ++v) {
    d.vertices.insert(v);
    d.vertex_labels[v] = v <= omega ? "pin:" + std::to_string(v) : "pin:extra";
  }
  return d;
}

}  // namespace

bool extended_equal(const ExtendedGraph& a, const ExtendedGraph& b) {
  if (a.omega != b.omega) throw Error("extended graphs over different domains");
  auto ea = a.extra();
  if (ea.size() != b.extra().size()) return false;
  if (ea.size() <= static_cast<std::size_t>(brute_extra_cap))
    return extended_equal_brute(a, b);
  const int total = a.omega + static_cast<int>(ea.size());
  LabelledDigraph pin = domain_pin(a.omega, total);
  return transporter_exists({a.representative, pin}, {b.representative, pin}, total);
}

}  // namespace refinery
