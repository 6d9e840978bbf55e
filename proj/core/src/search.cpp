#include "refinery/search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "refinery/encoders.hpp"

namespace refinery {

namespace {

const Label pad_label = "b:pad";

struct Interner {
  std::map<Label, int> ids;

  int intern(const Label& l) {
    auto [it, inserted] = ids.emplace(l, static_cast<int>(ids.size()));
    return it->second;
  }
};

// Dense per-entry adjacency over vertices 1..n (stored 0-based). Loops and
// symmetric arc pairs are kept apart from the plain in/out lists so that the
// refinement signatures can count them as their own features.
struct Flat {
  int n = 0;
  int entry_count = 0;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> out, in;  // (to, label)
  std::vector<std::vector<std::vector<int>>> loops;                    // label ids
  std::vector<std::vector<std::vector<std::array<int, 3>>>> sym;  // (to, out lab, in lab)
  std::vector<std::vector<int>> vlab;
  std::vector<std::map<Arc, int>> arcmap;  // 1-based arcs -> label id
};

Flat build_flat(const std::vector<LabelledDigraph>& stack, int n, Interner& interner) {
  Flat f;
  f.n = n;
  f.entry_count = static_cast<int>(stack.size());
  f.out.assign(f.entry_count, {});
  f.in.assign(f.entry_count, {});
  f.loops.assign(f.entry_count, {});
  f.sym.assign(f.entry_count, {});
  f.vlab.assign(f.entry_count, {});
  f.arcmap.resize(f.entry_count);
  for (int e = 0; e < f.entry_count; ++e) {
    const auto& d = stack[e];
    if (static_cast<int>(d.vertices.size()) != n ||
        (n > 0 && (*d.vertices.begin() != 1 || *d.vertices.rbegin() != n)))
      throw Error("solver stacks need the dense vertex set 1..n");
    f.out[e].assign(n, {});
    f.in[e].assign(n, {});
    f.loops[e].assign(n, {});
    f.sym[e].assign(n, {});
    f.vlab[e].assign(n, 0);
    for (const auto& [v, l] : d.vertex_labels) f.vlab[e][v - 1] = interner.intern(l);
    for (const auto& [a, l] : d.arc_labels) {
      int lab = interner.intern(l);
      f.arcmap[e][a] = lab;
      if (a.first == a.second) {
        f.loops[e][a.first - 1].push_back(lab);
        continue;
      }
      f.out[e][a.first - 1].emplace_back(a.second - 1, lab);
      f.in[e][a.second - 1].emplace_back(a.first - 1, lab);
      auto rev = d.arc_labels.find(Arc{a.second, a.first});
      if (rev != d.arc_labels.end())
        f.sym[e][a.first - 1].push_back(
            {a.second - 1, lab, interner.intern(rev->second)});
    }
  }
  return f;
}

using Sig = std::vector<long long>;

struct Colours {
  std::vector<int> left, right;
  int count = 0;
  bool dead = false;
};

struct Engine {
  const Flat& lflat;
  const Flat& rflat;
  bool stop_first = false;
  const std::function<bool(const Permutation&)>* accept = nullptr;
  long nodes = 0;
  std::vector<Permutation> found;
  bool stopped = false;

  Colours seed(const OrderedPartition* pl, const OrderedPartition* pr) const {
    const int n = lflat.n;
    Colours c;
    c.left.assign(n, 0);
    c.right.assign(n, 0);
    std::vector<int> cell_l(n, 0), cell_r(n, 0);
    if (pl && pr) {
      for (std::size_t i = 0; i < pl->cells.size(); ++i)
        for (int v : pl->cells[i]) cell_l[v - 1] = static_cast<int>(i);
      for (std::size_t i = 0; i < pr->cells.size(); ++i)
        for (int v : pr->cells[i]) cell_r[v - 1] = static_cast<int>(i);
    }
    std::map<Sig, int> rank;
    auto signature = [&](const Flat& f, const std::vector<int>& cells, int v) {
      Sig s{cells[v]};
      for (int e = 0; e < f.entry_count; ++e) s.push_back(f.vlab[e][v]);
      return s;
    };
    for (int v = 0; v < n; ++v) rank[signature(lflat, cell_l, v)];
    for (int v = 0; v < n; ++v) rank[signature(rflat, cell_r, v)];
    int next = 0;
    for (auto& [sig, id] : rank) id = next++;
    for (int v = 0; v < n; ++v) c.left[v] = rank[signature(lflat, cell_l, v)];
    for (int v = 0; v < n; ++v) c.right[v] = rank[signature(rflat, cell_r, v)];
    c.count = next;
    check_counts(c);
    return c;
  }

  static void check_counts(Colours& c) {
    std::vector<int> cl(c.count, 0), cr(c.count, 0);
    for (int v : c.left) ++cl[v];
    for (int v : c.right) ++cr[v];
    if (cl != cr) c.dead = true;
  }

  Sig vertex_signature(const Flat& f, const std::vector<int>& col, int v) const {
    std::vector<std::array<long long, 5>> feats;
    for (int e = 0; e < f.entry_count; ++e) {
      for (const auto& [to, lab] : f.out[e][v]) feats.push_back({1, e, lab, col[to], 0});
      for (const auto& [from, lab] : f.in[e][v]) feats.push_back({2, e, lab, col[from], 0});
      for (int lab : f.loops[e][v]) feats.push_back({3, e, lab, 0, 0});
      for (const auto& [to, lo, li] : f.sym[e][v]) feats.push_back({4, e, lo, li, col[to]});
    }
    std::sort(feats.begin(), feats.end());
    Sig s{col[v]};
    for (const auto& ft : feats) s.insert(s.end(), ft.begin(), ft.end());
    return s;
  }

  void refine(Colours& c) const {
    const int n = lflat.n;
    while (!c.dead) {
      std::map<Sig, int> rank;
      std::vector<Sig> sl(n), sr(n);
      for (int v = 0; v < n; ++v) rank[sl[v] = vertex_signature(lflat, c.left, v)];
      for (int v = 0; v < n; ++v) rank[sr[v] = vertex_signature(rflat, c.right, v)];
      int next = 0;
      for (auto& [sig, id] : rank) id = next++;
      if (next == c.count) return;  // no split; fixpoint
      for (int v = 0; v < n; ++v) c.left[v] = rank[sl[v]];
      for (int v = 0; v < n; ++v) c.right[v] = rank[sr[v]];
      c.count = next;
      check_counts(c);
    }
  }

  void leaf(const Colours& c) {
    const int n = lflat.n;
    std::vector<int> right_of(c.count, -1);
    for (int v = 0; v < n; ++v) right_of[c.right[v]] = v;
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = right_of[c.left[v]] + 1;
    Permutation g{img};
    for (int e = 0; e < lflat.entry_count; ++e) {
      for (int v = 0; v < n; ++v)
        if (lflat.vlab[e][v] != rflat.vlab[e][img[v] - 1]) return;
      if (lflat.arcmap[e].size() != rflat.arcmap[e].size()) return;
      for (const auto& [a, lab] : lflat.arcmap[e]) {
        auto it = rflat.arcmap[e].find(Arc{img[a.first - 1], img[a.second - 1]});
        if (it == rflat.arcmap[e].end() || it->second != lab) return;
      }
    }
    if (accept && !(*accept)(g)) return;
    found.push_back(std::move(g));
    if (stop_first) stopped = true;
  }

  void rec(Colours c) {
    if (stopped) return;
    ++nodes;
    refine(c);
    if (c.dead) return;
    if (c.count == lflat.n) {
      leaf(c);
      return;
    }
    // Branch on the smallest non-singleton class of the left side.
    std::vector<int> size_of(c.count, 0);
    for (int v : c.left) ++size_of[v];
    int target = -1;
    for (int col = 0; col < c.count; ++col)
      if (size_of[col] >= 2 && (target < 0 || size_of[col] < size_of[target]))
        target = col;
    int v = -1;
    for (int u = 0; u < lflat.n; ++u)
      if (c.left[u] == target) {
        v = u;
        break;
      }
    for (int u = 0; u < lflat.n && !stopped; ++u) {
      if (c.right[u] != target) continue;
      Colours child = c;
      child.left[v] = child.count;
      child.right[u] = child.count;
      ++child.count;
      rec(std::move(child));
    }
  }
};

struct EngineOut {
  std::vector<Permutation> leaves;
  long nodes = 0;
};

EngineOut run_engine(const std::vector<LabelledDigraph>& S,
                     const std::vector<LabelledDigraph>& T, int n, bool stop_first,
                     const std::function<bool(const Permutation&)>* accept) {
  if (S.size() != T.size()) return {{}, 1};
  Interner interner;
  Flat lflat = build_flat(S, n, interner);
  Flat rflat = build_flat(T, n, interner);
  for (int e = 0; e < lflat.entry_count; ++e)
    if (lflat.arcmap[e].size() != rflat.arcmap[e].size()) return {{}, 1};
  Engine engine{lflat, rflat, stop_first, accept};
  engine.rec(engine.seed(nullptr, nullptr));
  return {std::move(engine.found), engine.nodes};
}

GroupCoset coset_from_leaves(int degree, std::vector<Permutation> leaves) {
  if (leaves.empty()) return GroupCoset::empty_set(degree);
  return coset_from_elements(degree, std::move(leaves));
}

// Per-entry-pair renaming of extended stacks onto one dense vertex set:
// each pair's extras move onto a block of fresh ids above the domain, blocks
// of distinct entries disjoint, and every entry is padded to the full
// vertex set with an inert extra label.
struct Aligned {
  std::vector<LabelledDigraph> left, right;
  int total = 0;
  bool empty = false;  // some entry pair has mismatched extra counts
};

LabelledDigraph shift_extras(const LabelledDigraph& d, int omega, int offset) {
  auto map_v = [&](int v) { return v <= omega ? v : v - omega + offset; };
  LabelledDigraph out;
  for (int v : d.vertices) out.vertices.insert(map_v(v));
  for (const auto& [v, l] : d.vertex_labels) out.vertex_labels[map_v(v)] = l;
  for (const auto& [a, l] : d.arc_labels) {
    Arc m{map_v(a.first), map_v(a.second)};
    out.arcs.insert(m);
    out.arc_labels[m] = l;
  }
  return out;
}

Aligned align_extended(const std::vector<ExtendedGraph>& S,
                       const std::vector<ExtendedGraph>& T, int omega) {
  Aligned a;
  int offset = omega;
  std::vector<int> offsets(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S[i].omega != omega || T[i].omega != omega)
      throw Error("extended stack entries over mixed domains");
    if (S[i].extra().size() != T[i].extra().size()) {
      a.empty = true;
      return a;
    }
    for (const auto* side : {&S[i], &T[i]})
      for (const auto& [v, l] : side->representative.vertex_labels)
        if (v <= omega && l == pad_label)
          throw Error("domain vertex uses the reserved pad label");
    offsets[i] = offset;
    offset += static_cast<int>(S[i].extra().size());
  }
  a.total = offset;
  for (std::size_t i = 0; i < S.size(); ++i) {
    LabelledDigraph l = shift_extras(S[i].representative, omega, offsets[i]);
    LabelledDigraph r = shift_extras(T[i].representative, omega, offsets[i]);
    for (int v = 1; v <= a.total; ++v) {
      for (auto* d : {&l, &r}) {
        if (!d->vertices.count(v)) {
          d->vertices.insert(v);
          d->vertex_labels[v] = pad_label;
        }
      }
    }
    a.left.push_back(std::move(l));
    a.right.push_back(std::move(r));
  }
  return a;
}

GroupCoset restrict_coset(const GroupCoset& c, int omega) {
  if (c.empty) return GroupCoset::empty_set(omega);
  std::vector<Permutation> gens;
  for (const auto& g : c.generators) {
    Permutation r = restrict_to(g, Domain{omega});
    if (!r.is_identity()) gens.push_back(std::move(r));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (!c.representative || c.representative->is_identity())
    return GroupCoset::subgroup(omega, std::move(gens));
  Permutation rep = restrict_to(*c.representative, Domain{omega});
  if (rep.is_identity()) return GroupCoset::subgroup(omega, std::move(gens));
  return GroupCoset::coset(omega, std::move(gens), std::move(rep));
}

}  // namespace

SearchState colour_refine(SearchState state) {
  if (state.left_stack.size() != state.right_stack.size())
    throw Error("refinement needs stacks of equal length");
  validate(state.left_cells);
  validate(state.right_cells);
  const int n = state.left_cells.degree;
  if (state.left_cells.cells.size() != state.right_cells.cells.size()) {
    state.dead = true;
    return state;
  }
  Interner interner;
  Flat lflat = build_flat(state.left_stack, n, interner);
  Flat rflat = build_flat(state.right_stack, n, interner);
  Engine engine{lflat, rflat};
  Colours c = engine.seed(&state.left_cells, &state.right_cells);
  engine.refine(c);
  ++state.refiner_applications;
  if (c.dead) {
    state.dead = true;
    return state;
  }
  auto to_partition = [&](const std::vector<int>& col) {
    std::vector<std::vector<int>> cells(c.count);
    for (int v = 0; v < n; ++v) cells[col[v]].push_back(v + 1);
    return make_partition(n, std::move(cells));
  };
  state.left_cells = to_partition(c.left);
  state.right_cells = to_partition(c.right);
  return state;
}

SolveResult solve(const std::vector<LabelledDigraph>& S,
                  const std::vector<LabelledDigraph>& T, int n) {
  EngineOut out = run_engine(S, T, n, false, nullptr);
  return {coset_from_leaves(n, std::move(out.leaves)), out.nodes};
}

bool transporter_exists(const std::vector<LabelledDigraph>& S,
                        const std::vector<LabelledDigraph>& T, int n) {
  return !run_engine(S, T, n, true, nullptr).leaves.empty();
}

SolveResult solve_extended(const std::vector<ExtendedGraph>& S,
                           const std::vector<ExtendedGraph>& T, int omega) {
  if (S.size() != T.size()) return {GroupCoset::empty_set(omega), 1};
  Aligned aligned = align_extended(S, T, omega);
  if (aligned.empty) return {GroupCoset::empty_set(omega), 1};
  SolveResult joint = solve(aligned.left, aligned.right, aligned.total);
  return {restrict_coset(joint.coset, omega), joint.tree_nodes};
}

SolveResult solve_stack(const Stack& S, const Stack& T, int degree) {
  if (!S.is_empty() && !T.is_empty() && S.kind != T.kind)
    throw Error("cannot solve stacks of different kinds");
  ObjectKind kind = S.is_empty() ? T.kind : S.kind;
  if (kind == ObjectKind::extended_graph)
    return solve_extended(extended_entries(S), extended_entries(T), degree);
  Stack s = embed_stack(S, ObjectKind::labelled_digraph, degree);
  Stack t = embed_stack(T, ObjectKind::labelled_digraph, degree);
  return solve(digraph_entries(s), digraph_entries(t), degree);
}

GroupCoset two_closure(const std::vector<Permutation>& gens, int n, long* tree_nodes) {
  std::vector<LabelledDigraph> orbitals = orbital_graphs(gens, n);
  SolveResult r = solve(orbitals, orbitals, n);
  if (tree_nodes) *tree_nodes = r.tree_nodes;
  return r.coset;
}

bool is_two_closed(const std::vector<Permutation>& gens, int n, std::size_t cap) {
  std::size_t group_order = enumerate_group(n, gens, cap).size();
  GroupCoset closure = two_closure(gens, n);
  return closure.order(cap) == group_order;
}

SolveResult normaliser_overgroup(const std::vector<Permutation>& gens, int n) {
  ExtendedGraph enc = encode_set_of_digraphs(orbital_graphs(gens, n), n);
  return solve_extended({enc}, {enc}, n);
}

ExactResult exact_normaliser(const std::vector<Permutation>& gens, int n,
                             std::size_t cap) {
  SolveResult over = normaliser_overgroup(gens, n);
  std::vector<Permutation> candidates;
  try {
    candidates = over.coset.elements(cap);
  } catch (const Error&) {
    return {over.coset, false, over.tree_nodes};
  }
  auto g_elems = enumerate_group(n, gens, cap);
  std::set<Permutation> g_set(g_elems.begin(), g_elems.end());
  std::vector<Permutation> keep;
  for (const auto& x : candidates) {
    bool ok = true;
    for (const auto& h : gens)
      if (!g_set.count(act(x, h))) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(x);
  }
  return {coset_from_leaves(n, std::move(keep)), true, over.tree_nodes};
}

ExactResult conjugacy_transporter(const std::vector<Permutation>& gens_g,
                                  const std::vector<Permutation>& gens_h, int n,
                                  std::size_t cap) {
  ExtendedGraph enc_g = encode_set_of_digraphs(orbital_graphs(gens_g, n), n);
  ExtendedGraph enc_h = encode_set_of_digraphs(orbital_graphs(gens_h, n), n);
  SolveResult over = solve_extended({enc_g}, {enc_h}, n);
  if (over.coset.empty) return {over.coset, true, over.tree_nodes};
  std::vector<Permutation> candidates;
  std::vector<Permutation> g_elems, h_elems;
  try {
    candidates = over.coset.elements(cap);
    g_elems = enumerate_group(n, gens_g, cap);
    h_elems = enumerate_group(n, gens_h, cap);
  } catch (const Error&) {
    return {over.coset, false, over.tree_nodes};
  }
  if (g_elems.size() != h_elems.size())
    return {GroupCoset::empty_set(n), true, over.tree_nodes};
  std::set<Permutation> h_set(h_elems.begin(), h_elems.end());
  std::vector<Permutation> keep;
  for (const auto& x : candidates) {
    bool ok = true;
    for (const auto& g : gens_g)
      if (!h_set.count(act(x, g))) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(x);
  }
  return {coset_from_leaves(n, std::move(keep)), true, over.tree_nodes};
}

IntersectionResult intersection_search(const std::vector<RefinerPair>& refiners,
                                       int degree, bool apply_refiners) {
  if (refiners.empty()) throw Error("intersection search needs at least one refiner");
  auto rank = [](ObjectKind k) {
    switch (k) {
      case ObjectKind::point: return 0;
      case ObjectKind::ordered_partition: return 1;
      case ObjectKind::labelled_digraph: return 2;
      case ObjectKind::extended_graph: return 3;
    }
    return 3;
  };
  ObjectKind kind = ObjectKind::point;
  for (const auto& r : refiners)
    if (rank(r.kind) > rank(kind)) kind = r.kind;

  Stack left = make_stack(kind);
  Stack right = make_stack(kind);
  bool all_perfect = true;
  if (apply_refiners) {
    for (const auto& r : refiners) {
      Stack empty_own = make_stack(r.kind);
      left = stack_concat(left, embed_stack(r.left(empty_own), kind, degree));
      right = stack_concat(right, embed_stack(r.right(empty_own), kind, degree));
      all_perfect = all_perfect && r.perfect;
    }
    if (all_perfect) {
      // Every target is represented exactly, so the stacks already denote
      // the intersection; read the coset off without splitting.
      SolveResult extraction = solve_stack(left, right, degree);
      return {extraction.coset, 1, left, right, true};
    }
  }

  auto in_all_targets = [&](const Permutation& g) {
    for (const auto& r : refiners)
      if (!r.target.contains(g)) return false;
    return true;
  };

  EngineOut out;
  if (kind == ObjectKind::extended_graph) {
    Aligned aligned = align_extended(extended_entries(left), extended_entries(right), degree);
    if (aligned.empty)
      return {GroupCoset::empty_set(degree), 1, left, right, false};
    std::function<bool(const Permutation&)> accept = [&](const Permutation& g) {
      return in_all_targets(restrict_to(g, Domain{degree}));
    };
    out = run_engine(aligned.left, aligned.right, aligned.total, false, &accept);
    std::vector<Permutation> restricted;
    for (const auto& g : out.leaves) restricted.push_back(restrict_to(g, Domain{degree}));
    std::sort(restricted.begin(), restricted.end());
    restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
    return {coset_from_leaves(degree, std::move(restricted)), out.nodes, left, right, false};
  }
  Stack s = embed_stack(left, ObjectKind::labelled_digraph, degree);
  Stack t = embed_stack(right, ObjectKind::labelled_digraph, degree);
  std::function<bool(const Permutation&)> accept = in_all_targets;
  out = run_engine(digraph_entries(s), digraph_entries(t), degree, false, &accept);
  return {coset_from_leaves(degree, std::move(out.leaves)), out.nodes, left, right, false};
}

}  // namespace refinery
