#include "refinery/refiner.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "refinery/search.hpp"

namespace refinery {

struct TargetSet::Cache {
  std::once_flag once;
  std::vector<Permutation> elements;
  std::set<Permutation> lookup;
};

TargetSet TargetSet::empty_set(int degree) {
  TargetSet t;
  t.mode_ = Mode::empty;
  t.degree_ = degree;
  t.name_ = "empty";
  return t;
}

TargetSet TargetSet::subgroup(int degree, std::vector<Permutation> gens) {
  TargetSet t;
  t.mode_ = Mode::subgroup;
  t.degree_ = degree;
  t.name_ = "subgroup";
  t.gens_ = std::move(gens);
  t.cache_ = std::make_shared<Cache>();
  return t;
}

TargetSet TargetSet::coset(int degree, std::vector<Permutation> gens, Permutation rep) {
  TargetSet t;
  t.mode_ = Mode::coset;
  t.degree_ = degree;
  t.name_ = "coset";
  t.gens_ = std::move(gens);
  t.rep_ = std::move(rep);
  t.cache_ = std::make_shared<Cache>();
  return t;
}

TargetSet TargetSet::predicate(int degree, std::string name,
                               std::function<bool(const Permutation&)> member) {
  TargetSet t;
  t.mode_ = Mode::predicate;
  t.degree_ = degree;
  t.name_ = std::move(name);
  t.member_ = std::move(member);
  return t;
}

bool TargetSet::contains(const Permutation& g, std::size_t cap) const {
  switch (mode_) {
    case Mode::empty: return false;
    case Mode::predicate: return member_(g);
    case Mode::subgroup:
    case Mode::coset: {
      std::call_once(cache_->once, [&] {
        cache_->elements = GroupCoset{degree_, false, gens_, rep_}.elements(cap);
        cache_->lookup =
            std::set<Permutation>(cache_->elements.begin(), cache_->elements.end());
      });
      return cache_->lookup.count(g) != 0;
    }
  }
  return false;
}

std::vector<Permutation> TargetSet::elements(std::size_t cap) const {
  switch (mode_) {
    case Mode::empty: return {};
    case Mode::subgroup:
    case Mode::coset: return GroupCoset{degree_, false, gens_, rep_}.elements(cap);
    case Mode::predicate: {
      std::vector<Permutation> out;
      OracleConfig cfg = oracle_config_from_env();
      for (const auto& g : sym_elements(degree_, cfg))
        if (member_(g)) out.push_back(g);
      return out;
    }
  }
  return {};
}

StackFn identity_fn() {
  return {"id", [](const Stack& s) { return s; }};
}

StackFn empty_image_fn(ObjectKind kind) {
  return {"empty", [kind](const Stack&) { return make_stack(kind); }};
}

StackFn constant_fn(std::string name, Stack image) {
  return {std::move(name), [image = std::move(image)](const Stack&) { return image; }};
}

StackFn conjugate_fn(const StackFn& f, const Permutation& x) {
  Permutation xinv = inverse(x);
  return {f.name + "^" + to_cycle_string(x),
          [f, x, xinv](const Stack& s) { return act(x, f(act(xinv, s))); }};
}

StackFn concat_fn(const StackFn& f, const StackFn& g) {
  return {f.name + "||" + g.name,
          [f, g](const Stack& s) { return stack_concat(f(s), g(s)); }};
}

RefinerPair constant_refiner(Stack a, Stack b, TargetSet target, std::string name,
                             bool perfect) {
  if (!a.is_empty() && !b.is_empty() && a.kind != b.kind)
    throw Error("constant refiner stacks must share a kind");
  ObjectKind kind = a.is_empty() ? b.kind : a.kind;
  RefinerPair r;
  r.kind = kind;
  r.left = constant_fn(name + ".L", std::move(a));
  r.right = constant_fn(name + ".R", std::move(b));
  r.target = std::move(target);
  r.name = std::move(name);
  r.perfect = perfect;
  return r;
}

RefinerPair coset_refiner(const RefinerPair& group_refiner, const Permutation& x) {
  if (group_refiner.target.mode() != TargetSet::Mode::subgroup)
    throw Error("coset refiner needs a subgroup-target refiner");
  RefinerPair r;
  r.kind = group_refiner.kind;
  r.left = group_refiner.left;
  r.right = conjugate_fn(group_refiner.left, x);
  r.target = TargetSet::coset(group_refiner.target.degree(),
                              group_refiner.target.generators(), x);
  r.name = group_refiner.name + "*" + to_cycle_string(x);
  r.perfect = group_refiner.perfect;
  return r;
}

RefinerPair concat_refiners(const RefinerPair& r1, const RefinerPair& r2) {
  if (r1.kind != r2.kind) throw Error("cannot concatenate refiners of different kinds");
  if (r1.target.degree() != r2.target.degree())
    throw Error("cannot concatenate refiners over different domains");
  RefinerPair r;
  r.kind = r1.kind;
  r.left = concat_fn(r1.left, r2.left);
  r.right = concat_fn(r1.right, r2.right);
  TargetSet t1 = r1.target, t2 = r2.target;
  r.target = TargetSet::predicate(
      r1.target.degree(), t1.name() + "&" + t2.name(),
      [t1, t2](const Permutation& g) { return t1.contains(g) && t2.contains(g); });
  r.name = r1.name + "||" + r2.name;
  r.perfect = r1.perfect && r2.perfect;
  return r;
}

RefinerPair list_refiner(const std::vector<RefinerPair>& rs) {
  if (rs.empty()) throw Error("list refiner needs at least one component");
  RefinerPair out = rs.front();
  for (std::size_t i = 1; i < rs.size(); ++i) out = concat_refiners(out, rs[i]);
  return out;
}

// --- Sampling ----------------------------------------------------------------

ObjectSampler::ObjectSampler(ObjectKind kind, int degree, unsigned seed)
    : kind_(kind), degree_(degree), rng_(seed) {}

int ObjectSampler::next(int bound) {
  return bound <= 1 ? 0 : static_cast<int>(rng_() % static_cast<unsigned long long>(bound));
}

Permutation ObjectSampler::sample_perm() {
  std::vector<int> im(degree_);
  for (int i = 0; i < degree_; ++i) im[i] = i + 1;
  for (int i = degree_ - 1; i > 0; --i) std::swap(im[i], im[next(i + 1)]);
  return Permutation(std::move(im));
}

StackEntry ObjectSampler::sample_entry() {
  switch (kind_) {
    case ObjectKind::point:
      return 1 + next(degree_);
    case ObjectKind::ordered_partition: {
      int cells = 1 + next(degree_);
      std::vector<std::vector<int>> assign(cells);
      for (int v = 1; v <= degree_; ++v) assign[next(cells)].push_back(v);
      std::vector<std::vector<int>> nonempty;
      for (auto& c : assign)
        if (!c.empty()) nonempty.push_back(std::move(c));
      return make_partition(degree_, std::move(nonempty));
    }
    case ObjectKind::labelled_digraph: {
      static const std::vector<Label> vlabels{"x", "y"};
      static const std::vector<Label> alabels{"a", "b"};
      LabelledDigraph d;
      for (int v = 1; v <= degree_; ++v) {
        d.vertices.insert(v);
        d.vertex_labels[v] = vlabels[next(2)];
      }
      for (int u = 1; u <= degree_; ++u)
        for (int v = 1; v <= degree_; ++v)
          if (next(10) < 3) {
            Arc a{u, v};
            d.arcs.insert(a);
            d.arc_labels[a] = alabels[next(2)];
          }
      return d;
    }
    case ObjectKind::extended_graph: {
      static const std::vector<Label> inner{"w:white", "w:grey"};
      static const std::vector<Label> outer{"b:black", "b:blue"};
      static const std::vector<Label> alabels{"a", "b"};
      int extras = next(4);
      LabelledDigraph d;
      for (int v = 1; v <= degree_ + extras; ++v) {
        d.vertices.insert(v);
        d.vertex_labels[v] = v <= degree_ ? inner[next(2)] : outer[next(2)];
      }
      for (int u = 1; u <= degree_ + extras; ++u)
        for (int v = 1; v <= degree_ + extras; ++v)
          if (next(10) < 3) {
            Arc a{u, v};
            d.arcs.insert(a);
            d.arc_labels[a] = alabels[next(2)];
          }
      return make_extended(degree_, std::move(d));
    }
  }
  throw Error("unknown sample kind");
}

Stack ObjectSampler::sample_stack(int max_len) {
  int len = next(max_len + 1);
  Stack s = make_stack(kind_);
  for (int i = 0; i < len; ++i) s.entries.push_back(sample_entry());
  return s;
}

// --- Checkers ----------------------------------------------------------------

namespace {

bool entry_maps_to(const Permutation& g, const StackEntry& a, const StackEntry& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ea = std::get_if<ExtendedGraph>(&a)) {
    return extended_equal(act(g, *ea), std::get<ExtendedGraph>(b));
  }
  return act(g, a) == b;
}

}  // namespace

std::vector<Permutation> stack_transporter_elements(const Stack& S, const Stack& T,
                                                    int degree) {
  OracleConfig cfg = oracle_config_from_env();
  const auto& sym = sym_elements(degree, cfg);
  if (S.size() != T.size()) return {};
  std::vector<char> alive(sym.size(), 1);
  for (std::size_t i = 0; i < S.size(); ++i) {
    const auto& a = S.entries[i];
    const auto& b = T.entries[i];
    const auto* ea = std::get_if<ExtendedGraph>(&a);
    if (ea && ea->extra().size() > static_cast<std::size_t>(brute_extra_cap)) {
      // One engine call instead of one orbit-equality test per element.
      auto coset = solve_extended({*ea}, {std::get<ExtendedGraph>(b)}, degree).coset;
      std::vector<Permutation> elems =
          coset.empty ? std::vector<Permutation>{} : coset.elements(sym.size());
      std::set<Permutation> member(elems.begin(), elems.end());
      for (std::size_t k = 0; k < sym.size(); ++k)
        if (alive[k] && !member.count(sym[k])) alive[k] = 0;
    } else {
      for (std::size_t k = 0; k < sym.size(); ++k)
        if (alive[k] && !entry_maps_to(sym[k], a, b)) alive[k] = 0;
    }
  }
  std::vector<Permutation> out;
  for (std::size_t k = 0; k < sym.size(); ++k)
    if (alive[k]) out.push_back(sym[k]);
  return out;
}

std::string CheckReport::text() const {
  std::ostringstream out;
  for (const auto& l : lines) out << l << '\n';
  return out.str();
}

namespace {

CheckReport run_check(const RefinerPair& r, int samples, unsigned seed, bool perfect) {
  CheckReport report;
  ObjectSampler sampler(r.kind, r.target.degree(), seed);
  const int degree = r.target.degree();
  std::vector<Permutation> target_elems = r.target.elements();
  std::sort(target_elems.begin(), target_elems.end());

  for (int k = 0; k < samples; ++k) {
    // Sample 0 is the empty pair, the decisive case for constant refiners.
    // Odd samples pair a stack with a translate of itself so the check is
    // not vacuous; even samples pair independent stacks of equal length.
    Stack s, t;
    if (k == 0) {
      s = make_stack(r.kind);
      t = make_stack(r.kind);
    } else if (k % 2 == 1) {
      s = sampler.sample_stack();
      t = act(sampler.sample_perm(), s);
    } else {
      s = sampler.sample_stack();
      t = sampler.sample_stack();
      while (t.size() != s.size()) t = sampler.sample_stack();
    }

    std::vector<Permutation> lhs;  // target intersected with Iso(S, T)
    for (const auto& g : target_elems)
      if (stack_equal(act(g, s), t)) lhs.push_back(g);

    std::vector<Permutation> rhs;
    if (perfect) {
      rhs = stack_transporter_elements(stack_concat(s, r.left(s)),
                                       stack_concat(t, r.right(t)), degree);
    } else {
      rhs = stack_transporter_elements(r.left(s), r.right(t), degree);
    }
    std::sort(rhs.begin(), rhs.end());

    std::vector<Permutation> missing;  // in lhs but not rhs: breaks (*)
    for (const auto& g : lhs)
      if (!std::binary_search(rhs.begin(), rhs.end(), g)) missing.push_back(g);
    std::vector<Permutation> surplus;  // in rhs but not lhs: breaks equality
    if (perfect) {
      std::sort(lhs.begin(), lhs.end());
      for (const auto& g : rhs)
        if (!std::binary_search(lhs.begin(), lhs.end(), g)) surplus.push_back(g);
    }

    if (missing.empty() && surplus.empty()) {
      report.lines.push_back("PASS");
    } else {
      report.ok = false;
      std::ostringstream line;
      line << "FAIL sample=" << k << " |lhs|=" << lhs.size() << " |rhs|=" << rhs.size();
      report.lines.push_back(line.str());
      const Permutation& witness = missing.empty() ? surplus.front() : missing.front();
      report.lines.push_back("witness=" + to_cycle_string(witness));
    }
  }
  return report;
}

}  // namespace

CheckReport check_sound(const RefinerPair& r, int samples, unsigned seed) {
  return run_check(r, samples, seed, false);
}

CheckReport check_perfect(const RefinerPair& r, int samples, unsigned seed) {
  return run_check(r, samples, seed, true);
}

}  // namespace refinery
