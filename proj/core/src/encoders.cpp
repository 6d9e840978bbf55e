#include "refinery/encoders.hpp"

#include <algorithm>
#include <sstream>

namespace refinery {

namespace {

void check_points(const std::vector<int>& pts, int n, const char* what) {
  for (int p : pts)
    if (p < 1 || p > n) throw Error(std::string(what) + ": point out of range");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Deterministic member order wherever the construction says "indexed
// arbitrarily": ascending by (size, contents).
std::vector<std::vector<int>> canonical_family(std::vector<std::vector<int>> family) {
  for (auto& m : family) m = sorted_unique(m);
  std::sort(family.begin(), family.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

}  // namespace

Stack encode_subset(const std::vector<int>& a, int n) {
  std::vector<int> set = sorted_unique(a);
  check_points(set, n, "subset");
  if (set.empty()) return make_stack(ObjectKind::ordered_partition);
  if (static_cast<int>(set.size()) == n)
    return stack_of({make_partition(n, {set})});
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(set.begin(), set.end(), v)) rest.push_back(v);
  return stack_of({make_partition(n, {set, rest})});
}

std::vector<std::vector<int>> encode_distinct_sizes(
    const std::vector<std::vector<int>>& family) {
  auto members = canonical_family(family);
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i - 1].size() == members[i].size())
      throw Error("set family has two members of equal size");
  return members;
}

Graph make_graph(int n, const std::set<Arc>& edges) {
  Graph g;
  g.n = n;
  for (auto [a, b] : edges) {
    if (a == b) throw Error("graph edge endpoints must differ");
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n) throw Error("graph edge out of range");
    g.edges.insert({a, b});
  }
  return g;
}

Digraph make_digraph_plain(int n, const std::set<Arc>& arcs) {
  Digraph g;
  g.n = n;
  for (const auto& a : arcs) {
    if (a.first < 1 || a.first > n || a.second < 1 || a.second > n)
      throw Error("digraph arc out of range");
    g.arcs.insert(a);
  }
  return g;
}

LabelledDigraph graph_to_labelled(const Graph& g) {
  std::set<Arc> arcs;
  for (const auto& [a, b] : g.edges) {
    arcs.insert({a, b});
    arcs.insert({b, a});
  }
  return uniform_digraph(g.n, arcs, uniform_label);
}

LabelledDigraph graph_to_labelled(const Digraph& g) {
  return uniform_digraph(g.n, g.arcs, uniform_label);
}

bool family_is_disjoint(const std::vector<std::vector<int>>& family) {
  std::set<int> seen;
  for (const auto& m : family) {
    if (m.empty()) return false;
    for (int v : sorted_unique(m))
      if (!seen.insert(v).second) return false;
  }
  return true;
}

LabelledDigraph encode_disjoint_sets(const std::vector<std::vector<int>>& family, int n) {
  std::set<Arc> arcs;
  for (const auto& raw : family) {
    auto member = sorted_unique(raw);
    check_points(member, n, "set family");
    for (int a : member)
      for (int b : member) arcs.insert({a, b});
  }
  return uniform_digraph(n, arcs, uniform_label);
}

LabelledDigraph encode_perm_conj(const Permutation& g) {
  std::set<Arc> arcs;
  for (int a = 1; a <= g.degree(); ++a) arcs.insert({a, g.image(a)});
  return uniform_digraph(g.degree(), arcs, uniform_label);
}

ExtendedGraph encode_set_of_sets(const std::vector<std::vector<int>>& family, int n) {
  auto members = canonical_family(family);
  for (const auto& m : members) check_points(m, n, "set of sets");
  LabelledDigraph rep;
  for (int v = 1; v <= n; ++v) {
    rep.vertices.insert(v);
    rep.vertex_labels[v] = white_label;
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    int beta = n + 1 + static_cast<int>(i);
    rep.vertices.insert(beta);
    rep.vertex_labels[beta] = black_label;
    for (int alpha : members[i]) {
      Arc a{alpha, beta};
      rep.arcs.insert(a);
      rep.arc_labels[a] = black_label;
    }
  }
  return make_extended(n, std::move(rep));
}

ExtendedGraph encode_set_of_lists(const std::vector<std::vector<int>>& lists, int n) {
  std::vector<std::vector<int>> members = lists;
  std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  bool has_empty = !members.empty() && members.front().empty();
  if (has_empty) members.erase(members.begin());

  LabelledDigraph rep;
  for (int v = 1; v <= n; ++v) {
    rep.vertices.insert(v);
    rep.vertex_labels[v] = white_label;
  }
  int next_vertex = n;
  auto add_black = [&](int v) {
    rep.vertices.insert(v);
    rep.vertex_labels[v] = black_label;
  };
  auto add_arc = [&](int from, int to) {
    Arc a{from, to};
    rep.arcs.insert(a);
    rep.arc_labels[a] = black_label;
  };
  for (const auto& list : members) {
    check_points(list, n, "set of lists");
    int first = next_vertex + 1;
    for (std::size_t j = 0; j < list.size(); ++j) {
      int pos = ++next_vertex;
      add_black(pos);
      add_arc(pos, list[j]);
      if (j + 1 < list.size()) add_arc(pos, pos + 1);
    }
    (void)first;
  }
  if (has_empty) add_black(++next_vertex);
  return make_extended(n, std::move(rep));
}

ExtendedGraph encode_set_of_digraphs(const std::vector<LabelledDigraph>& input, int n) {
  std::vector<LabelledDigraph> members = input;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const int k = static_cast<int>(members.size());
  for (const auto& m : members) {
    validate(m);
    if (static_cast<int>(m.vertices.size()) != n || *m.vertices.begin() != 1 ||
        *m.vertices.rbegin() != n)
      throw Error("set-of-digraphs members must live on the whole domain");
    for (const auto& [v, l] : m.vertex_labels)
      if (l == hash_label || l == anchor_label)
        throw Error("member digraph uses a reserved label");
    for (const auto& [a, l] : m.arc_labels)
      if (l == hash_label || l == anchor_label)
        throw Error("member digraph uses a reserved label");
  }

  LabelledDigraph rep;
  for (int v = 1; v <= n; ++v) {
    rep.vertices.insert(v);
    rep.vertex_labels[v] = hash_label;
  }
  auto copy_vertex = [&](int i, int alpha) { return n + i * n + alpha; };  // i 0-based
  const int anchor_base = n + k * n;
  auto put_arc = [&](int from, int to, const Label& l) {
    Arc a{from, to};
    rep.arcs.insert(a);
    rep.arc_labels[a] = l;
  };
  for (int i = 0; i < k; ++i) {
    int anchor = anchor_base + i + 1;
    rep.vertices.insert(anchor);
    rep.vertex_labels[anchor] = anchor_label;
    for (int alpha = 1; alpha <= n; ++alpha) {
      int copy = copy_vertex(i, alpha);
      rep.vertices.insert(copy);
      rep.vertex_labels[copy] = members[i].vertex_labels.at(alpha);
      put_arc(copy, alpha, hash_label);
      put_arc(copy, anchor, anchor_label);
    }
    for (const auto& [a, l] : members[i].arc_labels)
      put_arc(copy_vertex(i, a.first), copy_vertex(i, a.second), l);
  }
  return make_extended(n, std::move(rep));
}

LabelledDigraph flatten_stack(const std::vector<LabelledDigraph>& stack, int n) {
  // Position-tagged label lists; length prefixes keep the encoding injective
  // whatever the source labels contain.
  auto item = [](std::size_t pos, const Label& l) {
    std::ostringstream out;
    out << pos << ',' << l.size() << ':' << l;
    return out.str();
  };
  LabelledDigraph out;
  std::map<int, std::vector<std::string>> vparts;
  std::map<Arc, std::vector<std::string>> aparts;
  for (int v = 1; v <= n; ++v) {
    out.vertices.insert(v);
    vparts[v] = {};
  }
  for (std::size_t e = 0; e < stack.size(); ++e) {
    const auto& d = stack[e];
    if (static_cast<int>(d.vertices.size()) != n ||
        (n > 0 && (*d.vertices.begin() != 1 || *d.vertices.rbegin() != n)))
      throw Error("stack entries must live on the whole domain");
    for (const auto& [v, l] : d.vertex_labels) vparts[v].push_back(item(e + 1, l));
    for (const auto& [a, l] : d.arc_labels) aparts[a].push_back(item(e + 1, l));
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string s = "z[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ';';
      s += parts[i];
    }
    return s + "]";
  };
  for (const auto& [v, parts] : vparts) out.vertex_labels[v] = join(parts);
  for (const auto& [a, parts] : aparts) {
    out.arcs.insert(a);
    out.arc_labels[a] = join(parts);
  }
  validate(out);
  return out;
}

ExtendedGraph encode_set_of_stacks(const std::vector<std::vector<LabelledDigraph>>& stacks,
                                   int n) {
  std::vector<LabelledDigraph> flattened;
  for (const auto& s : stacks) flattened.push_back(flatten_stack(s, n));
  return encode_set_of_digraphs(flattened, n);
}

std::vector<LabelledDigraph> orbital_graphs(const std::vector<Permutation>& gens, int n) {
  for (const auto& g : gens)
    if (g.degree() != n) throw Error("generator degree mismatch");
  std::set<Arc> seen;
  std::vector<LabelledDigraph> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      Arc base{a, b};
      if (seen.count(base)) continue;
      std::set<Arc> orbit{base};
      std::vector<Arc> frontier{base};
      while (!frontier.empty()) {
        Arc cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
          Arc img{g.image(cur.first), g.image(cur.second)};
          if (orbit.insert(img).second) frontier.push_back(img);
        }
      }
      seen.insert(orbit.begin(), orbit.end());
      out.push_back(uniform_digraph(n, orbit, uniform_label));
    }
  }
  return out;
}

std::vector<std::vector<int>> group_as_set_of_lists(const std::vector<Permutation>& gens,
                                                    int n, std::size_t cap) {
  std::vector<std::vector<int>> orbit;
  for (const auto& g : enumerate_group(n, gens, cap)) {
    std::vector<int> list(n);
    for (int i = 1; i <= n; ++i) list[i - 1] = g.image(i);
    orbit.push_back(std::move(list));
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

LabelledDigraph point_to_digraph(int alpha, int n) {
  if (alpha < 1 || alpha > n) throw Error("point out of range");
  LabelledDigraph d;
  for (int v = 1; v <= n; ++v) {
    d.vertices.insert(v);
    d.vertex_labels[v] = v == alpha ? "p:1" : "p:0";
  }
  return d;
}

LabelledDigraph partition_to_digraph(const OrderedPartition& p) {
  LabelledDigraph d;
  for (std::size_t i = 0; i < p.cells.size(); ++i)
    for (int v : p.cells[i]) {
      d.vertices.insert(v);
      d.vertex_labels[v] = "c:" + std::to_string(i + 1);
    }
  return d;
}

ExtendedGraph digraph_to_extended(const LabelledDigraph& d, int n) {
  // A digraph on the domain is an extended graph with no extra vertices,
  // except that its labels must stay off the extra namespace; prefix them.
  LabelledDigraph rep;
  rep.vertices = d.vertices;
  rep.arcs = d.arcs;
  for (const auto& [v, l] : d.vertex_labels) rep.vertex_labels[v] = "w:" + l;
  for (const auto& [a, l] : d.arc_labels) rep.arc_labels[a] = l;
  return make_extended(n, std::move(rep));
}

Stack embed_stack(const Stack& s, ObjectKind target, int degree) {
  if (s.kind == target && !s.is_empty()) return s;
  Stack out = make_stack(target);
  for (const auto& e : s.entries) {
    LabelledDigraph d;
    switch (kind_of(e)) {
      case ObjectKind::point: d = point_to_digraph(std::get<int>(e), degree); break;
      case ObjectKind::ordered_partition:
        d = partition_to_digraph(std::get<OrderedPartition>(e));
        break;
      case ObjectKind::labelled_digraph: d = std::get<LabelledDigraph>(e); break;
      case ObjectKind::extended_graph:
        if (target != ObjectKind::extended_graph)
          throw Error("extended graphs only embed into extended stacks");
        out.entries.push_back(e);
        continue;
    }
    if (target == ObjectKind::labelled_digraph) {
      out.entries.push_back(std::move(d));
    } else if (target == ObjectKind::extended_graph) {
      out.entries.push_back(digraph_to_extended(d, degree));
    } else {
      throw Error("stacks only embed upwards");
    }
  }
  return out;
}

// --- Refiner factory ---------------------------------------------------------

Query stabiliser_query(Query::Kind kind, int degree, Obj x) {
  Query q;
  q.verb = Query::Verb::stabiliser;
  q.kind = kind;
  q.degree = degree;
  q.to = x;
  q.from = std::move(x);
  return q;
}

Query transporter_query(Query::Kind kind, int degree, Obj x, Obj y) {
  Query q;
  q.verb = Query::Verb::transporter;
  q.kind = kind;
  q.degree = degree;
  q.from = std::move(x);
  q.to = std::move(y);
  return q;
}

Query::Kind parse_query_kind(std::string_view name) {
  if (name == "point") return Query::Kind::point;
  if (name == "list") return Query::Kind::point_list;
  if (name == "set") return Query::Kind::subset;
  if (name == "ordered-partition") return Query::Kind::ordered_partition;
  if (name == "distinct-size-sets") return Query::Kind::distinct_size_family;
  if (name == "partition") return Query::Kind::unordered_partition;
  if (name == "disjoint-sets") return Query::Kind::disjoint_family;
  if (name == "graph") return Query::Kind::graph;
  if (name == "digraph") return Query::Kind::digraph;
  if (name == "labelled-digraph") return Query::Kind::labelled_digraph;
  if (name == "perm-conj") return Query::Kind::perm_conj;
  if (name == "perm-list-conj") return Query::Kind::perm_list_conj;
  if (name == "set-of-sets") return Query::Kind::set_of_sets;
  if (name == "set-of-lists") return Query::Kind::set_of_lists;
  if (name == "set-of-digraphs") return Query::Kind::set_of_digraphs;
  if (name == "set-of-stacks") return Query::Kind::set_of_stacks;
  if (name == "group") return Query::Kind::group;
  throw Error("unknown query kind '" + std::string(name) + "'");
}

std::string to_string(Query::Kind kind) {
  switch (kind) {
    case Query::Kind::point: return "point";
    case Query::Kind::point_list: return "list";
    case Query::Kind::subset: return "set";
    case Query::Kind::ordered_partition: return "ordered-partition";
    case Query::Kind::distinct_size_family: return "distinct-size-sets";
    case Query::Kind::unordered_partition: return "partition";
    case Query::Kind::disjoint_family: return "disjoint-sets";
    case Query::Kind::graph: return "graph";
    case Query::Kind::digraph: return "digraph";
    case Query::Kind::labelled_digraph: return "labelled-digraph";
    case Query::Kind::perm_conj: return "perm-conj";
    case Query::Kind::perm_list_conj: return "perm-list-conj";
    case Query::Kind::set_of_sets: return "set-of-sets";
    case Query::Kind::set_of_lists: return "set-of-lists";
    case Query::Kind::set_of_digraphs: return "set-of-digraphs";
    case Query::Kind::set_of_stacks: return "set-of-stacks";
    case Query::Kind::group: return "group";
  }
  throw Error("unknown query kind");
}

namespace {

std::vector<int> obj_to_points(const Obj& o, const char* what) {
  const auto* s = std::get_if<ObjSet>(&o.value);
  const auto* l = std::get_if<ObjList>(&o.value);
  const std::vector<Obj>* elems = s ? &s->elems : l;
  if (!elems) throw Error(std::string(what) + ": expected a point collection");
  std::vector<int> out;
  for (const auto& e : *elems) {
    const auto* p = std::get_if<int>(&e.value);
    if (!p) throw Error(std::string(what) + ": expected points");
    out.push_back(*p);
  }
  return out;
}

std::vector<std::vector<int>> obj_to_family(const Obj& o, const char* what) {
  const auto* s = std::get_if<ObjSet>(&o.value);
  if (!s) throw Error(std::string(what) + ": expected a set of point sets");
  std::vector<std::vector<int>> out;
  for (const auto& e : s->elems) out.push_back(obj_to_points(e, what));
  return out;
}

std::vector<std::vector<int>> obj_to_lists(const Obj& o, const char* what) {
  const auto* s = std::get_if<ObjSet>(&o.value);
  if (!s) throw Error(std::string(what) + ": expected a set of lists");
  std::vector<std::vector<int>> out;
  for (const auto& e : s->elems) {
    const auto* l = std::get_if<ObjList>(&e.value);
    if (!l) throw Error(std::string(what) + ": expected lists");
    std::vector<int> list;
    for (const auto& p : *l) {
      const auto* v = std::get_if<int>(&p.value);
      if (!v) throw Error(std::string(what) + ": expected points inside lists");
      list.push_back(*v);
    }
    out.push_back(std::move(list));
  }
  return out;
}

std::vector<LabelledDigraph> obj_to_digraphs(const Obj& o, const char* what) {
  if (const auto* d = std::get_if<LabelledDigraph>(&o.value)) return {*d};
  const auto* s = std::get_if<ObjSet>(&o.value);
  if (!s) throw Error(std::string(what) + ": expected digraphs");
  std::vector<LabelledDigraph> out;
  for (const auto& e : s->elems) {
    const auto* d = std::get_if<LabelledDigraph>(&e.value);
    if (!d) throw Error(std::string(what) + ": expected digraphs");
    out.push_back(*d);
  }
  return out;
}

std::vector<std::vector<LabelledDigraph>> obj_to_stacks(const Obj& o, const char* what) {
  const auto* s = std::get_if<ObjSet>(&o.value);
  if (!s) throw Error(std::string(what) + ": expected a set of digraph stacks");
  std::vector<std::vector<LabelledDigraph>> out;
  for (const auto& e : s->elems) {
    const auto* l = std::get_if<ObjList>(&e.value);
    if (!l) throw Error(std::string(what) + ": expected digraph stacks");
    std::vector<LabelledDigraph> stack;
    for (const auto& d : *l) {
      const auto* g = std::get_if<LabelledDigraph>(&d.value);
      if (!g) throw Error(std::string(what) + ": expected digraphs inside stacks");
      stack.push_back(*g);
    }
    out.push_back(std::move(stack));
  }
  return out;
}

std::vector<Permutation> obj_to_perms(const Obj& o, const char* what) {
  if (const auto* p = std::get_if<Permutation>(&o.value)) return {*p};
  const auto* s = std::get_if<ObjSet>(&o.value);
  const auto* l = std::get_if<ObjList>(&o.value);
  const std::vector<Obj>* elems = s ? &s->elems : l;
  if (!elems) throw Error(std::string(what) + ": expected permutations");
  std::vector<Permutation> out;
  for (const auto& e : *elems) {
    const auto* p = std::get_if<Permutation>(&e.value);
    if (!p) throw Error(std::string(what) + ": expected permutations");
    out.push_back(*p);
  }
  return out;
}

// Encodes one payload; `perfect` reports whether the encoding is injective
// on this payload's domain.
Stack encode_payload(Query::Kind kind, const Obj& payload, int degree, bool& perfect) {
  perfect = true;
  switch (kind) {
    case Query::Kind::point: {
      const auto* p = std::get_if<int>(&payload.value);
      if (!p) throw Error("point query expects a point");
      if (*p < 1 || *p > degree) throw Error("point out of range");
      return stack_of_points({*p});
    }
    case Query::Kind::point_list: {
      std::vector<int> pts = obj_to_points(payload, "list query");
      check_points(pts, degree, "list query");
      return stack_of_points(std::move(pts));
    }
    case Query::Kind::subset:
      return encode_subset(obj_to_points(payload, "set query"), degree);
    case Query::Kind::ordered_partition: {
      const auto* p = std::get_if<OrderedPartition>(&payload.value);
      if (!p) throw Error("ordered-partition query expects a partition literal");
      if (p->degree != degree) throw Error("partition degree mismatch");
      return stack_of({*p});
    }
    case Query::Kind::distinct_size_family: {
      auto members = encode_distinct_sizes(obj_to_family(payload, "distinct-size query"));
      Stack out = make_stack(ObjectKind::ordered_partition);
      for (const auto& m : members) out = stack_concat(out, encode_subset(m, degree));
      return out;
    }
    case Query::Kind::unordered_partition: {
      auto family = obj_to_family(payload, "partition query");
      if (!family_is_disjoint(family)) throw Error("unordered partition cells overlap");
      std::size_t covered = 0;
      for (const auto& m : family) covered += m.size();
      if (covered != static_cast<std::size_t>(degree))
        throw Error("unordered partition does not cover the domain");
      return stack_of({encode_disjoint_sets(family, degree)});
    }
    case Query::Kind::disjoint_family: {
      auto family = obj_to_family(payload, "disjoint-sets query");
      perfect = family_is_disjoint(family);
      return stack_of({encode_disjoint_sets(family, degree)});
    }
    case Query::Kind::graph: {
      auto family = obj_to_family(payload, "graph query");
      std::set<Arc> edges;
      for (const auto& e : family) {
        if (e.size() != 2) throw Error("graph edges are 2-subsets");
        edges.insert({e[0], e[1]});
      }
      return stack_of({graph_to_labelled(make_graph(degree, edges))});
    }
    case Query::Kind::digraph: {
      auto lists = obj_to_lists(payload, "digraph query");
      std::set<Arc> arcs;
      for (const auto& a : lists) {
        if (a.size() != 2) throw Error("digraph arcs are pairs");
        arcs.insert({a[0], a[1]});
      }
      return stack_of({graph_to_labelled(make_digraph_plain(degree, arcs))});
    }
    case Query::Kind::labelled_digraph: {
      auto ds = obj_to_digraphs(payload, "labelled-digraph query");
      if (ds.size() != 1) throw Error("labelled-digraph query expects one digraph");
      return stack_of({ds[0]});
    }
    case Query::Kind::perm_conj: {
      auto ps = obj_to_perms(payload, "perm-conj query");
      if (ps.size() != 1) throw Error("perm-conj query expects one permutation");
      if (ps[0].degree() != degree) throw Error("permutation degree mismatch");
      return stack_of({encode_perm_conj(ps[0])});
    }
    case Query::Kind::perm_list_conj: {
      const auto* l = std::get_if<ObjList>(&payload.value);
      if (!l) throw Error("perm-list-conj query expects a list of permutations");
      Stack out = make_stack(ObjectKind::labelled_digraph);
      for (const auto& e : *l) {
        const auto* p = std::get_if<Permutation>(&e.value);
        if (!p || p->degree() != degree)
          throw Error("perm-list-conj query expects permutations of the domain");
        out.entries.emplace_back(encode_perm_conj(*p));
      }
      return out;
    }
    case Query::Kind::set_of_sets:
      return stack_of(
          {encode_set_of_sets(obj_to_family(payload, "set-of-sets query"), degree)});
    case Query::Kind::set_of_lists:
      return stack_of(
          {encode_set_of_lists(obj_to_lists(payload, "set-of-lists query"), degree)});
    case Query::Kind::set_of_digraphs:
      return stack_of({encode_set_of_digraphs(
          obj_to_digraphs(payload, "set-of-digraphs query"), degree)});
    case Query::Kind::set_of_stacks:
      return stack_of({encode_set_of_stacks(
          obj_to_stacks(payload, "set-of-stacks query"), degree)});
    case Query::Kind::group: {
      auto gens = obj_to_perms(payload, "group query");
      for (const auto& g : gens)
        if (g.degree() != degree) throw Error("generator degree mismatch");
      perfect = false;  // the orbital-graph map is not injective
      return stack_of({encode_set_of_digraphs(orbital_graphs(gens, degree), degree)});
    }
  }
  throw Error("unsupported query kind");
}

Obj group_payload_as_set(const Obj& payload, int degree) {
  auto gens = obj_to_perms(payload, "group query");
  std::vector<Obj> elems;
  for (const auto& g : enumerate_group(degree, gens, 40320)) elems.push_back(obj_perm(g));
  return obj_set(std::move(elems));
}

}  // namespace

RefinerPair refiner_for(const Query& q) {
  if (q.degree < 1) throw Error("query degree must be positive");
  bool perfect_from = true, perfect_to = true;
  Stack a = encode_payload(q.kind, q.from, q.degree, perfect_from);
  Stack b = q.verb == Query::Verb::stabiliser
                ? a
                : encode_payload(q.kind, q.to, q.degree, perfect_to);
  bool perfect = perfect_from && perfect_to;

  // The declared target is the source-level stabiliser or transporter set,
  // phrased as a membership predicate; group queries compare whole element
  // sets so that conjugating a generating set elsewhere still counts.
  Obj from = q.kind == Query::Kind::group ? group_payload_as_set(q.from, q.degree) : q.from;
  Obj to = q.verb == Query::Verb::stabiliser
               ? from
               : (q.kind == Query::Kind::group ? group_payload_as_set(q.to, q.degree) : q.to);
  std::string verb = q.verb == Query::Verb::stabiliser ? "stab" : "transport";
  std::string name = verb + "[" + to_string(q.kind) + "]";
  TargetSet target = TargetSet::predicate(
      q.degree, name, [from, to](const Permutation& g) { return obj_equal(act(g, from), to); });
  return constant_refiner(std::move(a), std::move(b), std::move(target), name, perfect);
}

}  // namespace refinery
