#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "refinery/perm.hpp"

namespace refinery {

// List of nonempty disjoint cells covering {1,...,degree}; cell order matters.
struct OrderedPartition {
  int degree = 0;
  std::vector<std::vector<int>> cells;  // each cell sorted ascending

  friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;
};

void validate(const OrderedPartition& p);
OrderedPartition make_partition(int degree, std::vector<std::vector<int>> cells);

using Label = std::string;
using Arc = std::pair<int, int>;

// Digraph with a label on every vertex and every arc. Vertex ids are
// arbitrary positive integers so the same type serves plain digraphs on
// {1,...,n} and extended-graph representatives with vertices above n.
struct LabelledDigraph {
  std::set<int> vertices;
  std::set<Arc> arcs;
  std::map<int, Label> vertex_labels;
  std::map<Arc, Label> arc_labels;

  friend auto operator<=>(const LabelledDigraph&, const LabelledDigraph&) = default;
};

void validate(const LabelledDigraph& g);
LabelledDigraph make_digraph(std::set<int> vertices, std::set<Arc> arcs,
                             std::map<int, Label> vertex_labels,
                             std::map<Arc, Label> arc_labels);
// All vertices 1..n and all arcs carry the same label.
LabelledDigraph uniform_digraph(int n, const std::set<Arc>& arcs, const Label& label);

// An orbit of Sym(V \ Omega) on labelled digraphs on V, stored by one
// representative. Extra vertices are the least naturals above omega,
// ascending, and the labels used on {1,...,omega} never appear on them.
struct ExtendedGraph {
  int omega = 0;
  LabelledDigraph representative;

  std::vector<int> extra() const;  // vertices above omega, ascending

  // Structural order on representatives, for deterministic containers only;
  // orbit equality is extended_equal.
  friend auto operator<=>(const ExtendedGraph&, const ExtendedGraph&) = default;
};

void validate(const ExtendedGraph& e);
ExtendedGraph make_extended(int omega, LabelledDigraph representative);

enum class ObjectKind { point, ordered_partition, labelled_digraph, extended_graph };

std::string to_string(ObjectKind k);

using StackEntry = std::variant<int, OrderedPartition, LabelledDigraph, ExtendedGraph>;

ObjectKind kind_of(const StackEntry& e);

// Homogeneous finite list of objects of one kind; may be empty. Extended
// entries may use different extra-vertex sets.
struct Stack {
  ObjectKind kind = ObjectKind::point;
  std::vector<StackEntry> entries;

  std::size_t size() const { return entries.size(); }
  bool is_empty() const { return entries.empty(); }
};

void validate(const Stack& s);
Stack make_stack(ObjectKind kind, std::vector<StackEntry> entries = {});
Stack stack_of(std::vector<OrderedPartition> entries);
Stack stack_of(std::vector<LabelledDigraph> entries);
Stack stack_of(std::vector<ExtendedGraph> entries);
Stack stack_of_points(std::vector<int> entries);

Stack stack_concat(const Stack& s, const Stack& t);

// Semantic equality: structural except that extended entries compare by
// orbit (extended_equal).
bool stack_equal(const Stack& s, const Stack& t);

std::vector<LabelledDigraph> digraph_entries(const Stack& s);
std::vector<ExtendedGraph> extended_entries(const Stack& s);

// Orbit equality of extended graphs: equal extra-vertex counts and some
// permutation of the extra vertices carries one representative to the other.
// Uses plain enumeration over the extra vertices when there are at most
// brute_extra_cap of them, and the search engine beyond that.
inline constexpr int brute_extra_cap = 6;
bool extended_equal(const ExtendedGraph& a, const ExtendedGraph& b);
// Enumeration-only route; throws if there are more than brute_extra_cap
// extra vertices. The oracle uses this so that it never leans on the engine.
bool extended_equal_brute(const ExtendedGraph& a, const ExtendedGraph& b);

// --- Text format -----------------------------------------------------------
//
//   # comment
//   partition n=5 | 1 2 | 3 4 5
//   digraph n=7 extra=8 9 10 11
//   v 1 w:white
//   a 1 9 b:black
//   stack n=6 len=2         (followed by `len` digraph blocks)
//
// Whitespace-separated; labels therefore contain no whitespace. A digraph
// block with an extra= clause denotes an extended graph.

struct DigraphStackDecl {
  int degree = 0;
  std::vector<LabelledDigraph> entries;
};

using ParsedObject =
    std::variant<OrderedPartition, LabelledDigraph, ExtendedGraph, DigraphStackDecl>;

std::vector<ParsedObject> parse_objects_text(std::string_view text);

std::string write_object(const OrderedPartition& p);
std::string write_object(const LabelledDigraph& g, int degree);
std::string write_object(const ExtendedGraph& e);

}  // namespace refinery
