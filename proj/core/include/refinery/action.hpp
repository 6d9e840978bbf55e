#pragma once

#include <compare>
#include <variant>
#include <vector>

#include "refinery/objects.hpp"

namespace refinery {

// The exponentiation action, defined recursively on every object kind.
// For labelled digraphs the permutation must cover every vertex; for
// extended graphs a permutation of the domain acts as the identity on the
// extra vertices.
int act(const Permutation& g, int point);
std::vector<int> act_on_list(const Permutation& g, const std::vector<int>& list);
std::vector<int> act_on_set(const Permutation& g, const std::vector<int>& set);
OrderedPartition act(const Permutation& g, const OrderedPartition& p);
LabelledDigraph act(const Permutation& g, const LabelledDigraph& d);
ExtendedGraph act(const Permutation& g, const ExtendedGraph& e);
// Conjugation: x^g = g^-1 x g.
Permutation act(const Permutation& g, const Permutation& x);
StackEntry act(const Permutation& g, const StackEntry& e);
Stack act(const Permutation& g, const Stack& s);

// A generic recursively-built object: point, permutation under conjugation,
// ordered partition, labelled digraph, extended graph, set, or list. This is
// the payload type of oracle queries and CLI literals. Sets hold their
// elements sorted structurally; do not put extended graphs inside sets.
struct Obj;

struct ObjSet {
  std::vector<Obj> elems;  // canonical: sorted structurally, duplicate-free
  friend auto operator<=>(const ObjSet&, const ObjSet&) = default;
};

using ObjList = std::vector<Obj>;

struct Obj {
  std::variant<int, Permutation, OrderedPartition, LabelledDigraph, ExtendedGraph,
               ObjSet, ObjList>
      value;

  friend auto operator<=>(const Obj&, const Obj&) = default;
};

Obj obj_point(int alpha);
Obj obj_perm(Permutation p);
Obj obj_partition(OrderedPartition p);
Obj obj_digraph(LabelledDigraph d);
Obj obj_extended(ExtendedGraph e);
Obj obj_set(std::vector<Obj> elems);  // sorts and dedupes
Obj obj_list(std::vector<Obj> elems);
Obj obj_point_set(const std::vector<int>& points);
Obj obj_point_list(const std::vector<int>& points);
Obj obj_set_of_point_sets(const std::vector<std::vector<int>>& members);

Obj act(const Permutation& g, const Obj& x);

// Semantic equality: structural except extended graphs compare by orbit.
bool obj_equal(const Obj& a, const Obj& b);
// Same, but extended graphs use the enumeration-only route.
bool obj_equal_brute(const Obj& a, const Obj& b);

// CLI literal syntax: 3, {1,2}, [1,2], {{1},{2,3}}, [{1,2}|{3}].
Obj parse_obj_literal(std::string_view text, int degree);
std::string to_literal(const Obj& x);

}  // namespace refinery
