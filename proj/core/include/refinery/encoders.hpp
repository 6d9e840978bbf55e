#pragma once

#include "refinery/refiner.hpp"

namespace refinery {

// Injective, action-compatible encodings of common objects into stacks,
// labelled digraphs, and extended graphs, plus the refiner factory that
// turns stabiliser/transporter queries into constant refiner pairs.

// The uniform token carried by unlabelled-source encodings.
inline const Label uniform_label = "x";
// Reserved labels of the set-of-digraphs construction.
inline const Label hash_label = "hash";
inline const Label anchor_label = "anchor";
// Vertex labels of the white/black extended-graph encodings.
inline const Label white_label = "w:white";
inline const Label black_label = "b:black";

// Subset A of {1,...,n} as a partition stack: the empty set becomes the
// empty stack, the full set the one-cell partition, anything else [A, rest].
Stack encode_subset(const std::vector<int>& a, int n);

// Members ordered ascending by size; sizes must be pairwise distinct.
std::vector<std::vector<int>> encode_distinct_sizes(
    const std::vector<std::vector<int>>& family);

struct Graph {
  int n = 0;
  std::set<Arc> edges;  // stored with first < second
};

struct Digraph {
  int n = 0;
  std::set<Arc> arcs;
};

Graph make_graph(int n, const std::set<Arc>& edges);
Digraph make_digraph_plain(int n, const std::set<Arc>& arcs);

// Each edge becomes the two opposite arcs; everything gets the fixed label.
LabelledDigraph graph_to_labelled(const Graph& g);
LabelledDigraph graph_to_labelled(const Digraph& g);

// Clique plus loops on every member; injective only for families of
// nonempty pairwise disjoint members (unordered partitions included).
LabelledDigraph encode_disjoint_sets(const std::vector<std::vector<int>>& family, int n);
bool family_is_disjoint(const std::vector<std::vector<int>>& family);

// Functional digraph of the permutation: arc (a, b) iff a^g = b.
LabelledDigraph encode_perm_conj(const Permutation& g);

// One black vertex per member, arcs from each point into the members
// containing it; members indexed by (size, contents) ascending.
ExtendedGraph encode_set_of_sets(const std::vector<std::vector<int>>& family, int n);

// Chains of position vertices per list; an empty list contributes one
// trailing isolated vertex.
ExtendedGraph encode_set_of_lists(const std::vector<std::vector<int>>& lists, int n);

// Disjoint anchored copies of the members, pinned back to the domain.
// Member labels must avoid the reserved tokens.
ExtendedGraph encode_set_of_digraphs(const std::vector<LabelledDigraph>& members, int n);

// Injective flattening of a digraph stack into one digraph: labels become
// position-tagged label lists, arcs the union across entries.
LabelledDigraph flatten_stack(const std::vector<LabelledDigraph>& stack, int n);

ExtendedGraph encode_set_of_stacks(const std::vector<std::vector<LabelledDigraph>>& stacks,
                                   int n);

// One uniformly-labelled digraph per orbit on pairs, diagonal orbits
// included, ordered by least base pair.
std::vector<LabelledDigraph> orbital_graphs(const std::vector<Permutation>& gens, int n);

// The orbit of [1,...,n]; its set-of-lists encoding has stabiliser exactly
// the group, at the price of (|G|+1)*n vertices.
std::vector<std::vector<int>> group_as_set_of_lists(const std::vector<Permutation>& gens,
                                                    int n, std::size_t cap);

// Hierarchy embeddings: every kind embeds injectively into labelled
// digraphs, and those into extended graphs with no extra vertices.
LabelledDigraph point_to_digraph(int alpha, int n);
LabelledDigraph partition_to_digraph(const OrderedPartition& p);
ExtendedGraph digraph_to_extended(const LabelledDigraph& d, int n);
Stack embed_stack(const Stack& s, ObjectKind target, int degree);

// --- Refiner factory --------------------------------------------------------

struct Query {
  enum class Verb { stabiliser, transporter };
  enum class Kind {
    point,
    point_list,
    subset,
    ordered_partition,
    distinct_size_family,
    unordered_partition,
    disjoint_family,
    graph,
    digraph,
    labelled_digraph,
    perm_conj,
    perm_list_conj,
    set_of_sets,
    set_of_lists,
    set_of_digraphs,
    set_of_stacks,
    group,
  };

  Verb verb = Verb::stabiliser;
  Kind kind = Kind::subset;
  int degree = 0;
  Obj from;
  Obj to;  // ignored for stabilisers
};

Query stabiliser_query(Query::Kind kind, int degree, Obj x);
Query transporter_query(Query::Kind kind, int degree, Obj x, Obj y);

Query::Kind parse_query_kind(std::string_view name);
std::string to_string(Query::Kind kind);

// Constant refiner pair for the query, built from the matching encoder.
// `perfect` is set exactly for the encodings that are injective on the
// query's domain; group queries (normaliser, conjugacy) go through the
// orbital-graph map, which is not injective, so they are never claimed
// perfect.
RefinerPair refiner_for(const Query& q);

}  // namespace refinery
