#pragma once

#include "refinery/refiner.hpp"

namespace refinery {

struct SolveResult {
  GroupCoset coset;
  long tree_nodes = 0;
};

// One node of the individualise-refine search, exposed so that the
// refinement step can be driven and inspected on its own.
struct SearchState {
  std::vector<LabelledDigraph> left_stack, right_stack;
  OrderedPartition left_cells, right_cells;
  long node_count = 0;
  long refiner_applications = 0;
  bool dead = false;
};

// Iterated colour refinement to fixpoint, applied identically to both sides.
// Vertex signatures combine the current cell, vertex labels, loop labels,
// per-label in/out neighbour colours, and symmetric-arc partners, per stack
// entry. A dead state means the class sizes stopped matching.
SearchState colour_refine(SearchState state);

// Exact Iso(S, T) for stacks of labelled digraphs on {1,...,n}: generators
// of Auto(S) plus a transporting representative, or the empty coset.
SolveResult solve(const std::vector<LabelledDigraph>& S,
                  const std::vector<LabelledDigraph>& T, int n);

// Existence only; stops at the first mapping.
bool transporter_exists(const std::vector<LabelledDigraph>& S,
                        const std::vector<LabelledDigraph>& T, int n);

// Iso(S, T) in Sym(omega) for extended-graph stacks: each entry pair is
// renamed onto a common block of extra vertices, the blocks of distinct
// entries kept disjoint, and the joint problem is solved in the enlarged
// symmetric group and restricted to the domain.
SolveResult solve_extended(const std::vector<ExtendedGraph>& S,
                           const std::vector<ExtendedGraph>& T, int omega);

// Any stack kind; points and ordered partitions are embedded into labelled
// digraphs first. The result lives in Sym(degree).
SolveResult solve_stack(const Stack& S, const Stack& T, int degree);

// Largest subgroup with the same orbits on the square of the domain:
// the automorphism group of the stack of all orbital graphs.
GroupCoset two_closure(const std::vector<Permutation>& gens, int n,
                       long* tree_nodes = nullptr);

bool is_two_closed(const std::vector<Permutation>& gens, int n,
                   std::size_t cap = 40320);

// Stabiliser of the set of orbital graphs, i.e. the normaliser of the
// 2-closure; always contains the normaliser itself.
SolveResult normaliser_overgroup(const std::vector<Permutation>& gens, int n);

struct ExactResult {
  GroupCoset coset;
  bool exact = true;
  long tree_nodes = 0;
};

// Exact normaliser: enumerate the overgroup and keep the conjugating
// elements. On cap overflow the overgroup is returned flagged inexact.
ExactResult exact_normaliser(const std::vector<Permutation>& gens, int n,
                             std::size_t cap = 40320);

// The full set {x : G^x = H} as a coset of the normaliser of G, or empty.
ExactResult conjugacy_transporter(const std::vector<Permutation>& gens_g,
                                  const std::vector<Permutation>& gens_h, int n,
                                  std::size_t cap = 40320);

// The backtrack search for the intersection of the refiners' targets.
// Refiners are applied once at the root; when every refiner is perfect the
// search closes there (tree_nodes = 1) because the stacks already represent
// the intersection, which is then read off. Otherwise the tree is explored
// with leaves filtered through the declared targets.
struct IntersectionResult {
  GroupCoset coset;
  long tree_nodes = 0;
  Stack left, right;
  bool closed_at_root = false;
};

IntersectionResult intersection_search(const std::vector<RefinerPair>& refiners,
                                       int degree, bool apply_refiners = true);

}  // namespace refinery
