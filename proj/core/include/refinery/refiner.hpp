#pragma once

#include <functional>
#include <memory>
#include <random>

#include "refinery/action.hpp"
#include "refinery/oracle.hpp"

namespace refinery {

// The set of permutations a refiner is declared for: empty, a subgroup or
// coset by generators, or an arbitrary membership predicate. Predicate mode
// is only consumed by the checkers, which enumerate the symmetric group.
class TargetSet {
 public:
  enum class Mode { empty, subgroup, coset, predicate };

  static TargetSet empty_set(int degree);
  static TargetSet subgroup(int degree, std::vector<Permutation> gens);
  static TargetSet coset(int degree, std::vector<Permutation> gens, Permutation rep);
  static TargetSet predicate(int degree, std::string name,
                             std::function<bool(const Permutation&)> member);

  Mode mode() const { return mode_; }
  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::optional<Permutation>& representative() const { return rep_; }

  bool contains(const Permutation& g, std::size_t cap = 40320) const;
  // Every element; predicate mode filters Sym(degree) through the oracle.
  std::vector<Permutation> elements(std::size_t cap = 40320) const;

 private:
  Mode mode_ = Mode::empty;
  int degree_ = 0;
  std::string name_;
  std::vector<Permutation> gens_;
  std::optional<Permutation> rep_;
  std::function<bool(const Permutation&)> member_;
  // Memoised enumeration for membership tests on group/coset targets.
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

struct StackFn {
  std::string name;
  std::function<Stack(const Stack&)> fn;

  Stack operator()(const Stack& s) const { return fn(s); }
};

StackFn identity_fn();
StackFn empty_image_fn(ObjectKind kind);
StackFn constant_fn(std::string name, Stack image);
// Notation f^x: S -> f(S^(x^-1))^x.
StackFn conjugate_fn(const StackFn& f, const Permutation& x);
StackFn concat_fn(const StackFn& f, const StackFn& g);

// A pair of stack-extending functions with a declared target set. `perfect`
// is a metadata claim pinned by the constructing code path and verified by
// check_perfect; it is trusted by the intersection search.
struct RefinerPair {
  ObjectKind kind = ObjectKind::labelled_digraph;
  StackFn left, right;
  TargetSet target;
  std::string name;
  bool perfect = false;
};

// Constant pair (S -> A, T -> B); perfect precisely when target = Iso(A,B),
// which the caller asserts through `perfect`.
RefinerPair constant_refiner(Stack a, Stack b, TargetSet target, std::string name,
                             bool perfect);
// (f_L, f_L^x) for the right coset G*x of the group refiner's target.
RefinerPair coset_refiner(const RefinerPair& group_refiner, const Permutation& x);
// (f || g, sigma || tau) for the intersection of the two targets.
RefinerPair concat_refiners(const RefinerPair& r1, const RefinerPair& r2);
RefinerPair list_refiner(const std::vector<RefinerPair>& rs);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> lines;

  std::string text() const;
};

// Samples pseudo-random stack pairs of equal length (the first pair is
// always empty, the decisive case for constant refiners) and verifies the
// refiner condition, or the perfect-refiner equality, by enumeration.
CheckReport check_sound(const RefinerPair& r, int samples, unsigned seed);
CheckReport check_perfect(const RefinerPair& r, int samples, unsigned seed);

// Deterministic generator of random objects and stacks of one kind.
class ObjectSampler {
 public:
  ObjectSampler(ObjectKind kind, int degree, unsigned seed);

  StackEntry sample_entry();
  Stack sample_stack(int max_len = 3);
  Permutation sample_perm();

 private:
  ObjectKind kind_;
  int degree_;
  std::mt19937_64 rng_;

  int next(int bound);  // uniform-ish in [0, bound)
};

// All g in Sym(degree) with act(g, S) = T entrywise. Extended entries with
// many extra vertices are resolved through one engine call per entry pair.
std::vector<Permutation> stack_transporter_elements(const Stack& S, const Stack& T,
                                                    int degree);

}  // namespace refinery
