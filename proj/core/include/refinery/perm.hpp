#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refinery/error.hpp"

namespace refinery {

// The ground set is always {1,...,n}. Vertices above n belong to the extra
// pool and are chosen ascending from n+1.
struct Domain {
  int n = 1;
};

void validate(const Domain& d);

// A bijection on {1,...,degree}, stored as a dense image table.
// images()[i] is the image of point i+1; all points are 1-based.
class Permutation {
 public:
  Permutation() = default;  // degree 0; only useful as a placeholder
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int alpha) const;
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  // Lexicographic by image table; the canonical element order everywhere.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Cycle notation. "()" is the identity; non-disjoint cycles compose left to
// right, so "(1 2)(2 3)" maps 1 to 3.
Permutation parse_perm(std::string_view text, int degree);
std::string to_cycle_string(const Permutation& p);

// alpha^(compose(p, q)) = (alpha^p)^q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Breadth-first closure of <gens>; throws if the group exceeds cap.
// Result is sorted lexicographically by image table.
std::vector<Permutation> enumerate_group(int degree,
                                         const std::vector<Permutation>& gens,
                                         std::size_t cap);

// Restriction to {1,...,omega.n}; p must preserve that set setwise.
Permutation restrict_to(const Permutation& p, Domain omega);

// A subgroup of Sym(degree) given by generators, optionally shifted by a
// representative (the coset <generators> * representative), or the empty set.
struct GroupCoset {
  int degree = 0;
  bool empty = false;
  std::vector<Permutation> generators;
  std::optional<Permutation> representative;  // absent means subgroup

  static GroupCoset empty_set(int degree);
  static GroupCoset subgroup(int degree, std::vector<Permutation> gens);
  static GroupCoset coset(int degree, std::vector<Permutation> gens,
                          Permutation rep);

  bool is_subgroup() const;
  std::size_t order(std::size_t cap) const;  // |<generators>|
  // All elements of <generators> * representative, sorted.
  std::vector<Permutation> elements(std::size_t cap) const;
  bool contains(const Permutation& g, std::size_t cap) const;
};

void validate(const GroupCoset& c);

// Least-representative coset through an explicit element list: picks the
// minimal element as representative and a small generating set for the
// group part. The list must actually be a coset.
GroupCoset coset_from_elements(int degree, std::vector<Permutation> elems);

}  // namespace refinery
