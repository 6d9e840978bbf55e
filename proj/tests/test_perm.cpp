#include <doctest.h>

#include "refinery/action.hpp"

using namespace refinery;

TEST_CASE("cycle notation parses and prints") {
  CHECK(parse_perm("()", 4) == Permutation::identity(4));
  CHECK(parse_perm("(1 2)(3 6 5)", 6).images() == std::vector<int>{2, 1, 6, 4, 3, 5});
  CHECK(parse_perm("(1 2)(3 4)", 4).images() == std::vector<int>{2, 1, 4, 3});
  // Non-disjoint cycles compose left to right.
  CHECK(parse_perm("(1 2)(2 3)", 3) == parse_perm("(1 3 2)", 3));

  CHECK(to_cycle_string(Permutation::identity(5)) == "()");
  CHECK(to_cycle_string(parse_perm("(1 2)(3 6 5)", 6)) == "(1 2)(3 6 5)");
  for (const char* text : {"()", "(1 2)", "(2 4)(1 3)", "(1 2 3 4)"}) {
    CAPTURE(text);
    CHECK(to_cycle_string(parse_perm(to_cycle_string(parse_perm(text, 4)), 4)) ==
          to_cycle_string(parse_perm(text, 4)));
  }
}

TEST_CASE("cycle notation rejects malformed input") {
  CHECK_THROWS_AS(parse_perm("(1 9)", 4), Error);
  CHECK_THROWS_AS(parse_perm("(1 2", 4), Error);
  CHECK_THROWS_AS(parse_perm("1 2)", 4), Error);
  CHECK_THROWS_AS(parse_perm("(1 2 1)", 4), Error);
  CHECK_THROWS_AS(parse_perm("", 4), Error);
  CHECK_THROWS_AS(parse_perm("(0 1)", 4), Error);
}

TEST_CASE("composition and inverse") {
  const Permutation p = parse_perm("(1 2)", 3);
  const Permutation q = parse_perm("(2 3)", 3);
  CHECK(compose(p, q) == parse_perm("(1 3 2)", 3));
  CHECK(compose(p, Permutation::identity(3)) == p);
  CHECK(compose(p, inverse(p)) == Permutation::identity(3));
  CHECK(inverse(parse_perm("(1 2 3)", 3)) == parse_perm("(1 3 2)", 3));
  CHECK(inverse(Permutation::identity(3)) == Permutation::identity(3));
  CHECK(inverse(parse_perm("(1 2)(3 4)", 4)) == parse_perm("(1 2)(3 4)", 4));
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)), Error);
}

TEST_CASE("action on nested objects") {
  const Permutation g = parse_perm("(1 2)(3 4)", 4);
  const Obj x = obj_set({obj_point_list({1, 2}), obj_point_list({2, 3}),
                         obj_point_list({3, 2})});
  const Obj expected = obj_set({obj_point_list({2, 1}), obj_point_list({1, 4}),
                                obj_point_list({4, 1})});
  CHECK(obj_equal(act(g, x), expected));
  CHECK(obj_equal(act(Permutation::identity(4), x), x));

  LabelledDigraph d = uniform_digraph(4, {{1, 2}}, "x");
  LabelledDigraph e = uniform_digraph(4, {{2, 1}}, "x");
  CHECK(act(parse_perm("(1 2)", 4), d) == e);
  CHECK_THROWS_AS(act(parse_perm("(1 2)", 2), d), Error);
}

TEST_CASE("action axiom on sampled objects") {
  ObjectSampler sampler(ObjectKind::labelled_digraph, 5, 7);
  for (int i = 0; i < 20; ++i) {
    Permutation g = sampler.sample_perm();
    Permutation h = sampler.sample_perm();
    Stack s = sampler.sample_stack();
    // x^(gh) = (x^g)^h
    CHECK(stack_equal(act(compose(g, h), s), act(h, act(g, s))));
  }
}

TEST_CASE("group enumeration") {
  CHECK(enumerate_group(3, {}, 10) == std::vector<Permutation>{Permutation::identity(3)});
  CHECK(enumerate_group(4, {parse_perm("(1 2)", 4)}, 10).size() == 2);

  const std::vector<Permutation> gens{parse_perm("(1 2 3)(4 5 6)", 6),
                                      parse_perm("(1 4)(2 5)", 6)};
  auto elems = enumerate_group(6, gens, 10000);
  CHECK(elems.size() == 12);
  CHECK(std::is_sorted(elems.begin(), elems.end()));

  // Closed under composition and inverse, contains the identity.
  std::set<Permutation> all(elems.begin(), elems.end());
  CHECK(all.count(Permutation::identity(6)) == 1);
  for (const auto& a : elems) {
    CHECK(all.count(inverse(a)) == 1);
    for (const auto& b : elems) CHECK(all.count(compose(a, b)) == 1);
  }

  CHECK_THROWS_AS(enumerate_group(6, gens, 5), Error);
  CHECK_THROWS_AS(enumerate_group(6, {parse_perm("(1 2)", 4)}, 10), Error);
}

TEST_CASE("restriction to the domain") {
  CHECK(restrict_to(Permutation::identity(6), Domain{4}) == Permutation::identity(4));
  CHECK(restrict_to(parse_perm("(1 2)(5 6)", 6), Domain{4}) == parse_perm("(1 2)", 4));
  CHECK_THROWS_AS(restrict_to(parse_perm("(1 5)", 6), Domain{4}), Error);

  ObjectSampler sampler(ObjectKind::point, 3, 11);
  for (int i = 0; i < 20; ++i) {
    // Restriction is compatible with composition on setwise-preserving pairs.
    Permutation inner = sampler.sample_perm();
    std::vector<int> im{inner.images()};
    for (int v = 4; v <= 6; ++v) im.push_back(v);
    Permutation p{im};
    Permutation q = compose(p, parse_perm("(4 5 6)", 6));
    CHECK(compose(restrict_to(p, Domain{3}), restrict_to(q, Domain{3})) ==
          restrict_to(compose(p, q), Domain{3}));
  }
}

TEST_CASE("group cosets") {
  auto stab = GroupCoset::subgroup(4, {parse_perm("(3 4)", 4)});
  CHECK(stab.order(100) == 2);
  CHECK(stab.is_subgroup());
  CHECK(stab.contains(parse_perm("(3 4)", 4), 100));
  CHECK_FALSE(stab.contains(parse_perm("(1 2)", 4), 100));

  auto coset = GroupCoset::coset(4, {parse_perm("(3 4)", 4)}, parse_perm("(1 2)", 4));
  auto elems = coset.elements(100);
  CHECK(elems.size() == 2);
  for (const auto& e : elems) CHECK(e.image(1) == 2);

  auto rebuilt = coset_from_elements(4, elems);
  CHECK_FALSE(rebuilt.empty);
  CHECK(rebuilt.elements(100) == elems);

  CHECK(GroupCoset::empty_set(4).elements(100).empty());
}
