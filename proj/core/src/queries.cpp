#include "refinery/queries.hpp"

namespace refinery {

namespace {

BenchQuery from_queries(std::string name, int degree, std::vector<Query> queries) {
  BenchQuery q;
  q.name = std::move(name);
  q.degree = degree;
  q.fully_perfect = true;
  for (const auto& query : queries) {
    q.refiners.push_back(refiner_for(query));
    q.fully_perfect = q.fully_perfect && q.refiners.back().perfect;
  }
  return q;
}

}  // namespace

std::vector<BenchQuery> standard_query_set() {
  std::vector<BenchQuery> out;

  out.push_back(from_queries(
      "stab-subset-5", 5,
      {stabiliser_query(Query::Kind::subset, 5, obj_point_set({1, 2}))}));

  out.push_back(from_queries(
      "transport-subset-4", 4,
      {transporter_query(Query::Kind::subset, 4, obj_point_set({1, 2}),
                         obj_point_set({1, 3}))}));

  out.push_back(from_queries(
      "stab-perm-conj-6", 6,
      {stabiliser_query(Query::Kind::perm_conj, 6,
                        obj_perm(parse_perm("(1 2)(3 6 5)", 6)))}));

  out.push_back(from_queries(
      "transport-perm-conj-4", 4,
      {transporter_query(Query::Kind::perm_conj, 4, obj_perm(parse_perm("(1 2)", 4)),
                         obj_perm(parse_perm("(1 3)", 4)))}));

  out.push_back(from_queries(
      "stab-set-of-sets-4", 4,
      {stabiliser_query(Query::Kind::set_of_sets, 4,
                        obj_set_of_point_sets({{1, 4}, {2, 3}}))}));

  out.push_back(from_queries(
      "stab-distinct-sizes-5", 5,
      {stabiliser_query(Query::Kind::distinct_size_family, 5,
                        obj_set_of_point_sets({{1, 2}, {3, 4, 5}}))}));

  out.push_back(from_queries(
      "stab-disjoint-6", 6,
      {stabiliser_query(Query::Kind::disjoint_family, 6,
                        obj_set_of_point_sets({{1, 2}, {3, 4}, {5}}))}));

  out.push_back(from_queries(
      "stab-set-of-lists-4", 4,
      {stabiliser_query(Query::Kind::set_of_lists, 4,
                        obj_set({obj_point_list({1, 2}), obj_point_list({3, 4}),
                                 obj_point_list({2, 1})}))}));

  // Intersection of two perfect refiners: closes at the root.
  out.push_back(from_queries(
      "intersect-stab-cent-4", 4,
      {stabiliser_query(Query::Kind::subset, 4, obj_point_set({1, 2})),
       stabiliser_query(Query::Kind::perm_conj, 4,
                        obj_perm(parse_perm("(1 2)(3 4)", 4)))}));

  // The orbital-graph refiner is not claimed perfect, so this one searches.
  {
    std::vector<Obj> gens{obj_perm(parse_perm("(1 2 3)(4 5 6)", 6)),
                          obj_perm(parse_perm("(1 4)(2 5)", 6))};
    out.push_back(from_queries(
        "normaliser-6", 6,
        {stabiliser_query(Query::Kind::group, 6, obj_list(gens))}));
  }

  return out;
}

}  // namespace refinery
