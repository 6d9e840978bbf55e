// Command-line front end: stabilisers, transporters, 2-closure, normalisers,
// subgroup conjugacy, encoders, refiner checks, and the brute-force oracle.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "refinery/oracle.hpp"
#include "refinery/queries.hpp"
#include "refinery/search.hpp"

namespace {

using namespace refinery;

struct Options {
  int degree = 0;
  std::string kind;
  std::string object, from, to;
  std::string object_file, from_file, to_file;
  std::vector<std::string> gens, to_gens;
  unsigned seed = 0;
  int samples = 5;
  std::size_t cap = 40320;
  std::string out_path;
};

std::ostream& output(const Options& opt, std::ofstream& file) {
  if (opt.out_path.empty()) return std::cout;
  file.open(opt.out_path);
  if (!file) throw Error("cannot open output file '" + opt.out_path + "'");
  return file;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Permutation> parse_gens(const std::vector<std::string>& texts, int degree) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(parse_perm(t, degree));
  return out;
}

Obj payload_from_file(Query::Kind kind, const std::string& path, int degree) {
  auto parsed = parse_objects_text(read_file(path));
  auto as_digraph = [](const ParsedObject& p) -> const LabelledDigraph* {
    return std::get_if<LabelledDigraph>(&p);
  };
  switch (kind) {
    case Query::Kind::labelled_digraph: {
      if (parsed.size() != 1 || !as_digraph(parsed[0]))
        throw Error("expected exactly one digraph block in '" + path + "'");
      return obj_digraph(*as_digraph(parsed[0]));
    }
    case Query::Kind::set_of_digraphs: {
      std::vector<Obj> members;
      for (const auto& p : parsed) {
        if (!as_digraph(p)) throw Error("set-of-digraphs file may only hold digraphs");
        members.push_back(obj_digraph(*as_digraph(p)));
      }
      return obj_set(std::move(members));
    }
    case Query::Kind::set_of_stacks: {
      std::vector<Obj> members;
      for (const auto& p : parsed) {
        const auto* decl = std::get_if<DigraphStackDecl>(&p);
        if (!decl) throw Error("set-of-stacks file may only hold stack blocks");
        std::vector<Obj> entries;
        for (const auto& d : decl->entries) entries.push_back(obj_digraph(d));
        members.push_back(obj_list(std::move(entries)));
      }
      return obj_set(std::move(members));
    }
    case Query::Kind::ordered_partition: {
      if (parsed.size() != 1 || !std::holds_alternative<OrderedPartition>(parsed[0]))
        throw Error("expected exactly one partition line in '" + path + "'");
      return obj_partition(std::get<OrderedPartition>(parsed[0]));
    }
    default:
      throw Error("kind '" + to_string(kind) + "' does not take file input");
  }
  (void)degree;
}

Obj payload(Query::Kind kind, const std::string& literal, const std::string& file,
            const std::vector<std::string>& gens, int degree) {
  if (kind == Query::Kind::group) {
    if (gens.empty()) throw Error("group queries need --gens");
    std::vector<Obj> ps;
    for (const auto& g : parse_gens(gens, degree)) ps.push_back(obj_perm(g));
    return obj_list(std::move(ps));
  }
  if (!file.empty()) return payload_from_file(kind, file, degree);
  if (literal.empty()) throw Error("missing object (use --object/--from/--to or a file)");
  return parse_obj_literal(literal, degree);
}

void print_coset(std::ostream& out, const GroupCoset& c, std::size_t cap) {
  if (c.empty) {
    out << "empty\n";
    return;
  }
  std::vector<Permutation> gens = c.generators;
  std::sort(gens.begin(), gens.end());
  for (const auto& g : gens) out << "gen " << to_cycle_string(g) << '\n';
  if (c.representative && !c.representative->is_identity())
    out << "rep " << to_cycle_string(*c.representative) << '\n';
  try {
    out << "order=" << c.order(cap) << '\n';
  } catch (const Error&) {
    // order not enumerable under the cap; omit the record
  }
}

int run_stab_or_transport(const Options& opt, bool transporter) {
  Query q;
  q.kind = parse_query_kind(opt.kind);
  q.degree = opt.degree;
  if (transporter) {
    q = transporter_query(q.kind, opt.degree,
                          payload(q.kind, opt.from, opt.from_file, opt.gens, opt.degree),
                          payload(q.kind, opt.to, opt.to_file, opt.to_gens, opt.degree));
  } else {
    q = stabiliser_query(q.kind, opt.degree,
                         payload(q.kind, opt.object, opt.object_file, opt.gens, opt.degree));
  }
  RefinerPair refiner = refiner_for(q);
  IntersectionResult result = intersection_search({refiner}, opt.degree);
  std::ofstream file;
  std::ostream& out = output(opt, file);
  print_coset(out, result.coset, opt.cap);
  out << "nodes=" << result.tree_nodes << '\n';
  out << "perfect=" << (refiner.perfect ? "true" : "false") << '\n';
  return transporter && result.coset.empty ? 1 : 0;
}

int run_two_closure(const Options& opt) {
  long nodes = 0;
  GroupCoset c = two_closure(parse_gens(opt.gens, opt.degree), opt.degree, &nodes);
  std::ofstream file;
  std::ostream& out = output(opt, file);
  print_coset(out, c, opt.cap);
  out << "nodes=" << nodes << '\n';
  return 0;
}

int run_is_two_closed(const Options& opt) {
  bool closed = is_two_closed(parse_gens(opt.gens, opt.degree), opt.degree, opt.cap);
  std::ofstream file;
  output(opt, file) << (closed ? "true" : "false") << '\n';
  return 0;
}

int run_normaliser(const Options& opt) {
  ExactResult r = exact_normaliser(parse_gens(opt.gens, opt.degree), opt.degree, opt.cap);
  std::ofstream file;
  std::ostream& out = output(opt, file);
  print_coset(out, r.coset, opt.cap);
  out << "nodes=" << r.tree_nodes << '\n';
  out << "exact=" << (r.exact ? "true" : "false") << '\n';
  return 0;
}

int run_conjugate(const Options& opt) {
  ExactResult r = conjugacy_transporter(parse_gens(opt.gens, opt.degree),
                                        parse_gens(opt.to_gens, opt.degree), opt.degree,
                                        opt.cap);
  std::ofstream file;
  std::ostream& out = output(opt, file);
  print_coset(out, r.coset, opt.cap);
  out << "nodes=" << r.tree_nodes << '\n';
  out << "exact=" << (r.exact ? "true" : "false") << '\n';
  return r.coset.empty ? 1 : 0;
}

int run_encode(const Options& opt) {
  Query::Kind kind = parse_query_kind(opt.kind);
  Obj x = payload(kind, opt.object, opt.object_file, opt.gens, opt.degree);
  Query q = stabiliser_query(kind, opt.degree, std::move(x));
  RefinerPair refiner = refiner_for(q);
  Stack image = refiner.left(make_stack(refiner.kind));
  std::ofstream file;
  std::ostream& out = output(opt, file);
  for (const auto& e : image.entries) {
    switch (kind_of(e)) {
      case ObjectKind::ordered_partition:
        out << write_object(std::get<OrderedPartition>(e));
        break;
      case ObjectKind::labelled_digraph:
        out << write_object(std::get<LabelledDigraph>(e), opt.degree);
        break;
      case ObjectKind::extended_graph:
        out << write_object(std::get<ExtendedGraph>(e));
        break;
      case ObjectKind::point:
        throw Error("kind '" + opt.kind + "' has no encodable form");
    }
  }
  out << "perfect=" << (refiner.perfect ? "true" : "false") << '\n';
  return 0;
}

int run_check_refiner(const Options& opt) {
  Query::Kind kind = parse_query_kind(opt.kind);
  Query q;
  if (!opt.from.empty() || !opt.from_file.empty() || !opt.to_gens.empty()) {
    q = transporter_query(kind, opt.degree,
                          payload(kind, opt.from, opt.from_file, opt.gens, opt.degree),
                          payload(kind, opt.to, opt.to_file, opt.to_gens, opt.degree));
  } else {
    q = stabiliser_query(kind, opt.degree,
                         payload(kind, opt.object, opt.object_file, opt.gens, opt.degree));
  }
  RefinerPair refiner = refiner_for(q);
  CheckReport sound = check_sound(refiner, opt.samples, opt.seed);
  CheckReport perfect = check_perfect(refiner, opt.samples, opt.seed);
  std::ofstream file;
  std::ostream& out = output(opt, file);
  out << "check=sound\n" << sound.text();
  out << "check=perfect\n" << perfect.text();
  out << "sound=" << (sound.ok ? "true" : "false") << '\n';
  out << "perfect=" << (perfect.ok ? "true" : "false") << '\n';
  return 0;
}

Obj oracle_payload(Query::Kind kind, const std::string& literal, const std::string& file,
                   const std::vector<std::string>& gens, const Options& opt) {
  Obj x = payload(kind, literal, file, gens, opt.degree);
  if (kind == Query::Kind::group) {
    // Conjugation moves the whole element set, not a particular generating
    // list, so the oracle object is the enumerated group.
    std::vector<Obj> elems;
    for (const auto& g :
         enumerate_group(opt.degree, parse_gens(gens, opt.degree), opt.cap))
      elems.push_back(obj_perm(g));
    return obj_set(std::move(elems));
  }
  return x;
}

int run_oracle(const Options& opt) {
  Query::Kind kind = parse_query_kind(opt.kind);
  OracleConfig cfg = oracle_config_from_env();
  GroupCoset c;
  if (!opt.from.empty() || !opt.from_file.empty() || !opt.to_gens.empty()) {
    Obj x = oracle_payload(kind, opt.from, opt.from_file, opt.gens, opt);
    Obj y = oracle_payload(kind, opt.to, opt.to_file, opt.to_gens, opt);
    c = brute_transporter(x, y, opt.degree, cfg);
  } else {
    Obj x = oracle_payload(kind, opt.object, opt.object_file, opt.gens, opt);
    c = brute_transporter(x, x, opt.degree, cfg);
  }
  std::ofstream file;
  std::ostream& out = output(opt, file);
  print_coset(out, c, opt.cap);
  return c.empty ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation backtrack search with perfect refiners"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool needs_kind) {
    cmd->add_option("--degree", opt.degree, "size of the ground set {1,...,n}")
        ->required();
    if (needs_kind) cmd->add_option("--kind", opt.kind, "object kind")->required();
    cmd->add_option("--object", opt.object, "object literal");
    cmd->add_option("--object-file", opt.object_file, "object file");
    cmd->add_option("--from", opt.from, "source object literal");
    cmd->add_option("--from-file", opt.from_file, "source object file");
    cmd->add_option("--to", opt.to, "target object literal");
    cmd->add_option("--to-file", opt.to_file, "target object file");
    cmd->add_option("--gens", opt.gens, "generators in cycle notation");
    cmd->add_option("--to-gens", opt.to_gens, "target group generators");
    cmd->add_option("--seed", opt.seed, "sampling seed");
    cmd->add_option("--samples", opt.samples, "sample count");
    cmd->add_option("--cap", opt.cap, "enumeration cap");
    cmd->add_option("--out", opt.out_path, "output file (default stdout)");
  };

  auto* stab = app.add_subcommand("stab", "stabiliser of an object");
  add_common(stab, true);
  auto* transport = app.add_subcommand("transport", "transporter coset between objects");
  add_common(transport, true);
  auto* twocl = app.add_subcommand("two-closure", "2-closure of a group");
  add_common(twocl, false);
  auto* istc = app.add_subcommand("is-two-closed", "whether a group is 2-closed");
  add_common(istc, false);
  auto* norm = app.add_subcommand("normaliser", "normaliser in the symmetric group");
  add_common(norm, false);
  auto* conj = app.add_subcommand("conjugate", "conjugating coset between groups");
  add_common(conj, false);
  auto* enc = app.add_subcommand("encode", "print an object's encoding");
  add_common(enc, true);
  auto* check = app.add_subcommand("check-refiner", "soundness/perfectness report");
  add_common(check, true);
  auto* oracle = app.add_subcommand("oracle", "brute-force transporter");
  add_common(oracle, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (stab->parsed()) return run_stab_or_transport(opt, false);
    if (transport->parsed()) return run_stab_or_transport(opt, true);
    if (twocl->parsed()) return run_two_closure(opt);
    if (istc->parsed()) return run_is_two_closed(opt);
    if (norm->parsed()) return run_normaliser(opt);
    if (conj->parsed()) return run_conjugate(opt);
    if (enc->parsed()) return run_encode(opt);
    if (check->parsed()) return run_check_refiner(opt);
    if (oracle->parsed()) return run_oracle(opt);
  } catch (const refinery::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
