#include "refinery/objects.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace refinery {

void validate(const OrderedPartition& p) {
  if (p.degree < 1) throw Error("partition degree must be positive");
  std::vector<bool> seen(p.degree, false);
  std::size_t covered = 0;
  for (const auto& cell : p.cells) {
    if (cell.empty()) throw Error("partition has an empty cell");
    if (!std::is_sorted(cell.begin(), cell.end())) throw Error("partition cell not sorted");
    for (int v : cell) {
      if (v < 1 || v > p.degree) throw Error("partition point out of range");
      if (seen[v - 1]) throw Error("partition cells intersect");
      seen[v - 1] = true;
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(p.degree))
    throw Error("partition cells do not cover the domain");
}

OrderedPartition make_partition(int degree, std::vector<std::vector<int>> cells) {
  OrderedPartition p;
  p.degree = degree;
  p.cells = std::move(cells);
  for (auto& cell : p.cells) std::sort(cell.begin(), cell.end());
  validate(p);
  return p;
}

namespace {

void check_label(const Label& l) {
  for (char c : l)
    if (std::isspace(static_cast<unsigned char>(c)))
      throw Error("labels must not contain whitespace");
}

}  // namespace

void validate(const LabelledDigraph& g) {
  for (int v : g.vertices)
    if (v < 1) throw Error("vertex ids must be positive");
  for (const auto& a : g.arcs) {
    if (!g.vertices.count(a.first) || !g.vertices.count(a.second))
      throw Error("arc endpoint is not a vertex");
    if (!g.arc_labels.count(a)) throw Error("arc without a label");
  }
  for (const auto& [a, l] : g.arc_labels) {
    if (!g.arcs.count(a)) throw Error("arc label for a missing arc");
    check_label(l);
  }
  for (int v : g.vertices)
    if (!g.vertex_labels.count(v)) throw Error("vertex without a label");
  for (const auto& [v, l] : g.vertex_labels) {
    if (!g.vertices.count(v)) throw Error("vertex label for a missing vertex");
    check_label(l);
  }
}

LabelledDigraph make_digraph(std::set<int> vertices, std::set<Arc> arcs,
                             std::map<int, Label> vertex_labels,
                             std::map<Arc, Label> arc_labels) {
  LabelledDigraph g;
  g.vertices = std::move(vertices);
  g.arcs = std::move(arcs);
  g.vertex_labels = std::move(vertex_labels);
  g.arc_labels = std::move(arc_labels);
  validate(g);
  return g;
}

LabelledDigraph uniform_digraph(int n, const std::set<Arc>& arcs, const Label& label) {
  LabelledDigraph g;
  for (int v = 1; v <= n; ++v) {
    g.vertices.insert(v);
    g.vertex_labels[v] = label;
  }
  for (const auto& a : arcs) {
    g.arcs.insert(a);
    g.arc_labels[a] = label;
  }
  validate(g);
  return g;
}

std::vector<int> ExtendedGraph::extra() const {
  std::vector<int> out;
  for (int v : representative.vertices)
    if (v > omega) out.push_back(v);
  return out;
}

void validate(const ExtendedGraph& e) {
  if (e.omega < 1) throw Error("extended graph domain must be positive");
  validate(e.representative);
  for (int v = 1; v <= e.omega; ++v)
    if (!e.representative.vertices.count(v))
      throw Error("extended graph representative must contain the whole domain");
  // Extras are the least unused naturals above the domain, ascending.
  int expected = e.omega;
  for (int v : e.extra())
    if (v != ++expected) throw Error("extra vertices must be contiguous above the domain");
  std::set<Label> inner, outer;
  for (const auto& [v, l] : e.representative.vertex_labels)
    (v <= e.omega ? inner : outer).insert(l);
  for (const auto& l : inner)
    if (outer.count(l)) throw Error("domain vertex label reused on an extra vertex");
}

ExtendedGraph make_extended(int omega, LabelledDigraph representative) {
  ExtendedGraph e;
  e.omega = omega;
  e.representative = std::move(representative);
  validate(e);
  return e;
}

std::string to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::point: return "point";
    case ObjectKind::ordered_partition: return "ordered-partition";
    case ObjectKind::labelled_digraph: return "labelled-digraph";
    case ObjectKind::extended_graph: return "extended-graph";
  }
  throw Error("unknown object kind");
}

ObjectKind kind_of(const StackEntry& e) {
  switch (e.index()) {
    case 0: return ObjectKind::point;
    case 1: return ObjectKind::ordered_partition;
    case 2: return ObjectKind::labelled_digraph;
    default: return ObjectKind::extended_graph;
  }
}

void validate(const Stack& s) {
  for (const auto& e : s.entries) {
    if (kind_of(e) != s.kind) throw Error("stack entry kind mismatch");
    std::visit(
        [](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (!std::is_same_v<T, int>) validate(v);
        },
        e);
  }
}

Stack make_stack(ObjectKind kind, std::vector<StackEntry> entries) {
  Stack s;
  s.kind = kind;
  s.entries = std::move(entries);
  validate(s);
  return s;
}

Stack stack_of(std::vector<OrderedPartition> entries) {
  Stack s;
  s.kind = ObjectKind::ordered_partition;
  for (auto& e : entries) s.entries.emplace_back(std::move(e));
  return s;
}

Stack stack_of(std::vector<LabelledDigraph> entries) {
  Stack s;
  s.kind = ObjectKind::labelled_digraph;
  for (auto& e : entries) s.entries.emplace_back(std::move(e));
  return s;
}

Stack stack_of(std::vector<ExtendedGraph> entries) {
  Stack s;
  s.kind = ObjectKind::extended_graph;
  for (auto& e : entries) s.entries.emplace_back(std::move(e));
  return s;
}

Stack stack_of_points(std::vector<int> entries) {
  Stack s;
  s.kind = ObjectKind::point;
  for (int e : entries) s.entries.emplace_back(e);
  return s;
}

Stack stack_concat(const Stack& s, const Stack& t) {
  if (!s.is_empty() && !t.is_empty() && s.kind != t.kind)
    throw Error("cannot concatenate stacks of different kinds");
  Stack out;
  out.kind = s.is_empty() ? t.kind : s.kind;
  out.entries = s.entries;
  out.entries.insert(out.entries.end(), t.entries.begin(), t.entries.end());
  return out;
}

bool stack_equal(const Stack& s, const Stack& t) {
  if (s.size() != t.size()) return false;
  if (!s.is_empty() && s.kind != t.kind) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& a = s.entries[i];
    const auto& b = t.entries[i];
    if (a.index() != b.index()) return false;
    if (const auto* ea = std::get_if<ExtendedGraph>(&a)) {
      if (!extended_equal(*ea, std::get<ExtendedGraph>(b))) return false;
    } else if (a != b) {
      return false;
    }
  }
  return true;
}

std::vector<LabelledDigraph> digraph_entries(const Stack& s) {
  std::vector<LabelledDigraph> out;
  for (const auto& e : s.entries) out.push_back(std::get<LabelledDigraph>(e));
  return out;
}

std::vector<ExtendedGraph> extended_entries(const Stack& s) {
  std::vector<ExtendedGraph> out;
  for (const auto& e : s.entries) out.push_back(std::get<ExtendedGraph>(e));
  return out;
}

bool extended_equal_brute(const ExtendedGraph& a, const ExtendedGraph& b) {
  if (a.omega != b.omega) throw Error("extended graphs over different domains");
  auto ea = a.extra();
  auto eb = b.extra();
  if (ea.size() != eb.size()) return false;
  if (ea.size() > static_cast<std::size_t>(brute_extra_cap))
    throw Error("too many extra vertices for brute orbit equality");
  if (ea.empty()) return a.representative == b.representative;
  if (a.representative.arcs.size() != b.representative.arcs.size()) return false;

  // Extras are contiguous above omega on both sides, so a bijection between
  // them is a permutation of the same id range.
  std::vector<int> img(ea);  // img[i] = image of vertex ea[i]
  std::sort(img.begin(), img.end());
  do {
    auto map_v = [&](int v) {
      if (v <= a.omega) return v;
      return img[v - a.omega - 1];
    };
    bool ok = true;
    for (const auto& [v, l] : a.representative.vertex_labels) {
      auto it = b.representative.vertex_labels.find(map_v(v));
      if (it == b.representative.vertex_labels.end() || it->second != l) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const auto& [arc, l] : a.representative.arc_labels) {
        Arc m{map_v(arc.first), map_v(arc.second)};
        auto it = b.representative.arc_labels.find(m);
        if (it == b.representative.arc_labels.end() || it->second != l) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

// --- Text format -----------------------------------------------------------

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw Error("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error(std::string("malformed ") + what + ": '" + s + "'");
  }
}

struct LineReader {
  std::vector<std::vector<std::string>> lines;
  std::size_t pos = 0;

  explicit LineReader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      auto toks = tokenize(line);
      if (toks.empty() || toks[0][0] == '#') continue;
      lines.push_back(std::move(toks));
    }
  }
  bool done() const { return pos >= lines.size(); }
  const std::vector<std::string>& peek() const { return lines[pos]; }
  std::vector<std::string> next() { return lines[pos++]; }
};

OrderedPartition parse_partition_line(const std::vector<std::string>& toks) {
  if (toks.size() < 2 || toks[1].rfind("n=", 0) != 0)
    throw Error("partition line must start 'partition n=<degree>'");
  int degree = parse_int(toks[1].substr(2), "degree");
  std::vector<std::vector<int>> cells;
  for (std::size_t i = 2; i < toks.size(); ++i) {
    if (toks[i] == "|") {
      cells.emplace_back();
    } else {
      if (cells.empty()) throw Error("partition cells must start with '|'");
      cells.back().push_back(parse_int(toks[i], "partition point"));
    }
  }
  return make_partition(degree, std::move(cells));
}

// Parses one digraph block; extended when extra= appears in the header.
std::variant<LabelledDigraph, ExtendedGraph> parse_digraph_block(LineReader& in) {
  auto header = in.next();
  if (header.size() < 2 || header[1].rfind("n=", 0) != 0)
    throw Error("digraph line must start 'digraph n=<degree>'");
  int degree = parse_int(header[1].substr(2), "degree");
  bool extended = false;
  std::set<int> extras;
  for (std::size_t i = 2; i < header.size(); ++i) {
    if (header[i].rfind("extra=", 0) == 0) {
      extended = true;
      std::string rest = header[i].substr(6);
      if (!rest.empty()) extras.insert(parse_int(rest, "extra vertex"));
    } else {
      if (!extended) throw Error("unexpected token in digraph header");
      extras.insert(parse_int(header[i], "extra vertex"));
    }
  }
  LabelledDigraph g;
  for (int v = 1; v <= degree; ++v) g.vertices.insert(v);
  for (int v : extras) g.vertices.insert(v);
  while (!in.done()) {
    const auto& toks = in.peek();
    if (toks[0] == "v") {
      if (toks.size() != 3) throw Error("vertex line must be 'v <id> <label>'");
      int v = parse_int(toks[1], "vertex id");
      if (!g.vertices.count(v)) throw Error("vertex label for unknown vertex");
      g.vertex_labels[v] = toks[2];
      in.next();
    } else if (toks[0] == "a") {
      if (toks.size() != 4) throw Error("arc line must be 'a <from> <to> <label>'");
      Arc arc{parse_int(toks[1], "arc endpoint"), parse_int(toks[2], "arc endpoint")};
      g.arcs.insert(arc);
      g.arc_labels[arc] = toks[3];
      in.next();
    } else {
      break;
    }
  }
  validate(g);
  if (extended) return make_extended(degree, std::move(g));
  for (int v : g.vertices)
    if (v > degree) throw Error("plain digraph vertex outside the domain");
  return g;
}

}  // namespace

std::vector<ParsedObject> parse_objects_text(std::string_view text) {
  LineReader in(text);
  std::vector<ParsedObject> out;
  while (!in.done()) {
    const auto& toks = in.peek();
    if (toks[0] == "partition") {
      out.emplace_back(parse_partition_line(in.next()));
    } else if (toks[0] == "digraph") {
      auto block = parse_digraph_block(in);
      if (auto* g = std::get_if<LabelledDigraph>(&block))
        out.emplace_back(std::move(*g));
      else
        out.emplace_back(std::move(std::get<ExtendedGraph>(block)));
    } else if (toks[0] == "stack") {
      auto header = in.next();
      if (header.size() != 3 || header[1].rfind("n=", 0) != 0 ||
          header[2].rfind("len=", 0) != 0)
        throw Error("stack line must be 'stack n=<degree> len=<count>'");
      DigraphStackDecl decl;
      decl.degree = parse_int(header[1].substr(2), "degree");
      int len = parse_int(header[2].substr(4), "stack length");
      for (int i = 0; i < len; ++i) {
        if (in.done() || in.peek()[0] != "digraph")
          throw Error("stack block expects a digraph block per entry");
        auto block = parse_digraph_block(in);
        if (!std::holds_alternative<LabelledDigraph>(block))
          throw Error("stack entries must be plain digraphs");
        decl.entries.push_back(std::get<LabelledDigraph>(std::move(block)));
      }
      out.emplace_back(std::move(decl));
    } else {
      throw Error("unknown declaration '" + toks[0] + "'");
    }
  }
  return out;
}

std::string write_object(const OrderedPartition& p) {
  std::ostringstream out;
  out << "partition n=" << p.degree;
  for (const auto& cell : p.cells) {
    out << " |";
    for (int v : cell) out << ' ' << v;
  }
  out << '\n';
  return out.str();
}

namespace {

std::string write_digraph_block(const LabelledDigraph& g, int degree, bool extended) {
  std::ostringstream out;
  out << "digraph n=" << degree;
  if (extended) {
    out << " extra=";
    bool first = true;
    for (int v : g.vertices)
      if (v > degree) {
        if (!first) out << ' ';
        first = false;
        out << v;
      }
  }
  out << '\n';
  for (const auto& [v, l] : g.vertex_labels) out << "v " << v << ' ' << l << '\n';
  for (const auto& [a, l] : g.arc_labels)
    out << "a " << a.first << ' ' << a.second << ' ' << l << '\n';
  return out.str();
}

}  // namespace

std::string write_object(const LabelledDigraph& g, int degree) {
  return write_digraph_block(g, degree, false);
}

std::string write_object(const ExtendedGraph& e) {
  return write_digraph_block(e.representative, e.omega, true);
}

}  // namespace refinery
