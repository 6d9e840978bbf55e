#include "refinery/action.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace refinery {

int act(const Permutation& g, int point) { return g.image(point); }

std::vector<int> act_on_list(const Permutation& g, const std::vector<int>& list) {
  std::vector<int> out;
  out.reserve(list.size());
  for (int v : list) out.push_back(g.image(v));
  return out;
}

std::vector<int> act_on_set(const Permutation& g, const std::vector<int>& set) {
  auto out = act_on_list(g, set);
  std::sort(out.begin(), out.end());
  return out;
}

OrderedPartition act(const Permutation& g, const OrderedPartition& p) {
  OrderedPartition out;
  out.degree = p.degree;
  for (const auto& cell : p.cells) out.cells.push_back(act_on_set(g, cell));
  return out;
}

LabelledDigraph act(const Permutation& g, const LabelledDigraph& d) {
  LabelledDigraph out;
  for (int v : d.vertices) out.vertices.insert(g.image(v));
  for (const auto& [v, l] : d.vertex_labels) out.vertex_labels[g.image(v)] = l;
  for (const auto& [a, l] : d.arc_labels) {
    Arc m{g.image(a.first), g.image(a.second)};
    out.arcs.insert(m);
    out.arc_labels[m] = l;
  }
  return out;
}

ExtendedGraph act(const Permutation& g, const ExtendedGraph& e) {
  if (g.degree() != e.omega)
    throw Error("extended graph action needs a permutation of the domain");
  ExtendedGraph out;
  out.omega = e.omega;
  auto map_v = [&](int v) { return v <= e.omega ? g.image(v) : v; };
  for (int v : e.representative.vertices) out.representative.vertices.insert(map_v(v));
  for (const auto& [v, l] : e.representative.vertex_labels)
    out.representative.vertex_labels[map_v(v)] = l;
  for (const auto& [a, l] : e.representative.arc_labels) {
    Arc m{map_v(a.first), map_v(a.second)};
    out.representative.arcs.insert(m);
    out.representative.arc_labels[m] = l;
  }
  return out;
}

Permutation act(const Permutation& g, const Permutation& x) {
  return compose(inverse(g), compose(x, g));
}

StackEntry act(const Permutation& g, const StackEntry& e) {
  return std::visit([&](const auto& v) -> StackEntry { return act(g, v); }, e);
}

Stack act(const Permutation& g, const Stack& s) {
  Stack out;
  out.kind = s.kind;
  out.entries.reserve(s.entries.size());
  for (const auto& e : s.entries) out.entries.push_back(act(g, e));
  return out;
}

Obj obj_point(int alpha) { return Obj{alpha}; }
Obj obj_perm(Permutation p) { return Obj{std::move(p)}; }
Obj obj_partition(OrderedPartition p) { return Obj{std::move(p)}; }
Obj obj_digraph(LabelledDigraph d) { return Obj{std::move(d)}; }
Obj obj_extended(ExtendedGraph e) { return Obj{std::move(e)}; }

Obj obj_set(std::vector<Obj> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Obj{ObjSet{std::move(elems)}};
}

Obj obj_list(std::vector<Obj> elems) { return Obj{ObjList{std::move(elems)}}; }

Obj obj_point_set(const std::vector<int>& points) {
  std::vector<Obj> elems;
  for (int p : points) elems.push_back(obj_point(p));
  return obj_set(std::move(elems));
}

Obj obj_point_list(const std::vector<int>& points) {
  std::vector<Obj> elems;
  for (int p : points) elems.push_back(obj_point(p));
  return obj_list(std::move(elems));
}

Obj obj_set_of_point_sets(const std::vector<std::vector<int>>& members) {
  std::vector<Obj> elems;
  for (const auto& m : members) elems.push_back(obj_point_set(m));
  return obj_set(std::move(elems));
}

Obj act(const Permutation& g, const Obj& x) {
  return std::visit(
      [&](const auto& v) -> Obj {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ObjSet>) {
          std::vector<Obj> out;
          out.reserve(v.elems.size());
          for (const auto& e : v.elems) out.push_back(act(g, e));
          return obj_set(std::move(out));
        } else if constexpr (std::is_same_v<T, ObjList>) {
          std::vector<Obj> out;
          out.reserve(v.size());
          for (const auto& e : v) out.push_back(act(g, e));
          return obj_list(std::move(out));
        } else {
          return Obj{act(g, v)};
        }
      },
      x.value);
}

namespace {

bool obj_equal_impl(const Obj& a, const Obj& b, bool brute) {
  if (a.value.index() != b.value.index()) return false;
  if (const auto* ea = std::get_if<ExtendedGraph>(&a.value)) {
    const auto& eb = std::get<ExtendedGraph>(b.value);
    return brute ? extended_equal_brute(*ea, eb) : extended_equal(*ea, eb);
  }
  if (const auto* sa = std::get_if<ObjSet>(&a.value)) {
    const auto& sb = std::get<ObjSet>(b.value);
    if (sa->elems.size() != sb.elems.size()) return false;
    for (std::size_t i = 0; i < sa->elems.size(); ++i)
      if (!obj_equal_impl(sa->elems[i], sb.elems[i], brute)) return false;
    return true;
  }
  if (const auto* la = std::get_if<ObjList>(&a.value)) {
    const auto& lb = std::get<ObjList>(b.value);
    if (la->size() != lb.size()) return false;
    for (std::size_t i = 0; i < la->size(); ++i)
      if (!obj_equal_impl((*la)[i], lb[i], brute)) return false;
    return true;
  }
  return a == b;
}

}  // namespace

bool obj_equal(const Obj& a, const Obj& b) { return obj_equal_impl(a, b, false); }
bool obj_equal_brute(const Obj& a, const Obj& b) { return obj_equal_impl(a, b, true); }

// --- Literals ---------------------------------------------------------------

namespace {

struct LiteralParser {
  std::string_view text;
  std::size_t pos = 0;
  int degree;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) throw Error("unexpected end of object literal");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c)
      throw Error(std::string("expected '") + c + "' in object literal");
    ++pos;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  int parse_point() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw Error("expected point in object literal");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    if (v < 1 || v > degree) throw Error("point out of range in object literal");
    return v;
  }

  Obj parse() {
    char c = peek();
    if (c == '{') return parse_set();
    if (c == '[') return parse_list_or_partition();
    if (c == '(') return parse_perm_literal();
    return obj_point(parse_point());
  }

  Obj parse_perm_literal() {
    // Consecutive (...) groups form one permutation literal.
    std::size_t start = pos;
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] != '(') break;
      while (pos < text.size() && text[pos] != ')') ++pos;
      if (pos >= text.size()) throw Error("unterminated cycle in permutation literal");
      ++pos;
    }
    return obj_perm(parse_perm(text.substr(start, pos - start), degree));
  }

  Obj parse_set() {
    expect('{');
    std::vector<Obj> elems;
    if (!try_consume('}')) {
      do {
        elems.push_back(parse());
      } while (try_consume(','));
      expect('}');
    }
    return obj_set(std::move(elems));
  }

  Obj parse_list_or_partition() {
    expect('[');
    if (try_consume(']')) return obj_list({});
    Obj first = parse();
    skip_ws();
    if (pos < text.size() && text[pos] == '|') {
      // ordered partition literal: [{1,2}|{3}]
      std::vector<std::vector<int>> cells;
      cells.push_back(to_point_set(first));
      while (try_consume('|')) cells.push_back(to_point_set(parse()));
      expect(']');
      return obj_partition(make_partition(degree, std::move(cells)));
    }
    std::vector<Obj> elems;
    elems.push_back(std::move(first));
    while (try_consume(',')) elems.push_back(parse());
    expect(']');
    return obj_list(std::move(elems));
  }

  static std::vector<int> to_point_set(const Obj& o) {
    const auto* s = std::get_if<ObjSet>(&o.value);
    if (!s) throw Error("partition cells must be point sets");
    std::vector<int> out;
    for (const auto& e : s->elems) {
      const auto* p = std::get_if<int>(&e.value);
      if (!p) throw Error("partition cells must contain points");
      out.push_back(*p);
    }
    return out;
  }
};

}  // namespace

Obj parse_obj_literal(std::string_view text, int degree) {
  LiteralParser p{text, 0, degree};
  Obj out = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) throw Error("trailing characters after object literal");
  return out;
}

std::string to_literal(const Obj& x) {
  std::ostringstream out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, int>) {
          out << v;
        } else if constexpr (std::is_same_v<T, Permutation>) {
          out << to_cycle_string(v);
        } else if constexpr (std::is_same_v<T, OrderedPartition>) {
          out << '[';
          for (std::size_t i = 0; i < v.cells.size(); ++i) {
            if (i) out << '|';
            out << '{';
            for (std::size_t j = 0; j < v.cells[i].size(); ++j) {
              if (j) out << ',';
              out << v.cells[i][j];
            }
            out << '}';
          }
          out << ']';
        } else if constexpr (std::is_same_v<T, ObjSet>) {
          out << '{';
          for (std::size_t i = 0; i < v.elems.size(); ++i) {
            if (i) out << ',';
            out << to_literal(v.elems[i]);
          }
          out << '}';
        } else if constexpr (std::is_same_v<T, ObjList>) {
          out << '[';
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << ',';
            out << to_literal(v[i]);
          }
          out << ']';
        } else {
          out << "<digraph>";  // structured objects travel through files
        }
      },
      x.value);
  return out.str();
}

}  // namespace refinery
