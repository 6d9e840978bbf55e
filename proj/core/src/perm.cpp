#include "refinery/perm.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace refinery {

void validate(const Domain& d) {
  if (d.n < 1) throw Error("domain size must be at least 1");
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > degree()) throw Error("image table entry out of range");
    if (seen[v - 1]) throw Error("image table is not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw Error("negative degree");
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i + 1;
  return Permutation(std::move(im));
}

int Permutation::image(int alpha) const {
  if (alpha < 1 || alpha > degree()) throw Error("point outside permutation domain");
  return images_[alpha - 1];
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation parse_perm(std::string_view text, int degree) {
  if (degree < 1) throw Error("degree must be positive");
  Permutation result = Permutation::identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error("empty permutation string");
  bool saw_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw Error("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    std::set<int> in_cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw Error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error("expected point or ')' in cycle");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (value < 1 || value > degree) throw Error("cycle point out of range");
      if (!in_cycle.insert(value).second) throw Error("point repeated within one cycle");
      if (i < text.size() && text[i] == ',') ++i;  // tolerate comma separators
      cycle.push_back(value);
    }
    saw_cycle = true;
    if (cycle.size() >= 2) {
      std::vector<int> im(degree);
      for (int k = 0; k < degree; ++k) im[k] = k + 1;
      for (std::size_t k = 0; k < cycle.size(); ++k)
        im[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
      result = compose(result, Permutation(std::move(im)));
    }
  }
  if (!saw_cycle) throw Error("no cycles found");
  return result;
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[start - 1] || p.image(start) == start) continue;
    any = true;
    out << '(';
    int v = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << v;
      seen[v - 1] = true;
      v = p.image(v);
    } while (v != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error("degree mismatch in composition");
  std::vector<int> im(p.degree());
  for (int i = 1; i <= p.degree(); ++i) im[i - 1] = q.image(p.image(i));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> im(p.degree());
  for (int i = 1; i <= p.degree(); ++i) im[p.image(i) - 1] = i;
  return Permutation(std::move(im));
}

std::vector<Permutation> enumerate_group(int degree,
                                         const std::vector<Permutation>& gens,
                                         std::size_t cap) {
  if (cap < 1) throw Error("enumeration cap must be at least 1");
  for (const auto& g : gens)
    if (g.degree() != degree) throw Error("generator degree mismatch");
  std::set<Permutation> seen;
  std::vector<Permutation> frontier;
  seen.insert(Permutation::identity(degree));
  frontier.push_back(Permutation::identity(degree));
  while (!frontier.empty()) {
    Permutation x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      Permutation y = compose(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw Error("group order exceeds enumeration cap");
        frontier.push_back(y);
      }
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

Permutation restrict_to(const Permutation& p, Domain omega) {
  validate(omega);
  if (omega.n > p.degree()) throw Error("domain larger than permutation degree");
  std::vector<int> im(omega.n);
  for (int i = 1; i <= omega.n; ++i) {
    int v = p.image(i);
    if (v > omega.n) throw Error("permutation does not preserve the domain setwise");
    im[i - 1] = v;
  }
  return Permutation(std::move(im));
}

GroupCoset GroupCoset::empty_set(int degree) {
  GroupCoset c;
  c.degree = degree;
  c.empty = true;
  return c;
}

GroupCoset GroupCoset::subgroup(int degree, std::vector<Permutation> gens) {
  GroupCoset c;
  c.degree = degree;
  c.generators = std::move(gens);
  validate(c);
  return c;
}

GroupCoset GroupCoset::coset(int degree, std::vector<Permutation> gens, Permutation rep) {
  GroupCoset c;
  c.degree = degree;
  c.generators = std::move(gens);
  c.representative = std::move(rep);
  validate(c);
  return c;
}

bool GroupCoset::is_subgroup() const {
  return !empty && (!representative || representative->is_identity());
}

std::size_t GroupCoset::order(std::size_t cap) const {
  if (empty) return 0;
  return enumerate_group(degree, generators, cap).size();
}

std::vector<Permutation> GroupCoset::elements(std::size_t cap) const {
  if (empty) return {};
  std::vector<Permutation> base = enumerate_group(degree, generators, cap);
  if (representative && !representative->is_identity()) {
    for (auto& g : base) g = compose(g, *representative);
    std::sort(base.begin(), base.end());
  }
  return base;
}

bool GroupCoset::contains(const Permutation& g, std::size_t cap) const {
  if (empty) return false;
  auto all = elements(cap);
  return std::binary_search(all.begin(), all.end(), g);
}

void validate(const GroupCoset& c) {
  if (c.empty) {
    if (!c.generators.empty() || c.representative)
      throw Error("empty coset must not carry generators or representative");
    return;
  }
  for (const auto& g : c.generators)
    if (g.degree() != c.degree) throw Error("coset generator degree mismatch");
  if (c.representative && c.representative->degree() != c.degree)
    throw Error("coset representative degree mismatch");
}

GroupCoset coset_from_elements(int degree, std::vector<Permutation> elems) {
  if (elems.empty()) return GroupCoset::empty_set(degree);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const Permutation rep = elems.front();
  const Permutation rep_inv = inverse(rep);

  std::vector<Permutation> gens;
  std::set<Permutation> known;
  known.insert(Permutation::identity(degree));
  for (const auto& e : elems) {
    Permutation candidate = compose(e, rep_inv);
    if (known.count(candidate)) continue;
    gens.push_back(candidate);
    auto closure = enumerate_group(degree, gens, elems.size());
    known = std::set<Permutation>(closure.begin(), closure.end());
  }
  if (known.size() != elems.size())
    throw Error("element list is not a coset of a subgroup");
  if (rep.is_identity()) return GroupCoset::subgroup(degree, std::move(gens));
  return GroupCoset::coset(degree, std::move(gens), rep);
}

}  // namespace refinery
