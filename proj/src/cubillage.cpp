#include "zonocube/cubillage.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "zonocube/order.hpp"

namespace zonocube {

namespace {

std::string describe(const Facet& f) { return "(" + f.root.label() + "," + f.type.label() + ")"; }
std::string describe(const Cube& c) { return "(" + c.root.label() + "," + c.type.label() + ")"; }

bool type_less(const Cube& a, const Cube& b) { return a.type < b.type; }

/// Root of the plate of type J on one side of Z(colors, |J|+1).
ColorSet plate_root(ColorSet colors, ColorSet J, Side side) {
  ColorSet root;
  Parity wanted = side == Side::back ? Parity::even : Parity::odd;
  for (int j : colors - J) {
    if (parity(j, J) == wanted) root = root.with(j);
  }
  return root;
}

void check_dimension(int d) {
  if (d < 1) throw InvalidArgument("dimension d must be at least 1");
}

void check_new_color(ColorSet colors, int color) {
  if (color < 1 || color > ColorSet::kMaxColor) throw InvalidArgument("color out of range");
  if (colors.contains(color)) {
    throw InvalidArgument("color " + std::to_string(color) + " is already present");
  }
}

}  // namespace

Facet visible_facet(const Cube& cube, int color) {
  ColorSet J = cube.type.without(color);
  bool odd = parity(color, J) == Parity::odd;
  return {odd ? cube.root.with(color) : cube.root, J};
}

Facet invisible_facet(const Cube& cube, int color) {
  ColorSet J = cube.type.without(color);
  bool odd = parity(color, J) == Parity::odd;
  return {odd ? cube.root : cube.root.with(color), J};
}

std::vector<FacetPair> facet_pairs(const Cube& cube) {
  std::vector<FacetPair> out;
  for (int t : cube.type) out.push_back({t, visible_facet(cube, t), invisible_facet(cube, t)});
  return out;
}

std::vector<Facet> boundary_plates(ColorSet colors, int d, Side side) {
  check_dimension(d);
  std::vector<Facet> out;
  for (ColorSet J : grassmannian(colors, d - 1)) out.push_back({plate_root(colors, J, side), J});
  return out;
}

Cubillage::Cubillage(ColorSet colors, int d, std::vector<Cube> cubes)
    : colors_(colors), d_(d), cubes_(std::move(cubes)) {
  check_dimension(d);
  std::sort(cubes_.begin(), cubes_.end(), type_less);
  for (std::size_t i = 0; i < cubes_.size(); ++i) {
    if (cubes_[i].type.size() != d) {
      throw InvalidArgument("cube type " + cubes_[i].type.label() + " does not have " + std::to_string(d) +
                            " colors");
    }
    if (i > 0 && cubes_[i].type == cubes_[i - 1].type) {
      throw InvalidArgument("two cubes share type " + cubes_[i].type.label());
    }
  }
}

std::size_t Cubillage::index_of(ColorSet type) const {
  auto it = std::lower_bound(cubes_.begin(), cubes_.end(), type,
                             [](const Cube& c, ColorSet t) { return c.type < t; });
  if (it == cubes_.end() || it->type != type) return npos;
  return static_cast<std::size_t>(it - cubes_.begin());
}

const Cube* Cubillage::find(ColorSet type) const {
  std::size_t i = index_of(type);
  return i == npos ? nullptr : &cubes_[i];
}

const Cube& Cubillage::at(ColorSet type) const {
  const Cube* c = find(type);
  if (c == nullptr) throw InvalidArgument("no cube of type " + type.label());
  return *c;
}

std::vector<ColorSet::Mask> Cubillage::key() const {
  std::vector<ColorSet::Mask> k;
  k.reserve(cubes_.size());
  for (const Cube& c : cubes_) k.push_back(c.root.mask());
  return k;
}

Cubillage standard(ColorSet colors, int d) {
  check_dimension(d);
  if (colors.size() < d) throw InvalidArgument("need at least d colors");
  std::vector<Cube> cubes;
  std::vector<int> elems = colors.elements();
  ColorSet active;
  for (int k = 0; k < d; ++k) active = active.with(elems[k]);
  cubes.push_back({ColorSet{}, active});
  for (std::size_t k = d; k < elems.size(); ++k) {
    for (const Facet& f : boundary_plates(active, d, Side::back)) cubes.push_back({f.root, f.type.with(elems[k])});
    active = active.with(elems[k]);
  }
  return Cubillage(colors, d, std::move(cubes));
}

Cubillage antistandard(ColorSet colors, int d) {
  check_dimension(d);
  if (colors.size() < d) throw InvalidArgument("need at least d colors");
  std::vector<Cube> cubes;
  std::vector<int> elems = colors.elements();
  ColorSet active;
  for (int k = 0; k < d; ++k) active = active.with(elems[k]);
  cubes.push_back({ColorSet{}, active});
  for (std::size_t k = d; k < elems.size(); ++k) {
    int m = elems[k];
    for (Cube& c : cubes) c.root = c.root.with(m);
    for (const Facet& f : boundary_plates(active, d, Side::front)) cubes.push_back({f.root, f.type.with(m)});
    active = active.with(m);
  }
  return Cubillage(colors, d, std::move(cubes));
}

Diagnostic validate(const Cubillage& Q) {
  const ColorSet C = Q.colors();
  const int d = Q.dim();
  const int n = C.size();
  if (n < d) return Diagnostic::failure("type-bijection", "fewer colors than the dimension");
  for (const Cube& c : Q.cubes()) {
    if (!c.type.subset_of(C) || !c.root.subset_of(C)) {
      return Diagnostic::failure("type-bijection", "cube " + describe(c) + " uses colors outside " + C.label());
    }
  }
  if (Q.size() != binomial(n, d)) {
    return Diagnostic::failure("type-bijection", std::to_string(Q.size()) + " cubes instead of " +
                                                     std::to_string(binomial(n, d)));
  }

  FacetAdjacency adj;
  for (std::size_t q = 0; q < Q.size(); ++q) {
    const Cube& c = Q.cubes()[q];
    if (!c.root.disjoint(c.type)) {
      return Diagnostic::failure("facet-pairing", "cube " + describe(c) + " has a root meeting its type");
    }
    for (const FacetPair& p : facet_pairs(c)) {
      FacetLink& lo = adj[p.invisible];
      if (lo.below >= 0) {
        return Diagnostic::failure("facet-pairing", "facet " + describe(p.invisible) +
                                                         " lies on the back of two cubes");
      }
      lo.below = static_cast<long>(q);
      FacetLink& hi = adj[p.visible];
      if (hi.above >= 0) {
        return Diagnostic::failure("facet-pairing", "facet " + describe(p.visible) +
                                                         " lies on the front of two cubes");
      }
      hi.above = static_cast<long>(q);
    }
  }
  std::unordered_set<Facet, FacetHash> back, front;
  for (const Facet& f : boundary_plates(C, d, Side::back)) back.insert(f);
  for (const Facet& f : boundary_plates(C, d, Side::front)) front.insert(f);
  for (const auto& [f, link] : adj) {
    bool is_back = back.count(f) > 0;
    bool is_front = front.count(f) > 0;
    if (link.below >= 0 && link.above >= 0) {
      if (is_back || is_front) {
        return Diagnostic::failure("facet-pairing", "boundary facet " + describe(f) + " is shared by two cubes");
      }
    } else if (link.below >= 0 && !is_back) {
      return Diagnostic::failure("facet-pairing", "facet " + describe(f) + " has no cube in front of it");
    } else if (link.above >= 0 && !is_front) {
      return Diagnostic::failure("facet-pairing", "facet " + describe(f) + " has no cube behind it");
    }
  }
  for (const Facet& f : back) {
    auto it = adj.find(f);
    if (it == adj.end() || it->second.below < 0) {
      return Diagnostic::failure("facet-pairing", "back boundary facet " + describe(f) + " is not covered");
    }
  }
  for (const Facet& f : front) {
    auto it = adj.find(f);
    if (it == adj.end() || it->second.above < 0) {
      return Diagnostic::failure("facet-pairing", "front boundary facet " + describe(f) + " is not covered");
    }
  }

  std::vector<std::vector<std::size_t>> succ(Q.size());
  std::vector<std::size_t> indeg(Q.size(), 0);
  for (const auto& [f, link] : adj) {
    if (link.below >= 0 && link.above >= 0) {
      succ[link.below].push_back(static_cast<std::size_t>(link.above));
      ++indeg[link.above];
    }
  }
  std::deque<std::size_t> ready;
  for (std::size_t q = 0; q < Q.size(); ++q) {
    if (indeg[q] == 0) ready.push_back(q);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t q = ready.front();
    ready.pop_front();
    ++seen;
    for (std::size_t r : succ[q]) {
      if (--indeg[r] == 0) ready.push_back(r);
    }
  }
  if (seen != Q.size()) return Diagnostic::failure("acyclic-order", "the natural order contains a cycle");

  std::size_t verts = vertex_spectra(Q).size();
  if (verts != binomial_upto(n, d)) {
    return Diagnostic::failure("vertex-count", std::to_string(verts) + " vertices instead of " +
                                                    std::to_string(binomial_upto(n, d)));
  }
  return Diagnostic::success();
}

void require_valid(const Cubillage& Q) {
  Diagnostic diag = validate(Q);
  if (!diag) throw CorruptInput(diag.message());
}

std::vector<ColorSet> vertex_spectra(const Cubillage& Q) {
  std::unordered_set<ColorSet> seen;
  for (const Cube& c : Q.cubes()) {
    for (ColorSet s : all_subsets(c.type)) seen.insert(c.root | s);
  }
  std::vector<ColorSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

EdgeGraph edge_graph(const Cubillage& Q) {
  EdgeGraph g;
  g.vertices = vertex_spectra(Q);
  std::unordered_set<Facet, FacetHash> seen;
  for (const Cube& c : Q.cubes()) {
    for (int t : c.type) {
      for (ColorSet s : all_subsets(c.type.without(t))) {
        Facet e{c.root | s, ColorSet{t}};
        if (seen.insert(e).second) g.edges.push_back({e.root, t});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
    if (a.tail != b.tail) return a.tail < b.tail;
    return a.color < b.color;
  });
  for (ColorSet v : g.vertices) g.outgoing[v];
  for (std::size_t i = 0; i < g.edges.size(); ++i) g.outgoing[g.edges[i].tail].push_back(static_cast<int>(i));
  return g;
}

Reduction reduce(const Cubillage& Q, int color) {
  if (!Q.colors().contains(color)) throw InvalidArgument("color " + std::to_string(color) + " is not present");
  if (Q.n() <= Q.dim()) throw InvalidArgument("cannot reduce a cubillage with only d colors");
  std::vector<Cube> kept;
  std::vector<Facet> seam;
  std::vector<ColorSet> below;
  for (const Cube& c : Q.cubes()) {
    if (c.type.contains(color)) {
      seam.push_back({c.root, c.type.without(color)});
    } else {
      kept.push_back({c.root.without(color), c.type});
      if (!c.root.contains(color)) below.push_back(c.type);
    }
  }
  std::sort(seam.begin(), seam.end());
  return {Cubillage(Q.colors().without(color), Q.dim(), std::move(kept)), std::move(seam), std::move(below)};
}

Cubillage expand(const Cubillage& Q, std::span<const ColorSet> stack, int color) {
  check_new_color(Q.colors(), color);
  if (!Q.colors().empty() && color < Q.colors().max()) {
    throw Unsupported("expansion along a stack needs a color above every existing color");
  }
  Membrane M = membrane_of_stack(Q, stack);
  std::unordered_set<ColorSet> in_stack(stack.begin(), stack.end());
  std::vector<Cube> cubes;
  cubes.reserve(Q.size() + M.plates.size());
  for (const Cube& c : Q.cubes()) {
    cubes.push_back(in_stack.count(c.type) ? c : Cube{c.root.with(color), c.type});
  }
  for (const Facet& f : M.plates) cubes.push_back({f.root, f.type.with(color)});
  return Cubillage(Q.colors().with(color), Q.dim(), std::move(cubes));
}

namespace {

Cubillage expand_at_boundary(const Cubillage& Q, int color, bool at_back) {
  check_new_color(Q.colors(), color);
  const ColorSet C = Q.colors();
  std::vector<Cube> cubes;
  for (const Cube& c : Q.cubes()) cubes.push_back(at_back ? c : Cube{c.root.with(color), c.type});
  for (ColorSet J : grassmannian(C, Q.dim() - 1)) {
    Parity own = parity(color, J);
    ColorSet root;
    for (int j : C - J) {
      bool same = parity(j, J) == own;
      if (same == at_back) root = root.with(j);
    }
    cubes.push_back({root, J.with(color)});
  }
  return Cubillage(C.with(color), Q.dim(), std::move(cubes));
}

}  // namespace

Cubillage expand_at_back(const Cubillage& Q, int color) { return expand_at_boundary(Q, color, true); }

Cubillage expand_at_front(const Cubillage& Q, int color) { return expand_at_boundary(Q, color, false); }

Cubillage contract(const Cubillage& Q, int color) {
  if (Q.dim() < 2) throw InvalidArgument("contraction needs dimension at least 2");
  if (Q.colors().size() == Q.dim()) {
    if (!Q.colors().contains(color)) throw InvalidArgument("color " + std::to_string(color) + " is not present");
    ColorSet rest = Q.colors().without(color);
    return Cubillage(rest, Q.dim() - 1, {Cube{ColorSet{}, rest}});
  }
  Reduction r = reduce(Q, color);
  std::vector<Cube> cubes;
  for (const Facet& f : r.seam) cubes.push_back({f.root, f.type});
  return Cubillage(Q.colors().without(color), Q.dim() - 1, std::move(cubes));
}

Cubillage embed_subcubillage(ColorSet colors, int d, ColorSet X, ColorSet T) {
  check_dimension(d);
  if (T.size() != d) throw InvalidArgument("type must have exactly d colors");
  if (!T.subset_of(colors) || !X.subset_of(colors)) throw InvalidArgument("root and type must lie in the colors");
  if (!X.disjoint(T)) throw InvalidArgument("root and type must be disjoint");
  ColorSet free = colors - X - T;
  if (!free.empty()) {
    int i = free.max();
    return expand_at_back(embed_subcubillage(colors.without(i), d, X, T), i);
  }
  if (!X.empty()) {
    int i = X.max();
    return expand_at_front(embed_subcubillage(colors.without(i), d, X.without(i), T), i);
  }
  return Cubillage(T, d, {Cube{ColorSet{}, T}});
}

Cubillage restrict_to(const Cubillage& Q, ColorSet sub) {
  std::vector<Cube> cubes;
  for (const Cube& c : Q.cubes()) {
    if (!c.type.subset_of(sub)) continue;
    if (!c.root.subset_of(sub)) {
      throw InvalidArgument("cube " + describe(c) + " is not rooted inside " + sub.label());
    }
    cubes.push_back(c);
  }
  return Cubillage(sub, Q.dim(), std::move(cubes));
}

Cubillage splice(const Cubillage& Q, const Cubillage& replacement) {
  ColorSet sub = replacement.colors();
  std::vector<Cube> cubes;
  for (const Cube& c : Q.cubes()) {
    if (!c.type.subset_of(sub)) cubes.push_back(c);
  }
  cubes.insert(cubes.end(), replacement.cubes().begin(), replacement.cubes().end());
  return Cubillage(Q.colors(), Q.dim(), std::move(cubes));
}

}  // namespace zonocube
