#include "zonocube/order.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <unordered_set>

namespace zonocube {

FacetAdjacency facet_adjacency(const Cubillage& Q) {
  FacetAdjacency adj;
  for (std::size_t q = 0; q < Q.size(); ++q) {
    for (const FacetPair& p : facet_pairs(Q.cubes()[q])) {
      FacetLink& lo = adj[p.invisible];
      FacetLink& hi = adj[p.visible];
      if (lo.below >= 0 || hi.above >= 0) throw CorruptInput("facet shared by two cubes on the same side");
      lo.below = static_cast<long>(q);
      hi.above = static_cast<long>(q);
    }
  }
  return adj;
}

NaturalOrder::NaturalOrder(const Cubillage& Q) {
  const std::size_t N = Q.size();
  for (const Cube& c : Q.cubes()) types_.push_back(c.type);
  preds_.assign(N, {});
  std::vector<std::vector<std::size_t>> succ(N);
  for (const auto& [facet, link] : facet_adjacency(Q)) {
    if (link.below >= 0 && link.above >= 0) {
      covers_.emplace_back(static_cast<std::size_t>(link.below), static_cast<std::size_t>(link.above));
    }
  }
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
  std::vector<std::size_t> indeg(N, 0);
  for (auto [a, b] : covers_) {
    succ[a].push_back(b);
    preds_[b].push_back(a);
    ++indeg[b];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < N; ++i) {
    if (indeg[i] == 0) ready.push(i);
  }
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    topo_.push_back(i);
    for (std::size_t j : succ[i]) {
      if (--indeg[j] == 0) ready.push(j);
    }
  }
  if (topo_.size() != N) throw CorruptInput("the natural order contains a cycle");
  reach_.assign(N, boost::dynamic_bitset<>(N));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    for (std::size_t j : succ[*it]) {
      reach_[*it] |= reach_[j];
      reach_[*it].set(j);
    }
  }
}

std::size_t NaturalOrder::index_of(ColorSet type) const {
  auto it = std::lower_bound(types_.begin(), types_.end(), type);
  if (it == types_.end() || *it != type) throw InvalidArgument("no cube of type " + type.label());
  return static_cast<std::size_t>(it - types_.begin());
}

std::string natural_order_dot(const Cubillage& Q) {
  NaturalOrder order(Q);
  std::string out = "digraph natural_order {\n";
  for (std::size_t i = 0; i < order.size(); ++i) out += "  \"" + order.type(i).label() + "\";\n";
  for (auto [a, b] : order.covers()) {
    out += "  \"" + order.type(a).label() + "\" -> \"" + order.type(b).label() + "\";\n";
  }
  return out + "}\n";
}

Cubillage membrane_cubillage(const Membrane& M, ColorSet colors, int d) {
  if (d < 2) throw InvalidArgument("a membrane of a 1-cubillage is a single vertex");
  std::vector<Cube> cubes;
  for (const Facet& f : M.plates) cubes.push_back({f.root, f.type});
  return Cubillage(colors, d - 1, std::move(cubes));
}

std::vector<ColorSet> membrane_vertices(const Membrane& M) {
  std::set<ColorSet> verts;
  for (const Facet& f : M.plates) {
    for (ColorSet s : all_subsets(f.type)) verts.insert(f.root | s);
  }
  return {verts.begin(), verts.end()};
}

namespace {

std::vector<char> stack_flags(const Cubillage& Q, std::span<const ColorSet> stack) {
  std::vector<char> flags(Q.size(), 0);
  for (ColorSet t : stack) {
    std::size_t i = Q.index_of(t);
    if (i == Cubillage::npos) throw InvalidArgument("stack contains unknown type " + t.label());
    flags[i] = 1;
  }
  return flags;
}

}  // namespace

bool is_stack(const Cubillage& Q, std::span<const ColorSet> stack) {
  std::vector<char> flags = stack_flags(Q, stack);
  for (const auto& [facet, link] : facet_adjacency(Q)) {
    if (link.below >= 0 && link.above >= 0 && flags[link.above] && !flags[link.below]) return false;
  }
  return true;
}

Membrane membrane_of_stack(const Cubillage& Q, std::span<const ColorSet> stack) {
  std::vector<char> flags = stack_flags(Q, stack);
  Membrane M;
  for (const auto& [facet, link] : facet_adjacency(Q)) {
    bool below_in = link.below >= 0 && flags[link.below];
    bool above_in = link.above >= 0 && flags[link.above];
    if (link.below >= 0 && link.above >= 0) {
      if (above_in && !below_in) throw InvalidArgument("the given types do not form a stack");
      if (below_in && !above_in) M.plates.push_back(facet);
    } else if (link.above >= 0) {
      if (!above_in) M.plates.push_back(facet);
    } else if (below_in) {
      M.plates.push_back(facet);
    }
  }
  std::sort(M.plates.begin(), M.plates.end());
  return M;
}

MembraneSide side_of_membrane(ColorSet type, std::span<const ColorSet> membrane_vertices) {
  std::vector<int> k = type.elements();
  ColorSet before_pattern, after_pattern;
  for (int j = static_cast<int>(k.size()) - 1, step = 0; j >= 0; --j, ++step) {
    if (step % 2 == 0) {
      before_pattern = before_pattern.with(k[j]);
    } else {
      after_pattern = after_pattern.with(k[j]);
    }
  }
  bool before = false, after = false;
  for (ColorSet v : membrane_vertices) {
    ColorSet trace = type & v;
    before = before || trace == before_pattern;
    after = after || trace == after_pattern;
  }
  if (before == after) {
    throw InvalidArgument("type " + type.label() + " is not separated by the membrane");
  }
  return before ? MembraneSide::before : MembraneSide::after;
}

std::vector<ColorSet> stack_of_membrane(const Cubillage& Q, const Membrane& M) {
  std::vector<ColorSet> verts = membrane_vertices(M);
  std::vector<ColorSet> stack;
  for (const Cube& c : Q.cubes()) {
    if (side_of_membrane(c.type, verts) == MembraneSide::before) stack.push_back(c.type);
  }
  if (!is_stack(Q, stack) || !(membrane_of_stack(Q, stack) == M)) {
    throw InvalidArgument("the plates do not form a membrane of the cubillage");
  }
  return stack;
}

std::vector<std::vector<ColorSet>> enumerate_membranes(const Cubillage& Q) {
  NaturalOrder order(Q);
  const auto& topo = order.topological_order();
  std::vector<std::vector<ColorSet>> out;
  std::vector<char> chosen(order.size(), 0);
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == topo.size()) {
      std::vector<ColorSet> s;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i]) s.push_back(order.type(i));
      }
      out.push_back(std::move(s));
      return;
    }
    std::size_t i = topo[pos];
    self(self, pos + 1);
    bool allowed = std::all_of(order.predecessors(i).begin(), order.predecessors(i).end(),
                               [&](std::size_t p) { return chosen[p] != 0; });
    if (allowed) {
      chosen[i] = 1;
      self(self, pos + 1);
      chosen[i] = 0;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Cube> capsid(ColorSet K, bool standard_side) {
  std::vector<Cube> cubes;
  for (ColorSet T : packet(K)) {
    int i = (K - T).min();
    bool odd = K.count_above(i) % 2 == 1;
    cubes.push_back({odd == standard_side ? ColorSet{i} : ColorSet{}, T});
  }
  return cubes;
}

namespace {

/// Returns the common outer root when the cubes inside K match one capsid tiling.
std::optional<Flip> flip_at(const Cubillage& Q, ColorSet K) {
  std::vector<Cube> local;
  ColorSet base;
  bool first = true;
  for (ColorSet T : packet(K)) {
    const Cube* c = Q.find(T);
    if (c == nullptr) return std::nullopt;
    ColorSet outer = c->root - K;
    if (first) {
      base = outer;
      first = false;
    } else if (outer != base) {
      return std::nullopt;
    }
    local.push_back({c->root & K, T});
  }
  if (local == capsid(K, true)) return Flip{K, FlipDirection::raising, base};
  if (local == capsid(K, false)) return Flip{K, FlipDirection::lowering, base};
  return std::nullopt;
}

}  // namespace

std::vector<Flip> find_flips(const Cubillage& Q) {
  std::vector<Flip> out;
  for (ColorSet K : grassmannian(Q.colors(), Q.dim() + 1)) {
    if (auto f = flip_at(Q, K)) out.push_back(*f);
  }
  return out;
}

Cubillage apply_flip(const Cubillage& Q, ColorSet parent) {
  if (parent.size() != Q.dim() + 1 || !parent.subset_of(Q.colors())) {
    throw InvalidArgument("flip parent " + parent.label() + " must be a (d+1)-subset of the colors");
  }
  auto f = flip_at(Q, parent);
  if (!f) throw InvalidArgument("the cubes inside " + parent.label() + " do not form a flippable capsid");
  std::vector<Cube> cubes;
  for (const Cube& c : Q.cubes()) {
    if (!c.type.subset_of(parent)) cubes.push_back(c);
  }
  for (const Cube& c : capsid(parent, f->direction == FlipDirection::lowering)) {
    cubes.push_back({c.root | f->base, c.type});
  }
  return Cubillage(Q.colors(), Q.dim(), std::move(cubes));
}

Cubillage avalanche(const Cubillage& Q) {
  int m = Q.colors().max();
  Reduction r = reduce(Q, m);
  std::vector<ColorSet> all;
  for (const Cube& c : r.cubillage.cubes()) all.push_back(c.type);
  return expand(r.cubillage, all, m);
}

Cubillage antiavalanche(const Cubillage& Q) {
  int m = Q.colors().max();
  Reduction r = reduce(Q, m);
  return expand(r.cubillage, std::span<const ColorSet>{}, m);
}

std::vector<Cubillage> standardize(const Cubillage& Q) {
  std::vector<Cubillage> seq{Q};
  Cubillage cur = Q;
  std::vector<int> elems = Q.colors().elements();
  for (std::size_t k = elems.size(); k > static_cast<std::size_t>(Q.dim()); --k) {
    ColorSet act;
    for (std::size_t j = 0; j < k; ++j) act = act.with(elems[j]);
    cur = splice(cur, avalanche(restrict_to(cur, act)));
    seq.push_back(cur);
  }
  return seq;
}

CanonicalExtension canonical_extension(const Cubillage& Q) {
  const ColorSet C = Q.colors();
  const int dm = Q.dim();
  const int d = dm + 1;
  if (C.size() < d) throw InvalidArgument("canonical extension needs more colors than the dimension");
  std::vector<int> elems = C.elements();
  std::vector<Cube> before, after;

  Cubillage cur = Q;
  for (std::size_t k = elems.size(); k > static_cast<std::size_t>(dm); --k) {
    int m = elems[k - 1];
    ColorSet act;
    for (std::size_t j = 0; j < k; ++j) act = act.with(elems[j]);
    Cubillage sub = restrict_to(cur, act);
    for (const Cube& c : sub.cubes()) {
      if (c.root.contains(m) && !c.type.contains(m)) before.push_back({c.root.without(m), c.type.with(m)});
    }
    cur = splice(cur, avalanche(sub));
  }

  cur = Q;
  ColorSet high;
  for (std::size_t k = elems.size(); k > static_cast<std::size_t>(dm); --k) {
    int m = elems[k - 1];
    ColorSet act;
    for (std::size_t j = 0; j < k; ++j) act = act.with(elems[j]);
    std::vector<Cube> stripped;
    for (const Cube& c : cur.cubes()) {
      if (c.type.subset_of(act)) stripped.push_back({c.root - high, c.type});
    }
    Cubillage sub(act, dm, std::move(stripped));
    for (const Cube& c : sub.cubes()) {
      if (!c.root.contains(m) && !c.type.contains(m)) after.push_back({c.root | high, c.type.with(m)});
    }
    Cubillage moved = antiavalanche(sub);
    std::vector<Cube> lifted;
    for (const Cube& c : moved.cubes()) lifted.push_back({c.root | high, c.type});
    cur = splice(cur, Cubillage(act, dm, std::move(lifted)));
    high = high.with(m);
  }

  std::vector<Cube> all = before;
  all.insert(all.end(), after.begin(), after.end());
  Cubillage ext(C, d, std::move(all));
  require_valid(ext);
  Membrane M;
  for (const Cube& c : Q.cubes()) M.plates.push_back({c.root, c.type});
  std::sort(M.plates.begin(), M.plates.end());
  std::vector<ColorSet> stack = stack_of_membrane(ext, M);
  std::vector<ColorSet> before_types;
  for (const Cube& c : before) before_types.push_back(c.type);
  std::sort(before_types.begin(), before_types.end());
  if (stack != before_types) throw CorruptInput("canonical extension places the membrane incorrectly");
  return {std::move(ext), std::move(M)};
}

std::vector<std::pair<ColorSet, ColorSet>> garland(const Cubillage& Q) {
  const ColorSet C = Q.colors();
  const int d = Q.dim();
  std::map<ColorSet, ColorSet> chord;
  for (const Cube& c : Q.cubes()) {
    std::vector<int> t = c.type.elements();
    ColorSet tail = c.root, head = c.root;
    for (int j = d - 1, step = 0; j >= 0; --j, ++step) {
      if (step % 2 == 0) {
        head = head.with(t[j]);
      } else {
        tail = tail.with(t[j]);
      }
    }
    if (!chord.emplace(tail, head).second) throw CorruptInput("two chords leave vertex " + tail.label());
  }
  auto vertex_set = [&](Side side) {
    Membrane M{boundary_plates(C, d, side)};
    std::vector<ColorSet> v = membrane_vertices(M);
    return std::set<ColorSet>(v.begin(), v.end());
  };
  std::set<ColorSet> front = vertex_set(Side::front);
  std::set<ColorSet> back = vertex_set(Side::back);
  std::vector<std::pair<ColorSet, ColorSet>> out;
  for (ColorSet v : front) {
    ColorSet w = v;
    std::size_t steps = 0;
    while (!back.count(w)) {
      auto it = chord.find(w);
      if (it == chord.end() || ++steps > Q.size()) throw CorruptInput("garland path from " + v.label() + " breaks");
      w = it->second;
    }
    out.emplace_back(v, w);
  }
  return out;
}

Cubillage antipode(const Cubillage& Q) {
  std::vector<Cube> cubes;
  for (const Cube& c : Q.cubes()) cubes.push_back({Q.colors() - c.root - c.type, c.type});
  return Cubillage(Q.colors(), Q.dim(), std::move(cubes));
}

}  // namespace zonocube
