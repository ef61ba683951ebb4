#include "zonocube/systems.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

namespace zonocube {

namespace {

using Bits = boost::dynamic_bitset<>;

void check_universe(std::span<const ColorSet> sets, int n) {
  if (n < 0 || n > ColorSet::kMaxColor) throw InvalidArgument("universe size out of range");
  ColorSet universe = ColorSet::upto(n);
  for (ColorSet s : sets) {
    if (!s.subset_of(universe)) throw InvalidArgument("set " + s.label() + " is not contained in [" + std::to_string(n) + "]");
  }
}

std::vector<ColorSet> sorted_unique(std::span<const ColorSet> sets) {
  std::vector<ColorSet> v(sets.begin(), sets.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw InvalidArgument("set system contains duplicates");
  return v;
}

/// Undirected graph on a vertex list with bitset adjacency rows.
struct Graph {
  std::vector<Bits> adj;
  std::size_t size() const { return adj.size(); }
};

template <class Compatible>
Graph build_graph(const std::vector<ColorSet>& vertices, Compatible compatible) {
  const std::size_t N = vertices.size();
  Graph g{std::vector<Bits>(N, Bits(N))};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      if (compatible(vertices[i], vertices[j])) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
    }
  }
  return g;
}

std::optional<std::vector<std::size_t>> clique_of_size(const Graph& g, std::size_t k) {
  std::vector<std::size_t> R;
  std::optional<std::vector<std::size_t>> found;
  auto rec = [&](auto&& self, Bits P) -> bool {
    if (R.size() == k) {
      found = R;
      return true;
    }
    while (P.any() && R.size() + P.count() >= k) {
      std::size_t v = P.find_first();
      P.reset(v);
      R.push_back(v);
      if (self(self, P & g.adj[v])) return true;
      R.pop_back();
    }
    return false;
  };
  Bits all(g.size());
  all.set();
  rec(rec, all);
  return found;
}

std::uint64_t count_cliques_of_size(const Graph& g, std::size_t k) {
  std::uint64_t count = 0;
  std::size_t depth = 0;
  auto rec = [&](auto&& self, Bits P) -> void {
    if (depth == k) {
      ++count;
      return;
    }
    while (P.any() && depth + P.count() >= k) {
      std::size_t v = P.find_first();
      P.reset(v);
      ++depth;
      self(self, P & g.adj[v]);
      --depth;
    }
  };
  Bits all(g.size());
  all.set();
  rec(rec, all);
  return count;
}

std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> R;
  auto rec = [&](auto&& self, Bits P, Bits X) -> void {
    if (P.none() && X.none()) {
      out.push_back(R);
      return;
    }
    Bits PX = P | X;
    std::size_t pivot = PX.find_first(), best = 0;
    for (std::size_t u = PX.find_first(); u != Bits::npos; u = PX.find_next(u)) {
      std::size_t c = (P & g.adj[u]).count();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
    Bits choices = P - g.adj[pivot];
    for (std::size_t v = choices.find_first(); v != Bits::npos; v = choices.find_next(v)) {
      R.push_back(v);
      self(self, P & g.adj[v], X & g.adj[v]);
      R.pop_back();
      P.reset(v);
      X.set(v);
    }
  };
  Bits all(g.size()), none(g.size());
  all.set();
  rec(rec, all, none);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> maximum_clique(const Graph& g) {
  std::vector<std::size_t> best, R;
  auto rec = [&](auto&& self, Bits P) -> void {
    if (R.size() > best.size()) best = R;
    while (P.any() && R.size() + P.count() > best.size()) {
      std::size_t v = P.find_first();
      P.reset(v);
      R.push_back(v);
      self(self, P & g.adj[v]);
      R.pop_back();
    }
  };
  Bits all(g.size());
  all.set();
  rec(rec, all);
  return best;
}

/// Strict transitive closure of the relations on Gr([n], d), or nullopt on a cycle.
struct Closure {
  std::vector<ColorSet> elems;
  std::unordered_map<ColorSet, std::size_t> index;
  std::vector<Bits> reach;
  bool precedes(ColorSet a, ColorSet b) const { return reach[index.at(a)].test(index.at(b)); }
};

std::optional<Closure> closure_of(const AdmissibleOrder& order, std::string& problem) {
  if (order.d < 1 || order.n < order.d || order.n > ColorSet::kMaxColor) {
    problem = "order dimensions must satisfy 1 <= d <= n";
    return std::nullopt;
  }
  Closure cl;
  cl.elems = grassmannian(ColorSet::upto(order.n), order.d);
  for (std::size_t i = 0; i < cl.elems.size(); ++i) cl.index[cl.elems[i]] = i;
  const std::size_t N = cl.elems.size();
  std::vector<std::vector<std::size_t>> succ(N);
  std::vector<std::size_t> indeg(N, 0);
  for (const auto& [a, b] : order.relations) {
    auto ia = cl.index.find(a), ib = cl.index.find(b);
    if (ia == cl.index.end() || ib == cl.index.end()) {
      problem = "relation " + a.label() + " < " + b.label() + " leaves Gr([n],d)";
      return std::nullopt;
    }
    succ[ia->second].push_back(ib->second);
    ++indeg[ib->second];
  }
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < N; ++i) {
    if (indeg[i] == 0) ready.push_back(i);
  }
  std::vector<std::size_t> topo;
  while (!ready.empty()) {
    std::size_t i = ready.front();
    ready.pop_front();
    topo.push_back(i);
    for (std::size_t j : succ[i]) {
      if (--indeg[j] == 0) ready.push_back(j);
    }
  }
  if (topo.size() != N) {
    problem = "relations contain a cycle";
    return std::nullopt;
  }
  cl.reach.assign(N, Bits(N));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (std::size_t j : succ[*it]) {
      cl.reach[*it] |= cl.reach[j];
      cl.reach[*it].set(j);
    }
  }
  return cl;
}

/// For each parent K, whether its packet is ordered antilexicographically; empty string on success.
std::string packet_orientations(const Closure& cl, int n, int d, std::set<ColorSet>& antilex) {
  for (ColorSet K : grassmannian(ColorSet::upto(n), d + 1)) {
    std::vector<ColorSet> p = packet(K);
    bool lex = true, anti = true;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      lex = lex && cl.precedes(p[i], p[i + 1]);
      anti = anti && cl.precedes(p[i + 1], p[i]);
    }
    if (!lex && !anti) return "packet of " + K.label() + " is neither lexicographic nor antilexicographic";
    if (anti) antilex.insert(K);
  }
  return {};
}

Cubillage single_cube(int d) { return Cubillage(ColorSet::upto(d), d, {Cube{ColorSet{}, ColorSet::upto(d)}}); }

/// Cubillage with the given inversion set, built one color at a time.
Cubillage from_inversion_set(const std::set<ColorSet>& inv, int n, int d) {
  if (n == d) return single_cube(d);
  std::set<ColorSet> lower;
  for (ColorSet K : inv) {
    if (!K.contains(n)) lower.insert(K);
  }
  Cubillage Qp = from_inversion_set(lower, n - 1, d);
  std::vector<ColorSet> stack;
  for (const Cube& c : Qp.cubes()) {
    if (!inv.count(c.type.with(n))) stack.push_back(c.type);
  }
  if (!is_stack(Qp, stack)) {
    throw NotRealizable("not admissible: the lexicographic packets through " + std::to_string(n) +
                        " do not form an ideal");
  }
  return expand(Qp, stack, n);
}

Cubillage spectra_recursive(const std::vector<ColorSet>& S, int k, int d) {
  if (k == d) {
    if (S != all_subsets(ColorSet::upto(d))) throw NotRealizable("base system is not the power set of [d]");
    return single_cube(d);
  }
  std::set<ColorSet> s0, s2;
  for (ColorSet X : S) (X.contains(k) ? s2 : s0).insert(X.without(k));
  std::vector<ColorSet> uni, inter;
  std::set_union(s0.begin(), s0.end(), s2.begin(), s2.end(), std::back_inserter(uni));
  std::set_intersection(s0.begin(), s0.end(), s2.begin(), s2.end(), std::back_inserter(inter));
  if (uni.size() != binomial_upto(k - 1, d) || inter.size() != binomial_upto(k - 1, d - 1)) {
    throw NotRealizable("splitting by color " + std::to_string(k) + " gives systems of the wrong size");
  }
  Cubillage Qp = spectra_recursive(uni, k - 1, d);
  std::vector<ColorSet> stack;
  if (d == 1) {
    for (const Cube& c : Qp.cubes()) {
      if (side_of_membrane(c.type, inter) == MembraneSide::before) stack.push_back(c.type);
    }
  } else {
    Cubillage Mc = spectra_recursive(inter, k - 1, d - 1);
    Membrane M;
    for (const Cube& c : Mc.cubes()) M.plates.push_back({c.root, c.type});
    std::sort(M.plates.begin(), M.plates.end());
    try {
      stack = stack_of_membrane(Qp, M);
    } catch (const InvalidArgument& e) {
      throw NotRealizable(std::string("membrane step failed: ") + e.what());
    }
  }
  Cubillage Q = expand(Qp, stack, k);
  if (vertex_spectra(Q) != S) throw NotRealizable("expanded cubillage has different spectra");
  return Q;
}

MembraneRealization consistent_recursive(const std::vector<ColorSet>& S, int n, int d) {
  if (n == d) {
    Cubillage Q = single_cube(d);
    Membrane M = membrane_of_stack(Q, S);
    return {Q, M, membrane_cubillage(M, Q.colors(), d)};
  }
  std::vector<ColorSet> lower;
  for (ColorSet T : S) {
    if (!T.contains(n)) lower.push_back(T);
  }
  MembraneRealization prev = consistent_recursive(lower, n - 1, d);
  Cubillage Qp = canonical_extension(prev.cubillage).cubillage;
  Cubillage Q = expand(Qp, lower, n);
  if (!is_stack(Q, S)) throw NotRealizable("the set is not a stack of the expanded cubillage");
  Membrane M = membrane_of_stack(Q, S);
  return {Q, M, membrane_cubillage(M, Q.colors(), d)};
}

}  // namespace

SetSystem::SetSystem(int n_, std::vector<ColorSet> sets_) : n(n_), sets(std::move(sets_)) {
  check_universe(sets, n);
  sets = sorted_unique(sets);
}

SetSystem spectra(const Cubillage& Q) {
  return SetSystem(Q.colors().empty() ? 0 : Q.colors().max(), vertex_spectra(Q));
}

AdmissibleOrder order_of(const Cubillage& Q) {
  NaturalOrder order(Q);
  AdmissibleOrder out{Q.colors().empty() ? 0 : Q.colors().max(), Q.dim(), {}};
  for (auto [a, b] : order.covers()) out.relations.emplace_back(order.type(a), order.type(b));
  std::sort(out.relations.begin(), out.relations.end());
  return out;
}

Diagnostic is_admissible(const AdmissibleOrder& order) {
  std::string problem;
  auto cl = closure_of(order, problem);
  if (!cl) return Diagnostic::failure("admissible-order", problem);
  std::set<ColorSet> antilex;
  problem = packet_orientations(*cl, order.n, order.d, antilex);
  if (!problem.empty()) return Diagnostic::failure("admissible-order", problem);
  return Diagnostic::success();
}

std::vector<ColorSet> inversions(const Cubillage& Q) {
  std::vector<ColorSet> out;
  for (ColorSet K : grassmannian(Q.colors(), Q.dim() + 1)) {
    int m = K.max();
    if (Q.at(K.without(m)).root.contains(m)) out.push_back(K);
  }
  return out;
}

bool is_consistent(std::span<const ColorSet> S, int n, int d) {
  check_universe(S, n);
  for (ColorSet s : S) {
    if (s.size() != d) throw InvalidArgument("consistent-set members must all have " + std::to_string(d) + " elements");
  }
  std::unordered_set<ColorSet> members(S.begin(), S.end());
  for (ColorSet K : grassmannian(ColorSet::upto(n), d + 1)) {
    std::vector<ColorSet> p = packet(K);
    std::size_t changes = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (members.count(p[i]) != members.count(p[i + 1])) ++changes;
    }
    if (changes > 1) return false;
  }
  return true;
}

bool is_r_separated_system(std::span<const ColorSet> sets, int r) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!is_r_separated(sets[i], sets[j], r)) return false;
    }
  }
  return true;
}

bool is_weakly_separated_system(std::span<const ColorSet> sets, int k) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!is_weakly_k_separated(sets[i], sets[j], k)) return false;
    }
  }
  return true;
}

Cubillage from_spectra(std::span<const ColorSet> sets, int n, int d) {
  if (d < 1 || n < d) throw InvalidArgument("need 1 <= d <= n");
  check_universe(sets, n);
  std::vector<ColorSet> S = sorted_unique(sets);
  if (S.size() != binomial_upto(n, d)) {
    throw InvalidArgument("a spectrum of Z(" + std::to_string(n) + "," + std::to_string(d) + ") has " +
                          std::to_string(binomial_upto(n, d)) + " members, got " + std::to_string(S.size()));
  }
  if (!is_r_separated_system(S, d - 1)) throw InvalidArgument("the system is not (d-1)-separated");
  Cubillage Q = spectra_recursive(S, n, d);
  Diagnostic diag = validate(Q);
  if (!diag) throw NotRealizable("reconstruction is not a cubillage: " + diag.message());
  return Q;
}

MembraneRealization from_consistent(std::span<const ColorSet> S, int n, int d) {
  if (d < 2 || n < d) throw InvalidArgument("from_consistent needs 2 <= d <= n");
  std::vector<ColorSet> sorted = sorted_unique(S);
  if (!is_consistent(sorted, n, d)) throw InvalidArgument("the set is not consistent");
  MembraneRealization out = consistent_recursive(sorted, n, d);
  if (inversions(out.cubillage) != sorted) throw NotRealizable("membrane inversions differ from the input");
  return out;
}

Cubillage from_order(const AdmissibleOrder& order) {
  std::string problem;
  auto cl = closure_of(order, problem);
  if (!cl) throw NotRealizable("not admissible: " + problem);
  std::set<ColorSet> antilex;
  problem = packet_orientations(*cl, order.n, order.d, antilex);
  if (!problem.empty()) throw NotRealizable("not admissible: " + problem);
  Cubillage Q = from_inversion_set(antilex, order.n, order.d);
  NaturalOrder nat(Q);
  for (auto [a, b] : nat.covers()) {
    if (!cl->precedes(nat.type(a), nat.type(b))) {
      throw NotRealizable("not admissible: the order does not extend the natural order of its cubillage");
    }
  }
  return Q;
}

ExtensionResult extension_search(std::span<const ColorSet> sets, int n, int d, ExtensionMode mode) {
  if (d < 1 || n < d) throw InvalidArgument("need 1 <= d <= n");
  check_universe(sets, n);
  std::vector<ColorSet> S = sorted_unique(sets);
  if (!is_r_separated_system(S, d - 1)) throw InvalidArgument("input system is not (d-1)-separated");
  ExtensionResult res;
  res.n = n;
  res.d = d;
  res.target = binomial_upto(n, d);
  std::set<ColorSet> base(S.begin(), S.end());
  for (ColorSet X : peripheral_sets(n, d)) base.insert(X);
  res.base.assign(base.begin(), base.end());
  for (ColorSet X : all_subsets(ColorSet::upto(n))) {
    if (base.count(X)) continue;
    bool ok = std::all_of(S.begin(), S.end(), [&](ColorSet Y) { return is_r_separated(X, Y, d - 1); });
    if (ok) res.candidates.push_back(X);
  }
  Graph g = build_graph(res.candidates, [&](ColorSet a, ColorSet b) { return is_r_separated(a, b, d - 1); });
  auto assemble = [&](const std::vector<std::size_t>& picks) {
    std::vector<ColorSet> out = res.base;
    for (std::size_t i : picks) out.push_back(res.candidates[i]);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::size_t need = res.target >= res.base.size() ? res.target - res.base.size() : 0;
  if (mode == ExtensionMode::complete) {
    if (res.base.size() <= res.target) {
      if (auto c = clique_of_size(g, need)) res.completion = assemble(*c);
    }
    res.completable = res.completion.has_value();
  } else {
    for (const auto& c : maximal_cliques(g)) {
      res.maximal_extensions.push_back(assemble(c));
      if (res.maximal_extensions.back().size() == res.target) res.completable = true;
    }
    std::sort(res.maximal_extensions.begin(), res.maximal_extensions.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  }
  return res;
}

std::uint64_t count_maximum_separated_systems(int n, int d) {
  if (d < 1 || n < d) throw InvalidArgument("need 1 <= d <= n");
  std::vector<ColorSet> inner;
  std::size_t peripheral = 0;
  for (ColorSet X : all_subsets(ColorSet::upto(n))) {
    if (is_peripheral(X, n, d)) {
      ++peripheral;
    } else {
      inner.push_back(X);
    }
  }
  Graph g = build_graph(inner, [&](ColorSet a, ColorSet b) { return is_r_separated(a, b, d - 1); });
  return count_cliques_of_size(g, binomial_upto(n, d) - peripheral);
}

WeakSeparationReport weak_separation_suite(int n, int k) {
  if (k < 1 || k % 2 == 0) throw InvalidArgument("weak separation is defined for odd k only");
  if (n < 1 || n > 10) throw Unsupported("exhaustive weak separation search supports 1 <= n <= 10");
  WeakSeparationReport rep;
  rep.n = n;
  rep.k = k;
  rep.bound = binomial_upto(n, k + 1);
  std::vector<ColorSet> inner;
  for (ColorSet X : all_subsets(ColorSet::upto(n))) {
    if (is_peripheral(X, n, k + 1)) {
      rep.witness.push_back(X);
    } else {
      inner.push_back(X);
    }
  }
  Graph g = build_graph(inner, [&](ColorSet a, ColorSet b) { return is_weakly_k_separated(a, b, k); });
  for (std::size_t i : maximum_clique(g)) rep.witness.push_back(inner[i]);
  std::sort(rep.witness.begin(), rep.witness.end());
  rep.maximum = rep.witness.size();
  return rep;
}

std::vector<ColorSet> weak_extension_candidates(std::span<const ColorSet> sets, int n, int k) {
  if (k < 1 || k % 2 == 0) throw InvalidArgument("weak separation is defined for odd k only");
  check_universe(sets, n);
  std::set<ColorSet> current(sets.begin(), sets.end());
  for (ColorSet X : peripheral_sets(n, k + 1)) current.insert(X);
  std::vector<ColorSet> out;
  for (ColorSet X : all_subsets(ColorSet::upto(n))) {
    if (current.count(X)) continue;
    bool ok = std::all_of(current.begin(), current.end(), [&](ColorSet Y) { return is_weakly_k_separated(X, Y, k); });
    if (ok) out.push_back(X);
  }
  return out;
}

}  // namespace zonocube
