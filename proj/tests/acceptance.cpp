#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "support/oracles.hpp"
#include "zonocube/bruhat.hpp"
#include "zonocube/geom.hpp"
#include "zonocube/order.hpp"
#include "zonocube/systems.hpp"

using namespace zonocube;

namespace {

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && ok_) {
      ok_ = false;
      first_ = what;
    }
  }
  bool ok() const { return ok_; }
  std::size_t checks() const { return checks_; }
  const std::string& first_failure() const { return first_; }

 private:
  bool ok_ = true;
  std::size_t checks_ = 0;
  std::string first_;
};

std::string show(ColorSet s) { return s.label(); }

std::string case_name(int n, int d) { return "(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

const std::vector<std::pair<int, int>> kEnumerated = {{3, 2}, {4, 2}, {5, 2}, {6, 2}, {4, 3}, {5, 3},
                                                      {6, 3}, {5, 4}, {6, 4}, {6, 5}, {7, 5}};

std::vector<Cubillage> sample_cubillages(int n, int d, std::mt19937& rng) {
  std::vector<Cubillage> out{standard(n, d), antistandard(n, d)};
  if (n > d) {
    for (int i = 0; i < 3; ++i) out.push_back(oracle::random_flip_walk(n, d, 6 + 5 * i, rng));
  }
  return out;
}

void counting_identities(Check& c) {
  std::mt19937 rng(20240601);
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= std::min(4, n); ++d) {
      ColorSet C = ColorSet::upto(n);
      const std::string where = case_name(n, d);
      std::uint64_t peripheral = 2 * binomial_upto(n - 1, d - 1);
      c.expect(peripheral_sets(n, d).size() == peripheral, where + " peripheral set count");
      for (const Cubillage& Q : sample_cubillages(n, d, rng)) {
        c.expect(validate(Q).ok, where + " validate");
        c.expect(Q.size() == binomial(n, d), where + " cube count");
        auto spectra = vertex_spectra(Q);
        c.expect(spectra.size() == binomial_upto(n, d), where + " vertex count");
        std::set<ColorSet> vertices(spectra.begin(), spectra.end());

        auto front = boundary_plates(C, d, Side::front);
        auto back = boundary_plates(C, d, Side::back);
        c.expect(front.size() == binomial(n, d - 1) && back.size() == binomial(n, d - 1), where + " boundary plates");
        std::set<ColorSet> boundary;
        for (const auto* side : {&front, &back}) {
          for (const Facet& f : *side) {
            for (ColorSet s : all_subsets(f.type)) boundary.insert(f.root | s);
          }
        }
        c.expect(boundary.size() == peripheral, where + " peripheral vertices");
        for (ColorSet v : boundary) {
          c.expect(vertices.count(v) == 1, where + " boundary vertex " + show(v) + " is a vertex");
          c.expect(is_peripheral(v, n, d), where + " boundary vertex " + show(v) + " is peripheral");
        }

        for (int i = 1; i <= n; ++i) {
          auto part = std::count_if(Q.cubes().begin(), Q.cubes().end(), [&](const Cube& q) { return q.type.contains(i); });
          c.expect(static_cast<std::uint64_t>(part) == binomial(n - 1, d - 1), where + " partition size");
        }
        for (ColorSet D : grassmannian(C, d - 1)) {
          auto len = std::count_if(Q.cubes().begin(), Q.cubes().end(), [&](const Cube& q) { return D.subset_of(q.type); });
          c.expect(len == n - d + 1, where + " tunnel length for " + show(D));
        }
      }
    }
  }
}

void enumeration_counts(Check& c) {
  for (int d = 1; d <= 5; ++d) c.expect(oracle::cubillages(d + 1, d).size() == 2, "capsid count " + case_name(d + 1, d));
  c.expect(oracle::cubillages(4, 2).size() == 8, "Q(4,2) = 8");
  c.expect(oracle::cubillages(5, 3).size() == 10, "Q(5,3) = 10");
  c.expect(oracle::cubillages(6, 4).size() == 12, "Q(6,4) = 12");
  for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}, {6, 3}, {6, 4}}) {
    std::uint64_t flips = oracle::cubillages(n, d).size();
    c.expect(flips == oracle::count_maximum_separated(n, d), case_name(n, d) + " flip count vs backtracking oracle");
    c.expect(flips == count_maximum_separated_systems(n, d), case_name(n, d) + " flip count vs library clique count");
  }
}

void poset_structure(Check& c) {
  for (auto [n, d] : kEnumerated) {
    const std::string where = case_name(n, d);
    BruhatPoset P = bruhat_poset(n, d);
    c.expect(P.is_graded(), where + " graded");
    std::vector<std::vector<ColorSet>> inv;
    for (const Cubillage& Q : P.elements) inv.push_back(inversions(Q));
    for (std::size_t i = 0; i < P.elements.size(); ++i) c.expect(P.rank[i] == inv[i].size(), where + " rank is |Inv|");
    std::set<std::vector<ColorSet>> distinct(inv.begin(), inv.end());
    c.expect(distinct.size() == inv.size(), where + " Inv injective");
    std::vector<int> down(P.elements.size()), up(P.elements.size());
    for (auto [lo, hi] : P.covers) {
      ++up[lo];
      ++down[hi];
      c.expect(std::includes(inv[hi].begin(), inv[hi].end(), inv[lo].begin(), inv[lo].end()) &&
                   inv[hi].size() == inv[lo].size() + 1,
               where + " covers extend Inv by one set");
    }
    c.expect(std::count(down.begin(), down.end(), 0) == 1 && down[P.minimum()] == 0, where + " unique minimum");
    c.expect(std::count(up.begin(), up.end(), 0) == 1 && up[P.maximum()] == 0, where + " unique maximum");
    c.expect(P.elements[P.minimum()] == standard(n, d), where + " minimum is standard");
    c.expect(P.elements[P.maximum()] == antistandard(n, d), where + " maximum is antistandard");
    c.expect(P.is_lattice() == !(n == 6 && d == 2), where + " lattice property");
  }
}

std::vector<ColorSet> sets(const std::string& words) {
  std::vector<ColorSet> out;
  std::stringstream ss(words);
  std::string w;
  while (ss >> w) {
    std::vector<int> cs;
    for (char ch : w) cs.push_back(ch - '0');
    out.push_back(ColorSet::from_sequence(cs));
  }
  return out;
}

std::vector<ColorSet> oracle_candidates(const std::vector<ColorSet>& base, int n, int r) {
  std::vector<ColorSet> out;
  for (ColorSet X : all_subsets(ColorSet::upto(n))) {
    if (std::find(base.begin(), base.end(), X) != base.end()) continue;
    if (std::all_of(base.begin(), base.end(), [&](ColorSet Y) { return oracle::r_separated(X, Y, r); })) out.push_back(X);
  }
  return out;
}

void purity(Check& c) {
  auto S = sets("246 235 136");
  auto certify = [&](const std::vector<ColorSet>& seed, int n, int d, std::size_t expected_base) {
    const std::string where = case_name(n, d);
    ExtensionResult r = extension_search(seed, n, d, ExtensionMode::certify_maximal);
    c.expect(r.target == binomial_upto(n, d), where + " target");
    c.expect(r.base.size() == expected_base, where + " base size " + std::to_string(r.base.size()));
    c.expect(!r.completable && !r.completion, where + " not completable");
    c.expect(!r.maximal_extensions.empty(), where + " maximal extensions listed");
    c.expect(oracle_candidates(r.base, n, d - 1) == r.candidates, where + " candidates agree with the oracle");
    for (const auto& ext : r.maximal_extensions) {
      c.expect(ext.size() < r.target, where + " maximal extension below target");
      for (std::size_t i = 0; i < ext.size(); ++i) {
        for (std::size_t j = i + 1; j < ext.size(); ++j) {
          c.expect(oracle::r_separated(ext[i], ext[j], d - 1), where + " extension is separated");
        }
      }
      c.expect(oracle_candidates(ext, n, d - 1).empty(), where + " extension is maximal by inclusion");
    }
    return r;
  };
  auto r64 = certify(S, 6, 4, 55);
  c.expect(r64.candidates.empty() && r64.maximal_extensions.size() == 1 && r64.maximal_extensions[0].size() == 55,
           "(6,4) system is itself maximal at 55");
  c.expect(binomial_upto(6, 4) == 57, "C(6,<=4) = 57");
  certify(S, 7, 4, 87);
  auto lifted = S;
  for (ColorSet X : S) lifted.push_back(X.with(7));
  auto r75 = certify(lifted, 7, 5, 118);
  c.expect(r75.candidates.empty(), "(7,5) lift has no candidates");
}
bool oracle_weak(ColorSet X, ColorSet Y, int k) {
  int m = oracle::longest_alternation(X, Y);
  if (m <= k + 1) return true;
  if (m > k + 2) return false;
  ColorSet diff = X ^ Y;
  bool x_surrounds = X.contains(diff.min());
  return x_surrounds ? X.size() <= Y.size() : Y.size() <= X.size();
}

void weak_separation(Check& c) {
  for (int k : {1, 3}) {
    for (int n = k + 1; n <= 6; ++n) {
      WeakSeparationReport r = weak_separation_suite(n, k);
      c.expect(r.bound == binomial_upto(n, k + 1), "weak bound formula n=" + std::to_string(n));
      c.expect(r.within_bound(), "weak bound n=" + std::to_string(n) + " k=" + std::to_string(k));
      c.expect(r.witness.size() == r.maximum, "weak witness size");
      for (std::size_t i = 0; i < r.witness.size(); ++i) {
        for (std::size_t j = i + 1; j < r.witness.size(); ++j) {
          c.expect(oracle_weak(r.witness[i], r.witness[j], k), "weak witness pairwise separated");
        }
      }
    }
  }
  auto closure = [](std::vector<ColorSet> seed) {
    for (ColorSet P : peripheral_sets(6, 4)) {
      if (std::find(seed.begin(), seed.end(), P) == seed.end()) seed.push_back(P);
    }
    return seed;
  };
  auto extensions = [&](const std::vector<ColorSet>& base) {
    std::vector<ColorSet> out;
    for (ColorSet X : all_subsets(ColorSet::upto(6))) {
      if (std::find(base.begin(), base.end(), X) != base.end()) continue;
      if (std::all_of(base.begin(), base.end(), [&](ColorSet Y) { return oracle_weak(X, Y, 3); })) out.push_back(X);
    }
    return out;
  };
  auto witness = sets("25 1356 1246");
  auto full = closure(witness);
  c.expect(is_weakly_separated_system(full, 3), "witness triple with periphery is weakly 3-separated");
  c.expect(full.size() == 55, "witness system has 55 sets");
  c.expect(weak_extension_candidates(witness, 6, 3).empty(), "witness admits no weak extension");
  c.expect(extensions(full).empty(), "oracle: witness admits no weak extension");
  auto clock = sets("246 235 136");
  c.expect(weak_extension_candidates(clock, 6, 3) == sets("146 245"), "clock triple extends weakly by 146, 245");
  c.expect(extensions(closure(clock)) == sets("146 245"), "oracle: clock triple extensions");
}

void reconstruction(Check& c) {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}}) {
    const std::string where = case_name(n, d);
    for (const Cubillage& Q : oracle::cubillages(n, d)) {
      c.expect(from_spectra(vertex_spectra(Q), n, d) == Q, where + " from_spectra");
      c.expect(from_order(order_of(Q)) == Q, where + " from_order");
      auto inv = inversions(Q);
      MembraneRealization r = from_consistent(inv, n, d + 1);
      c.expect(inversions(r.cubillage) == inv, where + " Inv of from_consistent");
      c.expect(r.cubillage == Q, where + " from_consistent recovers the cubillage");
      c.expect(validate(r.ambient).ok, where + " ambient witness valid");
    }
  }
}

void sign_rule(Check& c) {
  const std::vector<std::vector<long long>> params = {
      {1, 2, 3, 4, 5, 6, 7, 8},
      {-7, -3, -2, 0, 1, 4, 9, 15},
      {2, 3, 5, 7, 11, 13, 17, 19},
      {-10, -9, -5, -1, 2, 6, 7, 12},
  };
  for (const auto& t : params) {
    Realization R(t);
    for (int n = 1; n <= 8; ++n) {
      ColorSet C = ColorSet::upto(n);
      for (int d = 1; d <= std::min(5, n); ++d) {
        for (ColorSet J : grassmannian(C, d - 1)) {
          for (int i : C - J) {
            std::vector<int> cols = J.elements();
            cols.push_back(i);
            int expected = parity(i, J) == Parity::even ? 1 : -1;
            c.expect(oracle::column_sign(cols, t) == expected, "oracle determinant sign for " + show(J) + "," + std::to_string(i));
            c.expect(det_sign(J, i, R) == expected, "library det_sign for " + show(J) + "," + std::to_string(i));
          }
        }
      }
    }
  }
}

void order_laws(Check& c) {
  for (int n = 2; n <= 6; ++n) {
    for (int d = 1; d < n; ++d) {
      std::vector<Cube> all;
      for (const Cubillage& Q : oracle::cubillages(n, d)) all.insert(all.end(), Q.cubes().begin(), Q.cubes().end());
      c.expect(!oracle::has_cycle(all), "acyclic on the union of cubes " + case_name(n, d));
    }
  }
  for (auto [n, d] : kEnumerated) {
    const std::string where = case_name(n, d);
    for (const Cubillage& Q : oracle::cubillages(n, d)) {
      NaturalOrder O(Q);
      c.expect(O.topological_order().size() == Q.size(), where + " order is acyclic");

      Cubillage K = contract(Q, n);
      NaturalOrder OK(K);
      for (auto [lo, hi] : O.covers()) {
        ColorSet a = O.type(lo), b = O.type(hi);
        if (a.contains(n) && b.contains(n)) {
          c.expect(OK.precedes(b.without(n), a.without(n)), where + " reversal on the top partition");
        }
      }

      for (int i = 1; i <= n; ++i) {
        Cubillage R = reduce(Q, i).cubillage;
        NaturalOrder OR(R);
        for (std::size_t a = 0; a < OR.size(); ++a) {
          for (std::size_t b = 0; b < OR.size(); ++b) {
            if (OR.precedes(a, b)) c.expect(O.precedes(OR.type(a), OR.type(b)), where + " reduction order is weaker");
          }
        }
      }

      for (ColorSet P : grassmannian(Q.colors(), d + 1)) {
        auto pk = packet(P);
        bool lex = true, antilex = true;
        for (std::size_t j = 0; j + 1 < pk.size(); ++j) {
          lex = lex && O.precedes(pk[j], pk[j + 1]);
          antilex = antilex && O.precedes(pk[j + 1], pk[j]);
        }
        c.expect(lex || antilex, where + " packet of " + show(P) + " is a chain");
      }
    }
  }
  for (int d = 1; d <= 5; ++d) {
    NaturalOrder S(standard(d + 1, d));
    NaturalOrder A(antistandard(d + 1, d));
    auto pk = packet(ColorSet::upto(d + 1));
    for (std::size_t j = 0; j + 1 < pk.size(); ++j) {
      c.expect(S.precedes(pk[j], pk[j + 1]), "standard capsid is lex");
      c.expect(A.precedes(pk[j + 1], pk[j]), "antistandard capsid is antilex");
    }
  }
  NaturalOrder Z65(standard(6, 5));
  std::vector<ColorSet> chain;
  for (std::size_t i : Z65.topological_order()) chain.push_back(Z65.type(i));
  c.expect(chain == sets("12345 12346 12356 12456 13456 23456"), "quoted Z(6,5) chain");
  c.expect(Z65.covers().size() == 15, "every pair of Z(6,5) capsid cubes is facet-adjacent");
}

std::map<ColorSet, ColorSet> garland_map(const Cubillage& Q) {
  std::map<ColorSet, ColorSet> m;
  for (auto [a, b] : garland(Q)) m[a] = b;
  return m;
}

void garlands(Check& c) {
  auto gs = garland_map(standard(4, 3));
  auto ga = garland_map(antistandard(4, 3));
  auto s = [](const char* w) { return sets(w).front(); };
  c.expect(gs[s("2")] == s("124") && gs[s("3")] == s("14") && gs[s("23")] == s("134"), "standard garland table");
  c.expect(ga[s("2")] == s("14") && ga[s("3")] == s("134") && ga[s("23")] == s("124"), "antistandard garland table");
  ColorSet C = ColorSet::upto(4);
  for (const Cubillage& Q : oracle::cubillages(4, 3)) {
    auto g = garland_map(Q);
    std::map<ColorSet, ColorSet> inverse;
    for (auto [a, b] : g) inverse[b] = a;
    c.expect(inverse.size() == g.size(), "garland is a bijection");
    auto ga2 = garland_map(antipode(Q));
    c.expect(validate(antipode(Q)).ok, "antipode is a cubillage");
    for (auto [X, Y] : ga2) {
      auto it = inverse.find(C - X);
      c.expect(it != inverse.end() && Y == C - it->second, "conjugation law at " + show(X));
    }
  }
}

std::vector<std::vector<oracle::i128>> simplex_columns(ColorSet T) {
  std::vector<std::vector<oracle::i128>> rows(3, std::vector<oracle::i128>(3));
  int col = 0;
  for (int i : T) {
    auto v = oracle::moment(i, 3);
    for (int r = 0; r < 3; ++r) rows[r][col] = v[r];
    ++col;
  }
  return rows;
}

void triangulations(Check& c) {
  for (int n : {5, 6}) {
    const std::string where = case_name(n, 3);
    std::set<std::vector<ColorSet>> image;
    for (const Cubillage& Q : oracle::cubillages(n, 3)) {
      Triangulation T = sec(Q);
      c.expect(check_triangulation(T).ok, where + " library triangulation check");
      c.expect(T.simplices.size() == static_cast<std::size_t>(n - 2), where + " n-2 triangles");
      oracle::i128 vol = 0;
      std::vector<oracle::Polygon> tris;
      for (ColorSet S : T.simplices) {
        oracle::i128 dt = oracle::det(simplex_columns(S));
        vol += dt < 0 ? -dt : dt;
        oracle::Polygon p;
        for (int i : S) p.push_back({i, i * i});
        tris.push_back(p);
      }
      c.expect(vol == oracle::parabola_polygon_twice_area(n), where + " exact volume equals polygon area");
      for (std::size_t i = 0; i < tris.size(); ++i) {
        for (std::size_t j = i + 1; j < tris.size(); ++j) c.expect(!oracle::interiors_overlap(tris[i], tris[j]), where + " triangles disjoint");
      }
      image.insert(T.simplices);
    }
    auto all = oracle::polygon_triangulations(n);
    c.expect(std::set<std::vector<ColorSet>>(all.begin(), all.end()) == image, where + " image is every triangulation");
    c.expect(image.size() == (n == 5 ? 5U : 14U), where + " Catalan count");
  }
}

bool is_lower_set_family(const std::vector<std::vector<ColorSet>>& stacks, const std::vector<ColorSet>& s) {
  return std::find(stacks.begin(), stacks.end(), s) != stacks.end();
}

void property_suites(Check& c) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}, {6, 3}}) {
    const auto& membranes = oracle::cubillages(n, m);
    std::vector<std::vector<ColorSet>> inv, spectra_of;
    for (const Cubillage& M : membranes) {
      inv.push_back(inversions(M));
      spectra_of.push_back(vertex_spectra(M));
    }
    for (std::size_t a = 0; a < membranes.size(); ++a) {
      for (std::size_t b = 0; b < membranes.size(); ++b) {
        if (a == b || !std::includes(inv[b].begin(), inv[b].end(), inv[a].begin(), inv[a].end())) continue;
        std::set<ColorSet> u(spectra_of[a].begin(), spectra_of[a].end());
        u.insert(spectra_of[b].begin(), spectra_of[b].end());
        std::vector<ColorSet> all(u.begin(), u.end());
        bool ok = true;
        for (std::size_t i = 0; i < all.size() && ok; ++i) {
          for (std::size_t j = i + 1; j < all.size() && ok; ++j) ok = oracle::r_separated(all[i], all[j], m);
        }
        c.expect(ok, "spectra union separated for nested membranes " + case_name(n, m + 1));
      }
    }
  }

  for (auto [n, d] : kEnumerated) {
    ColorSet C = ColorSet::upto(n);
    for (const Cubillage& Q : oracle::cubillages(n, d)) {
      EdgeGraph G = edge_graph(Q);
      for (const Edge& e : G.edges) c.expect(!e.tail.contains(e.color), "edges add a new color");
      for (ColorSet v : G.vertices) {
        if (v != C) c.expect(!G.outgoing[v].empty(), "every vertex below the top continues a snake");
      }
      if (n <= 5) {
        std::function<void(ColorSet, std::vector<int>&)> walk = [&](ColorSet v, std::vector<int>& used) {
          const auto& out = G.outgoing[v];
          if (out.empty()) {
            std::vector<int> sorted = used;
            std::sort(sorted.begin(), sorted.end());
            c.expect(v == C && sorted == C.elements(), "snake colors are a bijection onto [n]");
            return;
          }
          for (int idx : out) {
            used.push_back(G.edges[idx].color);
            walk(v.with(G.edges[idx].color), used);
            used.pop_back();
          }
        };
        std::vector<int> used;
        walk(ColorSet{}, used);
      }
    }
  }

  for (const Cubillage& Q : oracle::cubillages(4, 2)) {
    auto stacks = enumerate_membranes(Q);
    for (const auto& s : stacks) {
      for (const auto& t : stacks) {
        std::vector<ColorSet> u, i;
        std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
        std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(i));
        c.expect(is_lower_set_family(stacks, u) && is_lower_set_family(stacks, i), "stacks closed under union and intersection");
      }
    }
  }

  for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 2}, {5, 3}, {6, 3}}) {
    const std::string where = case_name(n, m + 1);
    for (const Cubillage& Qp : oracle::cubillages(n, m)) {
      CanonicalExtension E = canonical_extension(Qp);
      c.expect(validate(E.cubillage).ok, where + " canonical extension valid");
      c.expect(membrane_cubillage(E.membrane, E.cubillage.colors(), m + 1) == Qp, where + " membrane projects onto Q'");
      auto before = stack_of_membrane(E.cubillage, E.membrane);
      c.expect(membrane_of_stack(E.cubillage, before) == E.membrane, where + " membrane round trip");
      std::set<ColorSet> early(before.begin(), before.end());
      for (const Flip& f : find_flips(E.cubillage)) {
        if (f.direction != FlipDirection::lowering) continue;
        auto pk = packet(f.parent);
        bool inside = std::all_of(pk.begin(), pk.end(), [&](ColorSet t) { return early.count(t) == 1; });
        c.expect(!inside, where + " no lowering flip before the membrane");
      }
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "counting identities", counting_identities},
      {2, "enumeration counts", enumeration_counts},
      {3, "poset structure", poset_structure},
      {4, "purity counterexample and lifts", purity},
      {5, "weak separation", weak_separation},
      {6, "reconstruction round trips", reconstruction},
      {7, "sign rule against exact determinants", sign_rule},
      {8, "order laws", order_laws},
      {9, "garlands", garlands},
      {10, "triangulations", triangulations},
      {11, "property suites", property_suites},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " (" << c.checks()
              << " checks, " << static_cast<int>(secs * 1000) << " ms)";
    if (!c.ok()) std::cout << " first failure: " << c.first_failure();
    std::cout << std::endl;
    failed += c.ok() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
