#include "zonocube/bruhat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>
#include <boost/functional/hash.hpp>

#include "zonocube/order.hpp"
#include "zonocube/systems.hpp"

namespace zonocube {

namespace {

using Key = std::vector<ColorSet::Mask>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept { return boost::hash_range(k.begin(), k.end()); }
};

void check_limits(int n, int d, const EnumerationLimits& limits) {
  if (d < 1 || n < d || n > ColorSet::kMaxColor) throw InvalidArgument("need 1 <= d <= n");
  if (binomial(n, d) > limits.max_cubes) {
    throw Refused("Z(" + std::to_string(n) + "," + std::to_string(d) + ") has " + std::to_string(binomial(n, d)) +
                  " cubes, above the limit of " + std::to_string(limits.max_cubes));
  }
}

struct Explored {
  std::vector<Cubillage> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

Explored explore(int n, int d, const EnumerationLimits& limits) {
  check_limits(n, d, limits);
  Explored ex;
  std::unordered_map<Key, std::size_t, KeyHash> seen;
  ex.elements.push_back(standard(n, d));
  seen.emplace(ex.elements[0].key(), 0);
  for (std::size_t i = 0; i < ex.elements.size(); ++i) {
    for (const Flip& f : find_flips(ex.elements[i])) {
      if (f.direction != FlipDirection::raising) continue;
      Cubillage next = apply_flip(ex.elements[i], f.parent);
      auto [it, fresh] = seen.emplace(next.key(), ex.elements.size());
      if (fresh) {
        if (ex.elements.size() >= limits.max_states) {
          throw Refused("more than " + std::to_string(limits.max_states) + " cubillages; raise the state limit");
        }
        ex.elements.push_back(std::move(next));
      }
      ex.covers.emplace_back(i, it->second);
    }
  }
  std::sort(ex.covers.begin(), ex.covers.end());
  return ex;
}

}  // namespace

std::vector<Cubillage> enumerate_cubillages(int n, int d, const EnumerationLimits& limits) {
  return explore(n, d, limits).elements;
}

BruhatPoset bruhat_poset(int n, int d, const EnumerationLimits& limits) {
  Explored ex = explore(n, d, limits);
  BruhatPoset P;
  P.n = n;
  P.d = d;
  P.elements = std::move(ex.elements);
  P.covers = std::move(ex.covers);
  for (const Cubillage& Q : P.elements) P.rank.push_back(inversions(Q).size());
  return P;
}

std::size_t BruhatPoset::minimum() const {
  std::vector<char> has_lower(elements.size(), 0);
  for (auto [a, b] : covers) has_lower[b] = 1;
  std::size_t found = elements.size();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!has_lower[i]) {
      if (found != elements.size()) throw CorruptInput("the flip order has several minimal elements");
      found = i;
    }
  }
  return found;
}

std::size_t BruhatPoset::maximum() const {
  std::vector<char> has_upper(elements.size(), 0);
  for (auto [a, b] : covers) has_upper[a] = 1;
  std::size_t found = elements.size();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!has_upper[i]) {
      if (found != elements.size()) throw CorruptInput("the flip order has several maximal elements");
      found = i;
    }
  }
  return found;
}

bool BruhatPoset::is_graded() const {
  return std::all_of(covers.begin(), covers.end(), [&](auto c) { return rank[c.second] == rank[c.first] + 1; });
}

bool BruhatPoset::is_lattice() const {
  using Bits = boost::dynamic_bitset<>;
  const std::size_t N = elements.size();
  std::vector<std::vector<std::size_t>> succ(N);
  for (auto [a, b] : covers) succ[a].push_back(b);
  std::vector<std::size_t> by_rank(N);
  for (std::size_t i = 0; i < N; ++i) by_rank[i] = i;
  std::sort(by_rank.begin(), by_rank.end(), [&](std::size_t a, std::size_t b) { return rank[a] > rank[b]; });
  std::vector<Bits> up(N, Bits(N));
  for (std::size_t i : by_rank) {
    up[i].set(i);
    for (std::size_t j : succ[i]) up[i] |= up[j];
  }
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = a + 1; b < N; ++b) {
      Bits common = up[a] & up[b];
      std::size_t best = Bits::npos;
      for (std::size_t u = common.find_first(); u != Bits::npos; u = common.find_next(u)) {
        if (best == Bits::npos || rank[u] < rank[best]) best = u;
      }
      if (best == Bits::npos || !common.is_subset_of(up[best])) return false;
    }
  }
  return true;
}

std::string BruhatPoset::to_dot() const {
  std::ostringstream os;
  os << "digraph bruhat {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::string label;
    for (ColorSet K : inversions(elements[i])) label += (label.empty() ? "" : " ") + K.label();
    os << "  q" << i << " [label=\"{" << label << "}\"];\n";
  }
  for (auto [a, b] : covers) os << "  q" << a << " -> q" << b << ";\n";
  os << "}\n";
  return os.str();
}

Triangulation sec(const Cubillage& Q) {
  if (Q.colors() != ColorSet::upto(Q.n())) throw InvalidArgument("sec needs the colors [n]");
  Triangulation T{Q.n(), Q.dim(), {}};
  for (const Cube& c : Q.cubes()) {
    if (c.root.empty()) T.simplices.push_back(c.type);
  }
  if (Q.dim() >= 2) {
    Diagnostic diag = check_triangulation(T);
    if (!diag) throw CorruptInput("section is not a triangulation: " + diag.message());
  }
  return T;
}

Diagnostic check_triangulation(const Triangulation& T, const Realization& R) {
  const int n = T.n, d = T.d;
  if (d < 2 || n < d) return Diagnostic::failure("triangulation", "need 2 <= d <= n");
  for (ColorSet s : T.simplices) {
    if (s.size() != d || !s.subset_of(ColorSet::upto(n))) {
      return Diagnostic::failure("triangulation", "simplex " + s.label() + " is not a d-subset of [n]");
    }
  }
  BigInt have = simplices_volume(T.simplices, R);
  BigInt want = cyclic_polytope_volume(n, d, R);
  if (have != want) {
    return Diagnostic::failure("volume", "simplices cover volume " + have.str() + " of " + want.str());
  }
  if (d == 2) {
    std::vector<ColorSet> segs = T.simplices;
    std::sort(segs.begin(), segs.end());
    int at = 1;
    for (ColorSet s : segs) {
      if (s.min() != at) return Diagnostic::failure("chain", "segments do not form a chain from 1 to n");
      at = s.max();
    }
    if (at != n) return Diagnostic::failure("chain", "segments do not reach n");
  } else if (d == 3) {
    if (T.simplices.size() != static_cast<std::size_t>(n - 2)) {
      return Diagnostic::failure("polygon", "a polygon triangulation has n-2 triangles");
    }
    std::map<ColorSet, int> edges;
    for (ColorSet s : T.simplices) {
      for (ColorSet e : grassmannian(s, 2)) ++edges[e];
    }
    for (auto [e, count] : edges) {
      bool boundary = e.max() - e.min() == 1 || (e.min() == 1 && e.max() == n);
      if (count != (boundary ? 1 : 2)) {
        return Diagnostic::failure("polygon", "edge " + e.label() + " is used " + std::to_string(count) + " times");
      }
    }
    for (int i = 1; i <= n; ++i) {
      ColorSet e = i < n ? ColorSet{i, i + 1} : ColorSet{1, n};
      if (!edges.count(e)) return Diagnostic::failure("polygon", "boundary edge " + e.label() + " is missing");
    }
  }
  return Diagnostic::success();
}

std::vector<Triangulation> enumerate_triangulations(int n, int d) {
  if (d < 2 || n < d) throw InvalidArgument("need 2 <= d <= n");
  std::vector<Triangulation> out;
  if (d == 2) {
    for (ColorSet inner : all_subsets(ColorSet::interval(2, n - 1))) {
      std::vector<int> pts = inner.with(1).with(n).elements();
      Triangulation T{n, 2, {}};
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) T.simplices.push_back(ColorSet{pts[i], pts[i + 1]});
      out.push_back(std::move(T));
    }
  } else if (d == 3) {
    std::map<std::pair<int, int>, std::vector<std::vector<ColorSet>>> memo;
    auto polygon = [&](auto&& self, int i, int j) -> const std::vector<std::vector<ColorSet>>& {
      auto it = memo.find({i, j});
      if (it != memo.end()) return it->second;
      std::vector<std::vector<ColorSet>> res;
      if (j - i < 2) {
        res.push_back({});
      } else {
        for (int k = i + 1; k < j; ++k) {
          auto left = self(self, i, k);
          auto right = self(self, k, j);
          for (const auto& l : left) {
            for (const auto& r : right) {
              std::vector<ColorSet> t = l;
              t.insert(t.end(), r.begin(), r.end());
              t.push_back(ColorSet{i, k, j});
              std::sort(t.begin(), t.end());
              res.push_back(std::move(t));
            }
          }
        }
      }
      return memo.emplace(std::make_pair(i, j), std::move(res)).first->second;
    };
    for (const auto& t : polygon(polygon, 1, n)) out.push_back({n, 3, t});
  } else {
    throw Unsupported("triangulations are enumerated for d <= 3 only");
  }
  std::sort(out.begin(), out.end());
  return out;
}

SurjectivityReport sec_surjectivity(int n, int d, const EnumerationLimits& limits) {
  if (d < 2) throw InvalidArgument("the section map needs d >= 2");
  SurjectivityReport rep;
  rep.n = n;
  rep.d = d;
  std::set<std::vector<ColorSet>> image;
  for (const Cubillage& Q : enumerate_cubillages(n, d, limits)) {
    ++rep.cubillages;
    try {
      image.insert(sec(Q).simplices);
    } catch (const CorruptInput&) {
      rep.all_valid = false;
    }
  }
  rep.image = image.size();
  if (d <= 3) {
    std::vector<Triangulation> all = enumerate_triangulations(n, d);
    rep.triangulations = all.size();
    for (const Triangulation& T : all) {
      if (image.count(T.simplices)) {
        ++rep.hit;
      } else {
        rep.missed.push_back(T);
      }
    }
  }
  return rep;
}

}  // namespace zonocube
