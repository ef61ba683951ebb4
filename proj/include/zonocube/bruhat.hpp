#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zonocube/cubillage.hpp"
#include "zonocube/geom.hpp"

namespace zonocube {

struct EnumerationLimits {
  /// Largest number of cubes C(n, d) accepted.
  std::uint64_t max_cubes = 70;
  /// Largest number of cubillages visited before refusing.
  std::size_t max_states = 200000;
};

/// All cubillages of Z(n, d), in breadth-first order of raising flips from the standard one.
std::vector<Cubillage> enumerate_cubillages(int n, int d, const EnumerationLimits& limits = {});

struct BruhatPoset {
  int n = 0;
  int d = 0;
  std::vector<Cubillage> elements;
  /// Raising flips (lower, upper) as element indices.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::size_t> rank;

  std::size_t minimum() const;
  std::size_t maximum() const;
  bool is_graded() const;
  /// Whether every pair of elements has a least upper bound in the flip order.
  bool is_lattice() const;
  std::string to_dot() const;
};

BruhatPoset bruhat_poset(int n, int d, const EnumerationLimits& limits = {});

/// A triangulation of the cyclic polytope with n vertices in dimension d-1, by vertex sets of its simplices.
struct Triangulation {
  int n = 0;
  int d = 0;
  std::vector<ColorSet> simplices;
  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  friend bool operator<(const Triangulation& a, const Triangulation& b) { return a.simplices < b.simplices; }
};

/// Section map: the types of the cubes rooted at the empty set.
Triangulation sec(const Cubillage& Q);

/// Exact volume check, plus combinatorial checks in dimensions d <= 3.
Diagnostic check_triangulation(const Triangulation& T, const Realization& R = {});

/// All triangulations for d = 2 and d = 3; d >= 4 raises Unsupported.
std::vector<Triangulation> enumerate_triangulations(int n, int d);

struct SurjectivityReport {
  int n = 0;
  int d = 0;
  std::size_t cubillages = 0;
  std::size_t image = 0;
  /// Number of triangulations when an independent enumeration is available.
  std::optional<std::size_t> triangulations;
  std::size_t hit = 0;
  std::vector<Triangulation> missed;
  /// Every section passed the triangulation checks.
  bool all_valid = true;
  std::optional<bool> surjective() const {
    if (!triangulations) return std::nullopt;
    return missed.empty();
  }
};
SurjectivityReport sec_surjectivity(int n, int d, const EnumerationLimits& limits = {});

}  // namespace zonocube
