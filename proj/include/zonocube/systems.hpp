#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zonocube/cubillage.hpp"
#include "zonocube/order.hpp"

namespace zonocube {

/// A family of subsets of [n], kept sorted and free of duplicates.
struct SetSystem {
  int n = 0;
  std::vector<ColorSet> sets;

  SetSystem() = default;
  /// Sorts the sets; throws InvalidArgument on duplicates or sets outside [n].
  SetSystem(int n, std::vector<ColorSet> sets);
  friend bool operator==(const SetSystem&, const SetSystem&) = default;
};

/// Vertex spectra of Q as a set system on [max color].
SetSystem spectra(const Cubillage& Q);

/// A partial order on Gr([n], d), given by generating relations (a precedes b).
struct AdmissibleOrder {
  int n = 0;
  int d = 0;
  std::vector<std::pair<ColorSet, ColorSet>> relations;
};

/// Cover relations of the natural order of Q, expressed through the cube types.
AdmissibleOrder order_of(const Cubillage& Q);
/// Checks that the relations are acyclic and order every packet lexicographically or anti-lexicographically.
Diagnostic is_admissible(const AdmissibleOrder& order);

/// The (d+1)-subsets K whose packet is ordered anti-lexicographically in Q.
std::vector<ColorSet> inversions(const Cubillage& Q);
/// Every packet meets S in a beginning or an end with respect to the lexicographic order.
bool is_consistent(std::span<const ColorSet> S, int n, int d);

/// True iff every pair of members is r-separated.
bool is_r_separated_system(std::span<const ColorSet> sets, int r);
bool is_weakly_separated_system(std::span<const ColorSet> sets, int k);

/// The unique cubillage of Z(n, d) whose vertex spectra are `sets`; throws NotRealizable otherwise.
Cubillage from_spectra(std::span<const ColorSet> sets, int n, int d);

struct MembraneRealization {
  /// Cubillage of Z(n, d) containing the membrane.
  Cubillage ambient;
  Membrane membrane;
  /// The membrane as a (d-1)-cubillage.
  Cubillage cubillage;
};
/// A membrane of some cubillage of Z(n, d) whose projection has inversion set S, for S a
/// consistent subset of Gr([n], d) with d >= 2. Inconsistent input raises InvalidArgument.
MembraneRealization from_consistent(std::span<const ColorSet> S, int n, int d);

/// The unique cubillage of Z(n, d) whose natural order is the given admissible order.
Cubillage from_order(const AdmissibleOrder& order);

enum class ExtensionMode { complete, certify_maximal };

struct ExtensionResult {
  int n = 0;
  int d = 0;
  std::uint64_t target = 0;
  /// Input together with every peripheral set.
  std::vector<ColorSet> base;
  /// Non-peripheral sets compatible with every input member.
  std::vector<ColorSet> candidates;
  /// Complete mode: a completion to `target` members, if one exists.
  std::optional<std::vector<ColorSet>> completion;
  /// Certify mode: every inclusion-maximal extension of the input (sorted member lists).
  std::vector<std::vector<ColorSet>> maximal_extensions;
  bool completable = false;
};
/// Searches for (d-1)-separated systems containing `sets`.
ExtensionResult extension_search(std::span<const ColorSet> sets, int n, int d, ExtensionMode mode);

/// Number of (d-1)-separated systems of the maximal size binomial_upto(n, d) over [n].
std::uint64_t count_maximum_separated_systems(int n, int d);

struct WeakSeparationReport {
  int n = 0;
  int k = 0;
  std::size_t maximum = 0;
  std::uint64_t bound = 0;
  /// A system attaining `maximum`.
  std::vector<ColorSet> witness;
  bool within_bound() const { return maximum <= bound; }
};
/// Largest weakly k-separated system over [n] (odd k), found by exhaustive clique search.
WeakSeparationReport weak_separation_suite(int n, int k);

/// Sets outside `sets` that are weakly k-separated from all members and the peripheral sets for d = k+1.
std::vector<ColorSet> weak_extension_candidates(std::span<const ColorSet> sets, int n, int k);

}  // namespace zonocube
