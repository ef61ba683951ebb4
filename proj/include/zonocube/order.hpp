#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "zonocube/cubillage.hpp"

namespace zonocube {

/// For every facet occurring in Q: the cube seeing it as invisible (below) and as visible (above).
struct FacetLink {
  long below = -1;
  long above = -1;
};
using FacetAdjacency = std::unordered_map<Facet, FacetLink, FacetHash>;

/// Builds the facet adjacency; throws CorruptInput when a facet is shared by two cubes on one side.
FacetAdjacency facet_adjacency(const Cubillage& Q);

/// The natural order of a cubillage: Q1 covers Q0 when they share a facet invisible in Q0.
class NaturalOrder {
 public:
  /// Throws CorruptInput when the relation has a cycle.
  explicit NaturalOrder(const Cubillage& Q);

  std::size_t size() const { return types_.size(); }
  ColorSet type(std::size_t i) const { return types_[i]; }
  std::size_t index_of(ColorSet type) const;
  /// Cover pairs (lower, upper) as indices into the type list.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& predecessors(std::size_t i) const { return preds_[i]; }
  /// Strict precedence in the transitive closure.
  bool precedes(std::size_t a, std::size_t b) const { return reach_[a].test(b); }
  bool precedes(ColorSet a, ColorSet b) const { return precedes(index_of(a), index_of(b)); }
  const std::vector<std::size_t>& topological_order() const { return topo_; }

 private:
  std::vector<ColorSet> types_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<boost::dynamic_bitset<>> reach_;
  std::vector<std::size_t> topo_;
};

/// Graphviz digraph of the cover relation, nodes labelled by cube types.
std::string natural_order_dot(const Cubillage& Q);

/// Plates of a membrane, sorted by type.
struct Membrane {
  std::vector<Facet> plates;
  friend bool operator==(const Membrane&, const Membrane&) = default;
};

/// The membrane viewed as a (d-1)-cubillage on the same colors.
Cubillage membrane_cubillage(const Membrane& M, ColorSet colors, int d);
std::vector<ColorSet> membrane_vertices(const Membrane& M);

/// True iff `stack` is closed downward in the natural order.
bool is_stack(const Cubillage& Q, std::span<const ColorSet> stack);
/// Boundary between the stack and its complement; throws InvalidArgument if not a stack.
Membrane membrane_of_stack(const Cubillage& Q, std::span<const ColorSet> stack);
/// Types of the cubes before the membrane; throws InvalidArgument if M is not a membrane of Q.
std::vector<ColorSet> stack_of_membrane(const Cubillage& Q, const Membrane& M);

enum class MembraneSide { before, after };
/// Locates a d-type relative to a membrane given by its vertex set.
MembraneSide side_of_membrane(ColorSet type, std::span<const ColorSet> membrane_vertices);

/// All stacks of Q (the membrane lattice, ordered by inclusion), each sorted, listed by size and then lexicographically.
std::vector<std::vector<ColorSet>> enumerate_membranes(const Cubillage& Q);

enum class FlipDirection { raising, lowering };

struct Flip {
  ColorSet parent;
  FlipDirection direction;
  /// Common root part outside the parent set.
  ColorSet base;
  friend bool operator==(const Flip&, const Flip&) = default;
};

/// Roots of the standard or antistandard tiling of Z(K, |K|-1), keyed by cube type.
std::vector<Cube> capsid(ColorSet K, bool standard_side);

std::vector<Flip> find_flips(const Cubillage& Q);
/// Replaces the capsid on `parent`; throws InvalidArgument if it is not flippable.
Cubillage apply_flip(const Cubillage& Q, ColorSet parent);

/// Expansion of the reduction by the maximal color, with the full stack.
Cubillage avalanche(const Cubillage& Q);
/// Expansion of the reduction by the maximal color, with the empty stack.
Cubillage antiavalanche(const Cubillage& Q);
/// Sequence of cubillages from Q down to the standard one, each step an avalanche.
std::vector<Cubillage> standardize(const Cubillage& Q);

/// A d-cubillage on the same colors containing the (d-1)-cubillage Q as a membrane.
struct CanonicalExtension {
  Cubillage cubillage;
  Membrane membrane;
};
CanonicalExtension canonical_extension(const Cubillage& Q);

/// Garland map from front-membrane vertices to back-membrane vertices.
std::vector<std::pair<ColorSet, ColorSet>> garland(const Cubillage& Q);

/// Complement of every root: Q' has cube ([n] - X - T, T) for each cube (X, T) of Q.
Cubillage antipode(const Cubillage& Q);

}  // namespace zonocube
