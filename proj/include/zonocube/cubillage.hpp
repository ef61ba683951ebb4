#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "zonocube/colors.hpp"
#include "zonocube/error.hpp"

namespace zonocube {

/// A d-cube (X, T): the parallelotope spanned by the colors in T, translated to vertex X.
struct Cube {
  ColorSet root;
  ColorSet type;
  friend bool operator==(const Cube&, const Cube&) = default;
};

/// A (d-1)-dimensional cell, same encoding as a cube of one dimension less.
struct Facet {
  ColorSet root;
  ColorSet type;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.root < b.root;
  }
};

struct FacetHash {
  std::size_t operator()(const Facet& f) const noexcept {
    return std::hash<ColorSet::Mask>{}(f.root.mask() * 0x9E3779B97F4A7C15ULL ^ f.type.mask());
  }
};

enum class Side { front, back };

/// The two facets of a cube parallel to every color of its type except `color`.
struct FacetPair {
  int color;
  Facet visible;
  Facet invisible;
};

/// Visible facet: the one on the front (lower last coordinate) of the cube.
Facet visible_facet(const Cube& cube, int color);
Facet invisible_facet(const Cube& cube, int color);
std::vector<FacetPair> facet_pairs(const Cube& cube);

/// Facets forming the front or back boundary of the zonotope Z(colors, d), sorted by type.
std::vector<Facet> boundary_plates(ColorSet colors, int d, Side side);

/// A fine zonotopal tiling of Z(colors, d), stored as cubes sorted lexicographically by type.
///
/// Construction only enforces that types are distinct d-element sets; the full
/// tiling conditions are checked by `validate`.
class Cubillage {
 public:
  Cubillage(ColorSet colors, int d, std::vector<Cube> cubes);

  ColorSet colors() const { return colors_; }
  int dim() const { return d_; }
  int n() const { return colors_.size(); }
  std::span<const Cube> cubes() const { return cubes_; }
  std::size_t size() const { return cubes_.size(); }

  /// Index of the cube of the given type, or npos.
  std::size_t index_of(ColorSet type) const;
  const Cube* find(ColorSet type) const;
  const Cube& at(ColorSet type) const;
  ColorSet root_of(ColorSet type) const { return at(type).root; }

  /// Roots listed in type order; together with colors and d this identifies the cubillage.
  std::vector<ColorSet::Mask> key() const;

  friend bool operator==(const Cubillage&, const Cubillage&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ColorSet colors_;
  int d_;
  std::vector<Cube> cubes_;
};

Cubillage standard(ColorSet colors, int d);
Cubillage antistandard(ColorSet colors, int d);
inline Cubillage standard(int n, int d) { return standard(ColorSet::upto(n), d); }
inline Cubillage antistandard(int n, int d) { return antistandard(ColorSet::upto(n), d); }

/// Checks type bijectivity, facet pairing, acyclicity of the natural order and the vertex count.
Diagnostic validate(const Cubillage& Q);
/// Throws CorruptInput carrying the diagnostic when `validate` fails.
void require_valid(const Cubillage& Q);

/// All vertices of all cubes, sorted lexicographically.
std::vector<ColorSet> vertex_spectra(const Cubillage& Q);

/// 1-skeleton: each edge runs from `tail` to `tail + color`.
struct Edge {
  ColorSet tail;
  int color;
  friend bool operator==(const Edge&, const Edge&) = default;
};
struct EdgeGraph {
  std::vector<ColorSet> vertices;
  std::vector<Edge> edges;
  std::map<ColorSet, std::vector<int>> outgoing;
};
EdgeGraph edge_graph(const Cubillage& Q);

struct Reduction {
  Cubillage cubillage;
  /// Cells of the contracted partition, as facets (root, type - color).
  std::vector<Facet> seam;
  /// Types of the reduced cubillage lying on the front side of the seam.
  std::vector<ColorSet> below;
};

/// Deletes the partition of `color` from Q.
Reduction reduce(const Cubillage& Q, int color);

/// Inserts a new maximal color along the membrane bounding `stack`.
Cubillage expand(const Cubillage& Q, std::span<const ColorSet> stack, int color);

/// Adds `color` (not necessarily maximal) with its partition at the back boundary.
Cubillage expand_at_back(const Cubillage& Q, int color);
/// Adds `color` with its partition at the front boundary.
Cubillage expand_at_front(const Cubillage& Q, int color);

/// The (d-1)-cubillage on colors - color obtained by contracting the partition of `color`.
Cubillage contract(const Cubillage& Q, int color);

/// A cubillage containing the cube of type T with root X as the unique cube of that type.
Cubillage embed_subcubillage(ColorSet colors, int d, ColorSet X, ColorSet T);

/// Cubes whose types lie in `sub`, as a cubillage over `sub`; roots must avoid colors outside `sub`.
Cubillage restrict_to(const Cubillage& Q, ColorSet sub);
/// Replaces the cubes whose types lie in `replacement.colors()` by those of `replacement`.
Cubillage splice(const Cubillage& Q, const Cubillage& replacement);

}  // namespace zonocube
