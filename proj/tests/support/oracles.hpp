#pragma once

// Independent reference computations used to cross-check the library in tests.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "zonocube/bruhat.hpp"
#include "zonocube/cubillage.hpp"

namespace oracle {

using zonocube::ColorSet;
using zonocube::Cube;
using zonocube::Cubillage;
using i128 = __int128;

/// Exact determinant by fraction-free elimination.
i128 det(std::vector<std::vector<i128>> m);

/// Moment-curve vector (1, t, t^2, ..., t^(d-1)).
std::vector<i128> moment(long long t, int d);

/// Parameter of a color; the default realization uses t_i = i.
long long param(int color, const std::vector<long long>& t);

/// Sign of det(v_{c_1}, ..., v_{c_d}) with the columns in the given order.
int column_sign(const std::vector<int>& columns, const std::vector<long long>& t = {});

/// Downward vertical ray from the centre of the cube (X, J + c): true iff it leaves through the facet X + [J].
bool ray_exits_lower_root(ColorSet J, int c, const std::vector<long long>& t = {});

/// Roots of the zonotope faces of type J minimizing (lower) or maximizing (upper) the normal functional.
ColorSet lower_face_root(ColorSet J, ColorSet colors, const std::vector<long long>& t = {});
ColorSet upper_face_root(ColorSet J, ColorSet colors, const std::vector<long long>& t = {});

/// Visible and invisible facet of a cube decided by the ray test.
std::pair<zonocube::Facet, zonocube::Facet> ray_facets(const Cube& cube, int color);

using Point = std::pair<i128, i128>;
using Polygon = std::vector<Point>;

i128 twice_area(const Polygon& p);
/// Separating-axis test on convex polygons; touching along edges or corners is not an overlap.
bool interiors_overlap(const Polygon& a, const Polygon& b);

/// Rhombus of a 2-dimensional cube with v_i = (1, t_i).
Polygon rhombus(const Cube& c, const std::vector<long long>& t = {});
/// True iff the rhombi of a 2-cubillage have disjoint interiors and their areas add up to the zonogon.
bool planar_tiling(const Cubillage& Q, const std::vector<long long>& t = {});

/// Length of the longest alternating chain in (X - Y) and (Y - X), by dynamic programming.
int longest_alternation(ColorSet X, ColorSet Y);
inline bool r_separated(ColorSet X, ColorSet Y, int r) { return longest_alternation(X, Y) <= r + 1; }

/// Number of (d-1)-separated families of size C(n, <=d) in 2^[n], by plain backtracking.
std::uint64_t count_maximum_separated(int n, int d);

/// Cycle search on the relation "shares a facet invisible in the first cube and visible in the second".
bool has_cycle(const std::vector<Cube>& cubes);

/// Every triangulation of the convex n-gon with vertices 1..n, simplices as sorted 3-sets.
std::vector<std::vector<ColorSet>> polygon_triangulations(int n);

/// Twice the area of the convex polygon with vertices (t_i, t_i^2), by the shoelace formula.
i128 parabola_polygon_twice_area(int n, const std::vector<long long>& t = {});

/// Random walk of `steps` flips starting from the standard cubillage.
Cubillage random_flip_walk(int n, int d, int steps, std::mt19937& rng);

/// Enumerations are memoized per process.
const std::vector<Cubillage>& cubillages(int n, int d);

}  // namespace oracle
