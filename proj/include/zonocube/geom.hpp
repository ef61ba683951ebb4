#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zonocube/cubillage.hpp"

namespace zonocube {

using BigInt = boost::multiprecision::cpp_int;

/// Cyclic configuration v_i = (1, t_i, t_i^2, ..., t_i^{d-1}) with integer parameters t.
class Realization {
 public:
  /// t_i = i for every color.
  Realization() = default;
  /// Parameters for colors 1..params.size(); they must be strictly increasing.
  explicit Realization(std::vector<long long> params);

  BigInt param(int color) const;
  std::vector<BigInt> vector_of(int color, int d) const;

 private:
  std::vector<long long> params_;
};

/// Exact determinant of a square integer matrix (fraction-free elimination).
BigInt determinant(std::vector<std::vector<BigInt>> rows);

/// Determinant of the columns v_j (j in `colors`, increasing) in dimension |colors|.
BigInt bracket(ColorSet colors, const Realization& R = {});
/// Sign of det(v_J, v_i) for J of size d-1; +1 exactly when parity(i, J) is even.
int det_sign(ColorSet J, int i, const Realization& R = {});

/// Sum of the generators indexed by X, in R^d.
std::vector<BigInt> vertex_coordinates(ColorSet X, int d, const Realization& R = {});

/// Sum of |bracket| over the given d-element simplices.
BigInt simplices_volume(std::span<const ColorSet> simplices, const Realization& R = {});
/// Volume of the cyclic polytope conv(v_1..v_n) in homogeneous form, via a fan from v_1 over its facets.
BigInt cyclic_polytope_volume(int n, int d, const Realization& R = {});
/// Compares the summed cube volumes of Q with the zonotope volume.
Diagnostic cubillage_volume_check(const Cubillage& Q, const Realization& R = {});
/// Facets of the cyclic polytope with n vertices in dimension d-1 by Gale evenness, as (d-1)-sets.
std::vector<ColorSet> cyclic_polytope_facets(int n, int d);

struct SvgOptions {
  int width = 640;
  int height = 480;
  bool arrows = false;
  bool labels = false;
  /// Types of a stack whose membrane is highlighted.
  std::optional<std::vector<ColorSet>> membrane_stack;
};

/// Deterministic SVG drawing of a 2-dimensional cubillage.
std::string render_svg(const Cubillage& Q, const SvgOptions& options = {}, const Realization& R = {});

/// Planar position of a vertex in the drawing plane: horizontal offset and height |X|.
std::pair<BigInt, BigInt> planar_point(ColorSet X, const Realization& R, ColorSet colors);

}  // namespace zonocube
