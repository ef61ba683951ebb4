#include "zonocube/geom.hpp"

#include <iomanip>
#include <sstream>

#include "zonocube/order.hpp"

namespace zonocube {

Realization::Realization(std::vector<long long> params) : params_(std::move(params)) {
  for (std::size_t i = 1; i < params_.size(); ++i) {
    if (params_[i] <= params_[i - 1]) throw InvalidArgument("realization parameters must be strictly increasing");
  }
}

BigInt Realization::param(int color) const {
  if (params_.empty()) return BigInt(color);
  if (color < 1 || static_cast<std::size_t>(color) > params_.size()) {
    throw InvalidArgument("no realization parameter for color " + std::to_string(color));
  }
  return BigInt(params_[color - 1]);
}

std::vector<BigInt> Realization::vector_of(int color, int d) const {
  std::vector<BigInt> v(d);
  BigInt t = param(color), p = 1;
  for (int k = 0; k < d; ++k) {
    v[k] = p;
    p *= t;
  }
  return v;
}

BigInt determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidArgument("determinant needs a square matrix");
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigInt bracket(ColorSet colors, const Realization& R) {
  const int d = colors.size();
  std::vector<std::vector<BigInt>> rows(d, std::vector<BigInt>(d));
  int col = 0;
  for (int c : colors) {
    std::vector<BigInt> v = R.vector_of(c, d);
    for (int r = 0; r < d; ++r) rows[r][col] = v[r];
    ++col;
  }
  return determinant(std::move(rows));
}

int det_sign(ColorSet J, int i, const Realization& R) {
  if (J.contains(i)) throw InvalidArgument("det_sign needs a color outside J");
  const int d = J.size() + 1;
  std::vector<std::vector<BigInt>> rows(d, std::vector<BigInt>(d));
  int col = 0;
  auto put = [&](int c) {
    std::vector<BigInt> v = R.vector_of(c, d);
    for (int r = 0; r < d; ++r) rows[r][col] = v[r];
    ++col;
  };
  for (int j : J) put(j);
  put(i);
  BigInt det = determinant(std::move(rows));
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

std::vector<BigInt> vertex_coordinates(ColorSet X, int d, const Realization& R) {
  std::vector<BigInt> sum(d, BigInt(0));
  for (int c : X) {
    std::vector<BigInt> v = R.vector_of(c, d);
    for (int k = 0; k < d; ++k) sum[k] += v[k];
  }
  return sum;
}

BigInt simplices_volume(std::span<const ColorSet> simplices, const Realization& R) {
  BigInt total = 0;
  for (ColorSet s : simplices) total += abs(bracket(s, R));
  return total;
}

Diagnostic cubillage_volume_check(const Cubillage& Q, const Realization& R) {
  BigInt cubes = 0, zonotope = 0;
  for (const Cube& c : Q.cubes()) cubes += abs(bracket(c.type, R));
  for (ColorSet D : grassmannian(Q.colors(), Q.dim())) zonotope += abs(bracket(D, R));
  if (cubes != zonotope) {
    return Diagnostic::failure("volume", "cube volumes sum to " + cubes.str() + ", zonotope volume is " + zonotope.str());
  }
  return Diagnostic::success();
}

std::vector<ColorSet> cyclic_polytope_facets(int n, int d) {
  std::vector<ColorSet> out;
  ColorSet all = ColorSet::upto(n);
  for (ColorSet F : grassmannian(all, d - 1)) {
    bool even = true;
    std::vector<int> gaps = (all - F).elements();
    for (std::size_t a = 0; a < gaps.size() && even; ++a) {
      for (std::size_t b = a + 1; b < gaps.size() && even; ++b) {
        int between = F.count_above(gaps[a]) - F.count_above(gaps[b] - 1);
        even = between % 2 == 0;
      }
    }
    if (even) out.push_back(F);
  }
  return out;
}

BigInt cyclic_polytope_volume(int n, int d, const Realization& R) {
  if (d < 2 || n < d) throw InvalidArgument("cyclic polytope volume needs 2 <= d <= n");
  BigInt total = 0;
  for (ColorSet F : cyclic_polytope_facets(n, d)) {
    if (!F.contains(1)) total += abs(bracket(F.with(1), R));
  }
  return total;
}

std::pair<BigInt, BigInt> planar_point(ColorSet X, const Realization& R, ColorSet colors) {
  BigInt shift = R.param(colors.min()) + R.param(colors.max());
  BigInt h = 0;
  for (int c : X) h += 2 * R.param(c) - shift;
  return {h, BigInt(X.size())};
}

namespace {

struct Frame {
  double x0, y0, sx, sy;
  int height;
  std::pair<double, double> map(const std::pair<BigInt, BigInt>& p) const {
    double x = (p.first.convert_to<double>() - x0) * sx + 20.0;
    double y = height - 20.0 - (p.second.convert_to<double>() - y0) * sy;
    return {x, y};
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

}  // namespace

std::string render_svg(const Cubillage& Q, const SvgOptions& options, const Realization& R) {
  if (Q.dim() != 2) throw Unsupported("SVG rendering is available for 2-dimensional cubillages only");
  if (options.width < 60 || options.height < 60) throw InvalidArgument("SVG size must be at least 60x60");
  const ColorSet C = Q.colors();
  std::vector<ColorSet> verts = vertex_spectra(Q);
  BigInt minx = 0, maxx = 0;
  bool first = true;
  for (ColorSet v : verts) {
    BigInt x = planar_point(v, R, C).first;
    if (first || x < minx) minx = x;
    if (first || x > maxx) maxx = x;
    first = false;
  }
  double spanx = std::max(1.0, (maxx - minx).convert_to<double>());
  double spany = std::max(1, C.size());
  Frame fr{minx.convert_to<double>(), 0.0, (options.width - 40) / spanx, (options.height - 40) / spany,
           options.height};
  auto pt = [&](ColorSet X) { return fr.map(planar_point(X, R, C)); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << options.height
     << "\" viewBox=\"0 0 " << options.width << " " << options.height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const Cube& c : Q.cubes()) {
    int a = c.type.min(), b = c.type.max();
    ColorSet corners[4] = {c.root, c.root.with(a), c.root.with(a).with(b), c.root.with(b)};
    os << "<polygon class=\"tile\" data-type=\"" << c.type.label() << "\" points=\"";
    for (int k = 0; k < 4; ++k) {
      auto [x, y] = pt(corners[k]);
      os << (k ? " " : "") << fmt(x) << "," << fmt(y);
    }
    os << "\" fill=\"#dde6f3\" stroke=\"#223\" stroke-width=\"1\"/>\n";
  }
  if (options.membrane_stack) {
    Membrane M = membrane_of_stack(Q, *options.membrane_stack);
    for (const Facet& f : M.plates) {
      auto [x1, y1] = pt(f.root);
      auto [x2, y2] = pt(f.root | f.type);
      os << "<line class=\"membrane\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
         << "\" y2=\"" << fmt(y2) << "\" stroke=\"#c22\" stroke-width=\"3\"/>\n";
    }
  }
  if (options.arrows) {
    os << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">"
          "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"#262\"/></marker></defs>\n";
    NaturalOrder order(Q);
    auto centre = [&](std::size_t i) {
      const Cube& c = Q.cubes()[i];
      auto [x1, y1] = pt(c.root);
      auto [x2, y2] = pt(c.root | c.type);
      return std::pair<double, double>{(x1 + x2) / 2, (y1 + y2) / 2};
    };
    for (auto [lo, hi] : order.covers()) {
      auto [x1, y1] = centre(lo);
      auto [x2, y2] = centre(hi);
      os << "<line class=\"order\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\""
         << fmt(y2) << "\" stroke=\"#262\" stroke-width=\"1.5\" marker-end=\"url(#head)\"/>\n";
    }
  }
  if (options.labels) {
    for (ColorSet v : verts) {
      auto [x, y] = pt(v);
      os << "<text x=\"" << fmt(x + 3) << "\" y=\"" << fmt(y - 3) << "\" font-size=\"10\">" << v.label() << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace zonocube
