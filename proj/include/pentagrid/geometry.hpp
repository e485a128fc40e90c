#ifndef PENTAGRID_GEOMETRY_HPP
#define PENTAGRID_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pentagrid/grid.hpp"

namespace pentagrid {

struct Tolerance {
  double geometric = 1e-9;
  double algebraic = 1e-12;
};

// Line of the disc model: a diameter with unit direction `direction`, or a
// circle orthogonal to the border with Euclidean centre `center`.
template <typename Scalar> struct HLine {
  using Complex = std::complex<Scalar>;

  bool diameter = true;
  Complex direction{1, 0};
  Complex center{0, 0};

  Scalar radius() const {
    return diameter ? Scalar(0) : std::sqrt(std::norm(center) - Scalar(1));
  }

  static HLine through_origin(Complex dir) {
    HLine l;
    l.direction = dir / std::abs(dir);
    return l;
  }
  static HLine circle(Complex c) {
    HLine l;
    l.diameter = false;
    l.center = c;
    return l;
  }
  // the line through two distinct points
  static HLine through(Complex p, Complex q, Scalar eps = Scalar(1e-14));
};

// Even isometries are z -> (a z + b) / (c z + d); odd ones apply the same
// map after complex conjugation.
template <typename Scalar> struct Isometry {
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, 2, 2>;

  Matrix m = Matrix::Identity();
  bool odd = false;

  static Isometry identity() { return {}; }

  Complex operator()(Complex z) const {
    Complex w = odd ? std::conj(z) : z;
    return (m(0, 0) * w + m(0, 1)) / (m(1, 0) * w + m(1, 1));
  }

  // (*this) after b
  Isometry operator*(const Isometry &b) const {
    Isometry r;
    r.m = m * (odd ? Matrix(b.m.conjugate()) : b.m);
    r.odd = odd != b.odd;
    r.normalize();
    return r;
  }

  Isometry inverse() const {
    Isometry r;
    Matrix inv = m.inverse();
    r.m = odd ? Matrix(inv.conjugate()) : inv;
    r.odd = odd;
    r.normalize();
    return r;
  }

  // unit determinant
  void normalize() { m /= std::sqrt(m.determinant()); }

  template <typename Other> Isometry<Other> cast() const {
    Isometry<Other> r;
    r.m = m.template cast<std::complex<Other>>();
    r.odd = odd;
    return r;
  }
};

using Isometryd = Isometry<double>;
using HLined = HLine<double>;

template <typename Scalar>
Isometry<Scalar> reflect(const HLine<Scalar> &l) {
  using Complex = std::complex<Scalar>;
  Isometry<Scalar> g;
  g.odd = true;
  if (l.diameter)
    g.m << l.direction, Complex(0), Complex(0), std::conj(l.direction);
  else
    g.m << l.center, Complex(-1), Complex(1), -std::conj(l.center);
  g.normalize();
  return g;
}

// z -> (z + a) / (conj(a) z + 1), moves 0 to a along a diameter
template <typename Scalar>
Isometry<Scalar> translate_origin(std::complex<Scalar> a) {
  Isometry<Scalar> g;
  g.m << std::complex<Scalar>(1), a, std::conj(a), std::complex<Scalar>(1);
  g.normalize();
  return g;
}

// even map along the line pq taking p to q
template <typename Scalar>
Isometry<Scalar> shift_to(std::complex<Scalar> p, std::complex<Scalar> q) {
  auto to_origin = translate_origin(-p);
  return translate_origin(p) * translate_origin(to_origin(q)) * to_origin;
}

// the line of points equidistant from p and q
template <typename Scalar>
HLine<Scalar> perp_bisector(std::complex<Scalar> p, std::complex<Scalar> q,
                            Scalar eps = Scalar(1e-14)) {
  const Scalar alpha = 1 - std::norm(q), beta = 1 - std::norm(p);
  if (std::abs(alpha - beta) < eps)
    return HLine<Scalar>::through_origin(std::complex<Scalar>(0, 1) * (q - p));
  return HLine<Scalar>::circle((alpha * p - beta * q) / (alpha - beta));
}

// reflection in l after the shift from p to q (p, q on l)
template <typename Scalar>
Isometry<Scalar> glide(const HLine<Scalar> &l, std::complex<Scalar> p,
                       std::complex<Scalar> q) {
  return reflect(l) * shift_to(p, q);
}

template <typename Scalar>
Scalar hyperbolic_distance(std::complex<Scalar> z, std::complex<Scalar> w) {
  Scalar t = std::abs(z - w) / std::abs(Scalar(1) - std::conj(z) * w);
  return 2 * std::atanh(t);
}

template <typename Scalar>
HLine<Scalar> HLine<Scalar>::through(Complex p, Complex q, Scalar eps) {
  // Re(centre * conj(x)) = (1 + |x|^2) / 2 for x = p, q
  Eigen::Matrix<Scalar, 2, 2> a;
  a << p.real(), p.imag(), q.real(), q.imag();
  if (std::abs(a.determinant()) < eps) {
    Complex dir = std::abs(p) > std::abs(q) ? p : q;
    if (std::abs(dir) < eps)
      throw std::invalid_argument("HLine::through: coincident points");
    return through_origin(dir);
  }
  Eigen::Matrix<Scalar, 2, 1> rhs((1 + std::norm(p)) / 2, (1 + std::norm(q)) / 2);
  Eigen::Matrix<Scalar, 2, 1> x = a.inverse() * rhs;
  return circle(Complex(x(0), x(1)));
}

enum class MotionKind { identity, rotation, ideal_rotation, shift, reflection, glide };

std::string to_string(MotionKind kind);

struct MotionClass {
  MotionKind kind = MotionKind::identity;
  std::complex<double> center;             // rotation
  double angle = 0;                        // rotation, counterclockwise
  std::complex<double> ideal_a, ideal_b;   // axis ends on the border circle
  double displacement = 0;                 // shift or glide
  HLined axis;                             // shift, glide, reflection
  bool near_degenerate = false;
};

MotionClass classify(const Isometryd &g, const Tolerance &tol = {});

// Regular p-gon with interior angle 2pi/q, vertex 0 on the positive
// x-axis, vertices counterclockwise. Throws std::domain_error unless
// 1/p + 1/q < 1/2.
std::vector<std::complex<double>> base_polygon(int p, int q);
double circumradius_cosh(int p, int q);
double inradius_cosh(int p, int q);

// One isometry per ball tile placing the {5,4} base pentagon; tile side i
// (vertex i to vertex i+1) is the side of slot i.
std::vector<Isometryd> layout(const Ball &b);

// Vertices of a placed tile, counterclockwise.
std::array<std::complex<double>, 5> tile_vertices(const Isometryd &g);

// Slot-wise neighbour found by matching side endpoints, kExterior if none.
std::vector<std::array<int, 5>>
geometric_adjacency(const Ball &b, const std::vector<Isometryd> &placed,
                    double tol = 1e-9);

// Side colours per tile as palette indices.
using SideColoring = std::map<TileAddress, std::array<int, 5>>;

struct SvgStyle {
  std::vector<std::string> palette{"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                   "#9467bd"};
  double tile_stroke = 0.002;
  double side_stroke = 0.006;
};

std::string render_svg(const Ball &b, const std::optional<SideColoring> &coloring,
                       const SvgStyle &style = {});

struct MotionCase {
  bool contiguous = true;
  char first = 'g';  // kind of the move on AB
  char second = 'g'; // kind of the move on BC (contiguous) or CD
  int expected = 0;
  int angle = 0;
  bool near_degenerate = false;
  bool matches() const { return angle == expected; }
};

// The 8 cases: contiguous gg, gr, rg, rr then separated gg, gr, rg, rr.
std::vector<MotionCase> verify_motion_table(const Tolerance &tol = {});

// Angle at B reached by a product of five moves around the base pentagon.
// kinds[e] for the edges BA, AE, ED, DC, CB: 's', 'r' or 'g'.
// Throws std::runtime_error if the product does not fix B.
int motion_angle(const std::array<char, 5> &kinds, const Tolerance &tol = {},
                 bool *near_degenerate = nullptr);

} // namespace pentagrid

#endif
