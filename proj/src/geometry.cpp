#include "pentagrid/geometry.hpp"

#include <cstdio>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace pentagrid {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// ideal points u, v on the border circle
HLined line_between_ideal(Complex u, Complex v) {
  double denom = 1 + (u * std::conj(v)).real();
  if (std::abs(denom) < 1e-12)
    return HLined::through_origin(u);
  return HLined::circle((u + v) / denom);
}

// roots of c z^2 + (d - a) z - b = 0
std::array<Complex, 2> fixed_points(const Isometryd::Matrix &m) {
  Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  if (std::abs(c) < 1e-15) {
    // fixes infinity and b / (d - a)
    Complex z = std::abs(d - a) < 1e-15 ? Complex(0) : b / (d - a);
    return {z, z};
  }
  Complex disc = std::sqrt((d - a) * (d - a) + 4.0 * b * c);
  return {(a - d + disc) / (2.0 * c), (a - d - disc) / (2.0 * c)};
}

void classify_even(const Isometryd &g, const Tolerance &tol, MotionClass &out) {
  const auto &m = g.m;
  const double t = std::abs(m.trace());
  const double slack = std::abs(t - 2);
  out.near_degenerate = slack < 1e-6 && slack > tol.algebraic;
  if (slack <= tol.algebraic) {
    Isometryd::Matrix id = Isometryd::Matrix::Identity();
    if ((m - id).norm() < 1e-9 || (m + id).norm() < 1e-9) {
      out.kind = MotionKind::identity;
      out.near_degenerate = false;
    } else {
      out.kind = MotionKind::ideal_rotation;
      out.ideal_a = out.ideal_b = fixed_points(m)[0];
    }
    return;
  }
  auto fp = fixed_points(m);
  if (t < 2) {
    out.kind = MotionKind::rotation;
    out.center = std::abs(fp[0]) < 1 ? fp[0] : fp[1];
    Complex slope = m(1, 0) * out.center + m(1, 1);
    out.angle = std::arg(1.0 / (slope * slope));
    return;
  }
  out.kind = MotionKind::shift;
  out.ideal_a = fp[0] / std::abs(fp[0]);
  out.ideal_b = fp[1] / std::abs(fp[1]);
  out.axis = line_between_ideal(out.ideal_a, out.ideal_b);
  out.displacement = 2 * std::acosh(t / 2);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", std::abs(v) < 5e-13 ? 0.0 : v);
  return buf;
}

// SVG y axis points down
std::string point(Complex z) { return fmt(z.real()) + " " + fmt(-z.imag()); }

std::string side_command(Complex a, Complex b) {
  HLined l = HLined::through(a, b);
  if (l.diameter)
    return "L " + point(b);
  Complex c = l.center;
  double cross = (a.real() - c.real()) * (-b.imag() + c.imag()) -
                 (-a.imag() + c.imag()) * (b.real() - c.real());
  std::string r = fmt(l.radius());
  return "A " + r + " " + r + " 0 0 " + (cross > 0 ? "1 " : "0 ") + point(b);
}

} // namespace

std::string to_string(MotionKind kind) {
  switch (kind) {
  case MotionKind::identity: return "identity";
  case MotionKind::rotation: return "rotation";
  case MotionKind::ideal_rotation: return "ideal_rotation";
  case MotionKind::shift: return "shift";
  case MotionKind::reflection: return "reflection";
  case MotionKind::glide: return "glide";
  }
  return {};
}

MotionClass classify(const Isometryd &g, const Tolerance &tol) {
  MotionClass out;
  if (!g.odd) {
    classify_even(g, tol, out);
    return out;
  }
  Isometryd square = g * g;
  MotionClass sq;
  classify_even(square, tol, sq);
  if (sq.kind == MotionKind::identity) {
    out.kind = MotionKind::reflection;
    Complex best = 0;
    double moved = -1;
    for (Complex z : {Complex(0), Complex(0.5, 0), Complex(0, 0.5)}) {
      double d = std::abs(g(z) - z);
      if (d > moved) {
        moved = d;
        best = z;
      }
    }
    out.axis = perp_bisector(best, g(best));
    return out;
  }
  out.kind = MotionKind::glide;
  out.near_degenerate = sq.near_degenerate || sq.kind != MotionKind::shift;
  out.ideal_a = sq.ideal_a;
  out.ideal_b = sq.ideal_b;
  out.axis = sq.axis;
  out.displacement = sq.displacement / 2;
  return out;
}

double circumradius_cosh(int p, int q) {
  return 1.0 / (std::tan(kPi / p) * std::tan(kPi / q));
}

double inradius_cosh(int p, int q) { return std::cos(kPi / q) / std::sin(kPi / p); }

std::vector<Complex> base_polygon(int p, int q) {
  if (p < 3 || q < 3 || 2 * (p + q) >= p * q)
    throw std::domain_error("base_polygon: {" + std::to_string(p) + "," +
                            std::to_string(q) +
                            "} is not hyperbolic; need 1/p + 1/q < 1/2");
  const double r = std::tanh(std::acosh(circumradius_cosh(p, q)) / 2);
  std::vector<Complex> v;
  for (int k = 0; k < p; ++k)
    v.push_back(std::polar(r, 2 * kPi * k / p));
  return v;
}

std::array<Complex, 5> tile_vertices(const Isometryd &g) {
  static const auto base = base_polygon(5, 4);
  std::array<Complex, 5> v;
  for (int k = 0; k < 5; ++k)
    v[k] = g(base[k]);
  return v;
}

std::vector<Isometryd> layout(const Ball &b) {
  const auto base = base_polygon(5, 4);
  // son across side k: mirror in side k after the flip taking vertex j to k+1-j
  std::array<Isometryd, 5> across;
  for (int k = 0; k < 5; ++k) {
    Isometryd flip;
    flip.odd = true;
    flip.m << std::polar(1.0, kPi * (k + 1) / 5), 0, 0,
        std::polar(1.0, -kPi * (k + 1) / 5);
    across[k] = reflect(HLined::through(base[k], base[(k + 1) % 5])) * flip;
  }

  std::vector<Isometryd> placed(b.size());
  for (std::size_t i = 1; i < b.size(); ++i) {
    int up = b.adjacency[i][0];
    if (up == kExterior || static_cast<std::size_t>(up) >= i)
      throw std::logic_error("layout: father of " + b.tiles[i].str() +
                             " not placed first");
    placed[i] = placed[up] * across[b.back_slot[i][0]];
  }
  return placed;
}

std::vector<std::array<int, 5>>
geometric_adjacency(const Ball &b, const std::vector<Isometryd> &placed,
                    double tol) {
  struct Side {
    int tile, slot;
    Complex from, to;
  };
  const double cell = 64 * tol;
  auto key = [&](Complex z) {
    return std::pair<long long, long long>(std::llround(z.real() / cell),
                                           std::llround(z.imag() / cell));
  };
  struct Hash {
    std::size_t operator()(const std::pair<long long, long long> &k) const {
      return std::hash<long long>()(k.first * 1000003LL ^ k.second);
    }
  };
  std::unordered_map<std::pair<long long, long long>, std::vector<Side>, Hash> grid;
  std::vector<std::array<Complex, 5>> verts(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    verts[i] = tile_vertices(placed[i]);
    for (int k = 0; k < 5; ++k) {
      Side s{static_cast<int>(i), k, verts[i][k], verts[i][(k + 1) % 5]};
      grid[key((s.from + s.to) / 2.0)].push_back(s);
    }
  }

  std::vector<std::array<int, 5>> adj(
      b.size(), {kExterior, kExterior, kExterior, kExterior, kExterior});
  for (std::size_t i = 0; i < b.size(); ++i)
    for (int k = 0; k < 5; ++k) {
      Complex from = verts[i][k], to = verts[i][(k + 1) % 5];
      auto [kx, ky] = key((from + to) / 2.0);
      for (long long dx = -1; dx <= 1; ++dx)
        for (long long dy = -1; dy <= 1; ++dy) {
          auto it = grid.find({kx + dx, ky + dy});
          if (it == grid.end())
            continue;
          for (const Side &s : it->second)
            if (s.tile != static_cast<int>(i) && std::abs(s.from - to) < tol &&
                std::abs(s.to - from) < tol)
              adj[i][k] = s.tile;
        }
    }
  return adj;
}

std::string render_svg(const Ball &b, const std::optional<SideColoring> &coloring,
                       const SvgStyle &style) {
  if (b.size() == 0)
    throw std::invalid_argument("render_svg: empty ball");
  const auto placed = layout(b);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"-1.05 -1.05 2.10 2.10\" width=\"800\" height=\"800\">\n"
      << "<circle class=\"border\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" "
         "stroke=\"black\" stroke-width=\""
      << fmt(style.tile_stroke) << "\"/>\n";

  auto sides_of = [](const std::array<Complex, 5> &v) {
    std::array<std::string, 5> cmd;
    for (int k = 0; k < 5; ++k)
      cmd[k] = side_command(v[k], v[(k + 1) % 5]);
    return cmd;
  };

  for (std::size_t i = 0; i < b.size(); ++i) {
    auto v = tile_vertices(placed[i]);
    auto cmd = sides_of(v);
    out << "<path class=\"tile\" data-tile=\"" << b.tiles[i].str() << "\" d=\"M "
        << point(v[0]);
    for (const auto &c : cmd)
      out << ' ' << c;
    out << " Z\" fill=\"#f4f1ea\" stroke=\"#555\" stroke-width=\""
        << fmt(style.tile_stroke) << "\"/>\n";
  }

  if (coloring) {
    for (const auto &[address, colors] : *coloring) {
      auto idx = b.index_of(address);
      if (!idx)
        throw std::invalid_argument("render_svg: coloring names " + address.str() +
                                    ", which is not in the ball");
      auto v = tile_vertices(placed[*idx]);
      for (int k = 0; k < 5; ++k) {
        int c = colors[k];
        if (c < 0 || static_cast<std::size_t>(c) >= style.palette.size())
          throw std::invalid_argument("render_svg: colour index " +
                                      std::to_string(c) + " outside the palette");
        out << "<path class=\"side\" data-tile=\"" << address.str()
            << "\" d=\"M " << point(v[k]) << ' '
            << side_command(v[k], v[(k + 1) % 5]) << "\" fill=\"none\" stroke=\""
            << style.palette[c] << "\" stroke-width=\"" << fmt(style.side_stroke)
            << "\"/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

int motion_angle(const std::array<char, 5> &kinds, const Tolerance &tol,
                 bool *near_degenerate) {
  const auto base = base_polygon(5, 4);
  // A..E clockwise
  std::array<Complex, 5> v;
  for (int k = 0; k < 5; ++k)
    v[k] = base[(5 - k) % 5];
  const Complex A = v[0], B = v[1], C = v[2], D = v[3], E = v[4];
  const std::array<std::pair<Complex, Complex>, 5> walk{
      {{B, A}, {A, E}, {E, D}, {D, C}, {C, B}}};

  Isometryd total;
  for (int e = 0; e < 5; ++e) {
    auto [p, q] = walk[e];
    Isometryd move;
    switch (kinds[e]) {
    case 's': move = shift_to(p, q); break;
    case 'r': move = reflect(perp_bisector(p, q)); break;
    case 'g': move = glide(HLined::through(p, q), p, q); break;
    default:
      throw std::invalid_argument(std::string("motion_angle: unknown move '") +
                                  kinds[e] + "'");
    }
    total = move * total;
  }
  if (std::abs(total(B) - B) > tol.geometric)
    throw std::runtime_error("motion_angle: the product does not fix B");

  // read the image of the bisector of (BA, BC) in a frame centred at B
  auto to_b = translate_origin(-B), from_b = translate_origin(B);
  Complex da = to_b(A), dc = to_b(C);
  Complex bisector = da / std::abs(da) + dc / std::abs(dc);
  bisector /= std::abs(bisector);
  Complex image = (to_b * total * from_b)(1e-6 * bisector);
  double turn = std::fmod(std::arg(bisector) - std::arg(image) + 4 * kPi, 2 * kPi);
  double quarters = turn / (kPi / 2);
  if (near_degenerate)
    *near_degenerate = std::abs(quarters - std::round(quarters)) > 1e-4;
  return static_cast<int>(std::floor(quarters + 0.5)) % 4 + 1;
}

std::vector<MotionCase> verify_motion_table(const Tolerance &tol) {
  std::vector<MotionCase> out;
  for (bool contiguous : {true, false}) {
    for (char first : {'g', 'r'})
      for (char second : {'g', 'r'}) {
        MotionCase c;
        c.contiguous = contiguous;
        c.first = first;
        c.second = second;
        bool same = first == second;
        c.expected = contiguous == same ? 2 : 4;
        // edges BA, AE, ED, DC, CB
        std::array<char, 5> kinds{first, 's', 's', 's', 's'};
        kinds[contiguous ? 4 : 3] = second;
        c.angle = motion_angle(kinds, tol, &c.near_degenerate);
        out.push_back(c);
      }
  }
  return out;
}

} // namespace pentagrid
