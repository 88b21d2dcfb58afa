#include "orlicz/domain.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Above this many (node, exterior cell) pairs the distance transform is used.
constexpr double kBruteForcePairs = 4e6;

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::invalid_argument, message);
}

// Number of cells of width h covering `span`, tolerant to round-off when the
// span is an integer multiple of h.
int cell_count(double span, double h) {
  const double c = span / h;
  const double r = std::round(c);
  if (std::abs(c - r) <= 1e-9 * std::max(1.0, c)) return static_cast<int>(r);
  return static_cast<int>(std::ceil(c));
}

// 1D squared distance transform of sampled f (Felzenszwalb–Huttenlocher).
void dt_1d(const std::vector<double>& f, std::vector<double>& d) {
  const int n = static_cast<int>(f.size());
  std::vector<int> v(n);
  std::vector<double> z(n + 1);
  int k = 0;
  int first = -1;
  for (int q = 0; q < n; ++q)
    if (std::isfinite(f[q])) {
      first = q;
      break;
    }
  d.assign(n, kInf);
  if (first < 0) return;
  v[0] = first;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = first + 1; q < n; ++q) {
    if (!std::isfinite(f[q])) continue;
    double s = 0.0;
    while (true) {
      const int p = v[k];
      s = ((f[q] + q * static_cast<double>(q)) - (f[p] + p * static_cast<double>(p))) / (2.0 * (q - p));
      if (k == 0 || s > z[k]) break;
      --k;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

// Exterior cells sharing an edge with an interior cell; nearest exterior
// centers always lie in this set.
std::vector<std::array<int, 2>> exterior_front(const DomainGeometry& g) {
  std::vector<std::array<int, 2>> out;
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      if (g.inside(ix, iy)) continue;
      bool touches = g.inside(ix - 1, iy) || g.inside(ix + 1, iy);
      if (g.dim == 2) touches = touches || g.inside(ix, iy - 1) || g.inside(ix, iy + 1);
      if (touches) out.push_back({ix, iy});
    }
  }
  return out;
}

bool on_boundary(const DomainGeometry& g, const std::array<int, 2>& c) {
  const int ix = c[0], iy = c[1];
  if (!g.inside(ix - 1, iy) || !g.inside(ix + 1, iy)) return true;
  return g.dim == 2 && (!g.inside(ix, iy - 1) || !g.inside(ix, iy + 1));
}

}  // namespace

const char* to_string(ShapeKind kind) noexcept {
  switch (kind) {
    case ShapeKind::interval: return "interval";
    case ShapeKind::intervals: return "intervals";
    case ShapeKind::rectangle: return "rectangle";
    case ShapeKind::disc: return "disc";
    case ShapeKind::mask: return "mask";
  }
  return "?";
}

DomainSpec DomainSpec::interval(double a, double b, double h) { return intervals({{a, b}}, h); }

DomainSpec DomainSpec::intervals(std::vector<std::array<double, 2>> parts, double h) {
  DomainSpec s;
  s.kind = parts.size() == 1 ? ShapeKind::interval : ShapeKind::intervals;
  s.segments = std::move(parts);
  s.h = h;
  return s;
}

DomainSpec DomainSpec::rectangle(double x0, double x1, double y0, double y1, double h) {
  DomainSpec s;
  s.kind = ShapeKind::rectangle;
  s.rect = {x0, x1, y0, y1};
  s.h = h;
  return s;
}

DomainSpec DomainSpec::disc(double cx, double cy, double radius, double h) {
  DomainSpec s;
  s.kind = ShapeKind::disc;
  s.center = {cx, cy};
  s.radius = radius;
  s.h = h;
  return s;
}

DomainSpec DomainSpec::mask(std::vector<std::vector<std::uint8_t>> rows, double h, std::array<double, 2> origin) {
  DomainSpec s;
  s.kind = ShapeKind::mask;
  s.rows = std::move(rows);
  s.h = h;
  s.origin = origin;
  return s;
}

DomainSpec parse_mask(std::istream& in) {
  std::string line;
  double h = 0.0;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("h=", 0) != 0) throw Error(ErrorCode::config, "mask: first line must be h=<spacing>");
    try {
      h = std::stod(line.substr(2));
    } catch (const std::exception&) {
      throw Error(ErrorCode::config, "mask: cannot parse spacing in '" + line + "'");
    }
    have_header = true;
    break;
  }
  if (!have_header) throw Error(ErrorCode::config, "mask: missing h=<spacing> header");
  std::vector<std::vector<std::uint8_t>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::uint8_t> row;
    for (char c : line) {
      if (c == '0' || c == '1')
        row.push_back(c == '1');
      else if (c != ' ' && c != '\t')
        throw Error(ErrorCode::config, std::string("mask: unexpected character '") + c + "'");
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(ErrorCode::config, "mask: rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::config, "mask: no rows");
  return DomainSpec::mask(std::move(rows), h);
}

DomainSpec load_mask_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open mask file " + path);
  return parse_mask(in);
}

DomainGeometry build_domain(const DomainSpec& spec, DistanceMethod method) {
  require(spec.h > 0.0 && std::isfinite(spec.h), "domain: h must be > 0");
  const double h = spec.h;
  DomainGeometry g;
  g.dim = spec.dim();
  g.h = h;

  // Bounding box of the shape; cell i (unpadded) has center lo + (i + ½)h.
  double lo[2] = {0.0, 0.0}, hi[2] = {0.0, 0.0};
  switch (spec.kind) {
    case ShapeKind::interval:
    case ShapeKind::intervals: {
      require(!spec.segments.empty(), "domain: no intervals");
      lo[0] = kInf;
      hi[0] = -kInf;
      for (const auto& seg : spec.segments) {
        require(seg[0] < seg[1], "domain: interval endpoints must satisfy a < b");
        lo[0] = std::min(lo[0], seg[0]);
        hi[0] = std::max(hi[0], seg[1]);
      }
      break;
    }
    case ShapeKind::rectangle:
      require(spec.rect[0] < spec.rect[1] && spec.rect[2] < spec.rect[3], "domain: empty rectangle");
      lo[0] = spec.rect[0];
      hi[0] = spec.rect[1];
      lo[1] = spec.rect[2];
      hi[1] = spec.rect[3];
      break;
    case ShapeKind::disc:
      require(spec.radius > 0.0, "domain: disc radius must be > 0");
      lo[0] = spec.center[0] - spec.radius;
      hi[0] = spec.center[0] + spec.radius;
      lo[1] = spec.center[1] - spec.radius;
      hi[1] = spec.center[1] + spec.radius;
      break;
    case ShapeKind::mask:
      require(!spec.rows.empty() && !spec.rows.front().empty(), "domain: empty mask");
      lo[0] = spec.origin[0];
      lo[1] = spec.origin[1];
      hi[0] = lo[0] + h * static_cast<double>(spec.rows.front().size());
      hi[1] = lo[1] + h * static_cast<double>(spec.rows.size());
      break;
  }

  const int cx = spec.kind == ShapeKind::mask ? static_cast<int>(spec.rows.front().size()) : cell_count(hi[0] - lo[0], h);
  const int cy = g.dim == 1 ? 0 : (spec.kind == ShapeKind::mask ? static_cast<int>(spec.rows.size())
                                                                 : cell_count(hi[1] - lo[1], h));
  g.nx = cx + 2;
  g.ny = g.dim == 1 ? 1 : cy + 2;
  g.origin = {lo[0] - 0.5 * h, g.dim == 1 ? 0.0 : lo[1] - 0.5 * h};
  g.mask.assign(static_cast<std::size_t>(g.nx) * g.ny, 0);

  auto inside_shape = [&](int i, int j) -> bool {
    // i, j are unpadded cell indices; offsets from the box corner are formed
    // first so that scaled shapes rasterize identically.
    const double ox = (i + 0.5) * h, oy = (j + 0.5) * h;
    switch (spec.kind) {
      case ShapeKind::interval:
      case ShapeKind::intervals: {
        const double x = lo[0] + ox;
        for (const auto& seg : spec.segments)
          if (x > seg[0] && x < seg[1]) return true;
        return false;
      }
      case ShapeKind::rectangle: return ox < hi[0] - lo[0] && oy < hi[1] - lo[1];
      case ShapeKind::disc: {
        const double dx = ox - spec.radius, dy = oy - spec.radius;
        return dx * dx + dy * dy < spec.radius * spec.radius;
      }
      case ShapeKind::mask: return spec.rows[spec.rows.size() - 1 - j][i] != 0;
    }
    return false;
  };

  for (int j = 0; j < std::max(cy, 1); ++j) {
    for (int i = 0; i < cx; ++i) {
      if (!inside_shape(i, j)) continue;
      const int ix = i + 1, iy = g.dim == 1 ? 0 : j + 1;
      g.mask[static_cast<std::size_t>(ix + g.nx * iy)] = 1;
    }
  }
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      if (!g.inside(ix, iy)) continue;
      g.nodes.push_back({ix, iy});
      g.coords.push_back(g.coord_of(ix, iy));
    }
  }
  if (g.nodes.empty()) throw Error(ErrorCode::domain_empty, "domain vanishes at this resolution");

  const std::size_t front = exterior_front(g).size();
  if (method == DistanceMethod::automatic)
    method = static_cast<double>(front) * g.size() <= kBruteForcePairs ? DistanceMethod::brute_force
                                                                        : DistanceMethod::transform;
  g.delta = method == DistanceMethod::brute_force ? distance_brute_force(g) : distance_transform(g);
  g.r_omega = *std::max_element(g.delta.begin(), g.delta.end());

  std::vector<std::array<double, 2>> boundary;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (on_boundary(g, g.nodes[k])) boundary.push_back(g.coords[k]);
  double d2 = 0.0;
  for (std::size_t a = 0; a < boundary.size(); ++a)
    for (std::size_t b = a + 1; b < boundary.size(); ++b) {
      const double dx = boundary[a][0] - boundary[b][0], dy = boundary[a][1] - boundary[b][1];
      d2 = std::max(d2, dx * dx + dy * dy);
    }
  g.d_omega = std::sqrt(d2);
  g.measure = static_cast<double>(g.size()) * g.cell_volume();

  g.bbox = {kInf, -kInf, kInf, -kInf};
  for (const auto& c : g.coords) {
    g.bbox[0] = std::min(g.bbox[0], c[0] - 0.5 * h);
    g.bbox[1] = std::max(g.bbox[1], c[0] + 0.5 * h);
    g.bbox[2] = std::min(g.bbox[2], c[1] - (g.dim == 2 ? 0.5 * h : 0.0));
    g.bbox[3] = std::max(g.bbox[3], c[1] + (g.dim == 2 ? 0.5 * h : 0.0));
  }
  return g;
}

std::vector<double> distance_brute_force(const DomainGeometry& g) {
  const auto front = exterior_front(g);
  std::vector<double> out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    long best = std::numeric_limits<long>::max();
    for (const auto& e : front) {
      const long dx = e[0] - g.nodes[k][0], dy = e[1] - g.nodes[k][1];
      best = std::min(best, dx * dx + dy * dy);
    }
    out[k] = g.h * std::sqrt(static_cast<double>(best));
  }
  return out;
}

std::vector<double> distance_transform(const DomainGeometry& g) {
  // Squared distance in cell units to the nearest exterior cell center.
  std::vector<double> d(static_cast<std::size_t>(g.nx) * g.ny);
  std::vector<double> f, out;
  for (int iy = 0; iy < g.ny; ++iy) {
    f.assign(g.nx, 0.0);
    for (int ix = 0; ix < g.nx; ++ix) f[ix] = g.inside(ix, iy) ? kInf : 0.0;
    dt_1d(f, out);
    for (int ix = 0; ix < g.nx; ++ix) d[static_cast<std::size_t>(ix + g.nx * iy)] = out[ix];
  }
  if (g.ny > 1) {
    for (int ix = 0; ix < g.nx; ++ix) {
      f.assign(g.ny, 0.0);
      for (int iy = 0; iy < g.ny; ++iy) f[iy] = d[static_cast<std::size_t>(ix + g.nx * iy)];
      dt_1d(f, out);
      for (int iy = 0; iy < g.ny; ++iy) d[static_cast<std::size_t>(ix + g.nx * iy)] = out[iy];
    }
  }
  std::vector<double> result(g.size());
  for (std::size_t k = 0; k < g.size(); ++k)
    result[k] = g.h * std::sqrt(d[static_cast<std::size_t>(g.nodes[k][0] + g.nx * g.nodes[k][1])]);
  return result;
}

InvariantCheck check_domain_invariants(const DomainGeometry& g) {
  InvariantCheck out;
  auto fail = [&](const std::string& what) { out.violations.push_back(what); };
  if (!(g.measure > 0.0)) fail("measure not positive");
  for (double d : g.delta)
    if (!(d > 0.0)) {
      fail("delta not positive on an interior node");
      break;
    }
  if (g.r_omega != *std::max_element(g.delta.begin(), g.delta.end())) fail("r_Omega differs from max delta");
  if (g.r_omega > g.d_omega / 2.0 + g.h * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "r_Omega=" << g.r_omega << " exceeds d_Omega/2 + h=" << g.d_omega / 2.0 + g.h;
    fail(os.str());
  }
  return out;
}

}  // namespace orlicz
