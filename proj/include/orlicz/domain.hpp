#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "orlicz/young.hpp"

namespace orlicz {

enum class ShapeKind { interval, intervals, rectangle, disc, mask };
const char* to_string(ShapeKind kind) noexcept;

/// What to rasterize and at which spacing. Cells whose centers fall inside the
/// shape become interior nodes.
struct DomainSpec {
  ShapeKind kind = ShapeKind::interval;
  double h = 0.0;
  // interval / intervals: [lo, hi) pairs on the line; rectangle: {x0, x1, y0, y1}.
  std::vector<std::array<double, 2>> segments;
  std::array<double, 4> rect{};
  // disc
  std::array<double, 2> center{};
  double radius = 0.0;
  // mask: rows[0] is the top row; origin is the lower-left corner of the grid.
  std::vector<std::vector<std::uint8_t>> rows;
  std::array<double, 2> origin{};

  static DomainSpec interval(double a, double b, double h);
  static DomainSpec intervals(std::vector<std::array<double, 2>> parts, double h);
  static DomainSpec rectangle(double x0, double x1, double y0, double y1, double h);
  static DomainSpec disc(double cx, double cy, double radius, double h);
  static DomainSpec mask(std::vector<std::vector<std::uint8_t>> rows, double h, std::array<double, 2> origin = {});

  int dim() const { return kind == ShapeKind::interval || kind == ShapeKind::intervals ? 1 : 2; }
};

/// Header line "h=<spacing>" followed by rows of 0/1 characters.
DomainSpec parse_mask(std::istream& in);
DomainSpec load_mask_file(const std::string& path);

enum class DistanceMethod { automatic, brute_force, transform };

/// Rasterized domain on a grid padded by one exterior cell on every side.
struct DomainGeometry {
  int dim = 1;
  double h = 0.0;
  int nx = 0;  // padded extents; ny = 1 in one dimension
  int ny = 1;
  std::array<double, 2> origin{};  // center of padded cell (0, 0)
  std::vector<std::uint8_t> mask;  // padded grid, index ix + nx·iy
  std::vector<std::array<int, 2>> nodes;
  std::vector<std::array<double, 2>> coords;
  std::vector<double> delta;  // distance to the nearest exterior cell center
  double r_omega = 0.0;
  double d_omega = 0.0;
  double measure = 0.0;
  std::array<double, 4> bbox{};  // xmin, xmax, ymin, ymax over interior cells

  std::size_t size() const { return nodes.size(); }
  double cell_volume() const { return dim == 1 ? h : h * h; }
  bool inside(int ix, int iy) const {
    return ix >= 0 && iy >= 0 && ix < nx && iy < ny && mask[static_cast<std::size_t>(ix + nx * iy)];
  }
  std::array<double, 2> coord_of(int ix, int iy) const {
    return {origin[0] + ix * h, dim == 1 ? 0.0 : origin[1] + iy * h};
  }
};

DomainGeometry build_domain(const DomainSpec& spec, DistanceMethod method = DistanceMethod::automatic);

/// δ by exhaustive search over exterior cells, and by the exact separable
/// squared-distance transform.
std::vector<double> distance_brute_force(const DomainGeometry& g);
std::vector<double> distance_transform(const DomainGeometry& g);

InvariantCheck check_domain_invariants(const DomainGeometry& g);

}  // namespace orlicz
