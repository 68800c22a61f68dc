#pragma once

#include <span>
#include <vector>

namespace pclique {

// A position on the unit d-torus [0,1)^d.
class Point {
 public:
  // Throws UsageError when coords is empty or a coordinate is outside [0,1).
  explicit Point(std::vector<double> coords);

  // Reduces every coordinate modulo 1 first.
  static Point wrapped(std::vector<double> coords);

  int dimension() const noexcept { return static_cast<int>(coords_.size()); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

// Toroidal distance: Euclidean combination of min(|x_i - y_i|, 1 - |x_i - y_i|).
// Throws UsageError on a dimension mismatch.
double torus_distance(std::span<const double> x, std::span<const double> y);
double torus_distance(const Point& x, const Point& y);

// Volume of the unit d-ball, pi^{d/2} / Gamma(d/2 + 1). phi_0 = 1.
double unit_ball_volume(int d);

// Two radius-r balls whose centers are center_distance apart.
struct LensSpec {
  double center_distance = 0.0;
  double radius = 0.0;
  int dimension = 1;
};

// Volume of the intersection of the two balls as a fraction of one ball's
// volume. Depends only on center_distance / radius. Closed form for d <= 3,
// quadrature above.
//
// Throws UsageError when center_distance > radius (the centers would not be
// adjacent) or the spec is otherwise malformed, ModelDomainError when
// radius >= 1/4.
double lens_volume_fraction(const LensSpec& spec);

// The lens fraction at center_distance == radius: the smallest value the
// common-neighbour region of an edge can take.
double min_lens_fraction(int d);

// Volume fraction of one blocking region.
//
// Put the centers at distance r along the first axis. R1 is the part of the
// lens whose second coordinate (offset from the center axis) exceeds r/2,
// R2 the mirror image below -r/2. Points of R1 and R2 are more than r apart,
// so common neighbours found in both cannot form a clique. The value returned
// is vol(R1) / (phi_d r^d); vol(R2) is the same by symmetry.
//
// d = 1 has no second coordinate; there R1 and R2 are the two halves of the
// lens, giving 1/4. Points in those halves are at most r apart, so the
// separation property does not hold in one dimension.
double blocking_region_fraction(int d);

namespace detail {
// Quadrature route for the lens fraction, valid for every d >= 1.
// u = center_distance / radius in [0, 1].
double lens_fraction_quadrature(double u, int d);
}  // namespace detail

}  // namespace pclique
