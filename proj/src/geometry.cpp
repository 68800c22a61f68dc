#include "pclique/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pclique/errors.hpp"

namespace pclique {
namespace {

constexpr double kPi = std::numbers::pi;

void check_dimension(int d) {
  if (d < 1) throw UsageError("dimension must be >= 1, got " + std::to_string(d));
}

template <class F>
double integrate(F f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

double lens_fraction_closed_form(double u, int d) {
  switch (d) {
    case 1:
      return 1.0 - u / 2.0;
    case 2:
      return (2.0 * std::acos(u / 2.0) - (u / 2.0) * std::sqrt(4.0 - u * u)) / kPi;
    case 3:
      return (4.0 + u) * (2.0 - u) * (2.0 - u) / 16.0;
    default:
      return detail::lens_fraction_quadrature(u, d);
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw UsageError("point needs at least one coordinate");
  for (double c : coords_) {
    if (!(c >= 0.0 && c < 1.0)) {
      throw UsageError("point coordinate outside [0,1): " + std::to_string(c));
    }
  }
}

Point Point::wrapped(std::vector<double> coords) {
  for (double& c : coords) {
    c -= std::floor(c);
    if (c >= 1.0) c = 0.0;  // floor rounding on tiny negatives
  }
  return Point(std::move(coords));
}

double torus_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw UsageError("torus_distance: dimension mismatch (" + std::to_string(x.size()) +
                     " vs " + std::to_string(y.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double diff = std::abs(x[i] - y[i]);
    const double wrapped = std::min(diff, 1.0 - diff);
    sum += wrapped * wrapped;
  }
  return std::sqrt(sum);
}

double torus_distance(const Point& x, const Point& y) {
  return torus_distance(x.coords(), y.coords());
}

double unit_ball_volume(int d) {
  if (d == 0) throw UsageError("unit_ball_volume: d must be >= 1");
  if (d < 0) check_dimension(d);
  const double half = d / 2.0;
  return std::pow(kPi, half) / std::tgamma(half + 1.0);
}

double lens_volume_fraction(const LensSpec& spec) {
  check_dimension(spec.dimension);
  if (!(spec.radius > 0.0)) throw UsageError("lens radius must be positive");
  if (spec.radius >= 0.25) {
    throw ModelDomainError("lens radius must be < 1/4, got " + std::to_string(spec.radius));
  }
  if (!(spec.center_distance >= 0.0)) throw UsageError("lens center distance must be >= 0");
  if (spec.center_distance > spec.radius) {
    throw UsageError("lens center distance exceeds radius: endpoints not adjacent");
  }
  return lens_fraction_closed_form(spec.center_distance / spec.radius, spec.dimension);
}

double min_lens_fraction(int d) {
  check_dimension(d);
  return lens_fraction_closed_form(1.0, d);
}

double blocking_region_fraction(int d) {
  check_dimension(d);
  if (d == 1) return 0.25;
  if (d == 2) return (kPi / 6.0 - (std::sqrt(3.0) - 1.0) / 2.0) / kPi;
  // Polar coordinates in the (axis, offset) plane; the remaining d-2
  // directions integrate in closed form.
  const double half_d = d / 2.0;
  const double integral = integrate(
      [half_d](double theta) {
        const double c = std::cos(theta);
        const double base = 1.0 - 1.0 / (4.0 * c * c);
        return base > 0.0 ? std::pow(base, half_d) : 0.0;
      },
      kPi / 4.0, kPi / 3.0);
  const double phi_lower = d == 2 ? 1.0 : unit_ball_volume(d - 2);
  return 4.0 * phi_lower / (d * unit_ball_volume(d)) * integral;
}

namespace detail {

double lens_fraction_quadrature(double u, int d) {
  check_dimension(d);
  if (!(u >= 0.0 && u <= 2.0)) throw UsageError("lens ratio outside [0,2]");
  // Slices perpendicular to the center axis, s = cos(theta).
  const double integral = integrate(
      [d](double theta) { return std::pow(std::sin(theta), d); }, 0.0, std::acos(u / 2.0));
  const double phi_slice = d == 1 ? 1.0 : unit_ball_volume(d - 1);
  return 2.0 * phi_slice / unit_ball_volume(d) * integral;
}

}  // namespace detail
}  // namespace pclique
