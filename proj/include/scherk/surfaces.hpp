#pragma once

#include <complex>

namespace scherk {

using Complex = std::complex<double>;

enum class Signature { Euclidean, Lorentz, BornInfeldWick };

// Affine Scherk family: height log(cos(y+ax)/cos(sqrt(1+a^2)x)) and its
// Lorentzian (cosh) and wick-rotated (cos(iy+ax)) counterparts.
struct SurfaceSpec {
  double a = 0.0;
  Signature signature = Signature::Euclidean;

  // sqrt(1+a^2), the dilation of the x generator.
  double stretch() const noexcept;
};

// Height and its first and second partials at one point.
struct Jet2 {
  double phi = 0.0;
  double phi_x = 0.0;
  double phi_y = 0.0;
  double phi_xx = 0.0;
  double phi_xy = 0.0;
  double phi_yy = 0.0;
};

// Distance kept from cos(.)=0 lines and from the spacelike boundary.
inline constexpr double kDefaultDomainMargin = 1e-3;

bool in_domain(const SurfaceSpec& spec, double x, double y,
               double margin = kDefaultDomainMargin);

// Real height for Euclidean and Lorentz signatures. Throws Error(Domain) off
// the domain, and for BornInfeldWick (use wick_height).
double height(const SurfaceSpec& spec, double x, double y);

struct WickValue {
  Complex value;
  // Set when cos(iy+ax)/cos(sx) lies within 1e-12 relative of the negative
  // real axis, where the principal log jumps.
  bool branch_warning = false;
};

// log(cos(iy+ax)/cos(sqrt(1+a^2)x)), principal branch.
WickValue wick_height(double a, double x, double y);

// Closed-form jet. BornInfeldWick is supported for a = 0 only, where the
// surface log(cosh y / cos x) is real.
Jet2 analytic_jet(const SurfaceSpec& spec, double x, double y);

// (1+phi_y^2)phi_xx - 2 phi_x phi_y phi_xy + (1+phi_x^2)phi_yy
double minimal_residual(const Jet2& j) noexcept;

// (1-phi_y^2)phi_xx + 2 phi_x phi_y phi_xy + (1-phi_x^2)phi_yy; throws
// SpacelikeViolation unless phi_x^2 + phi_y^2 < 1.
double maximal_residual(const Jet2& j);

// Which coordinate plays the role of time in the Born-Infeld equation.
// TimeY pairs with the y -> iy wick rotation of the Euclidean surface:
//   (1-phi_y^2)phi_xx + 2 phi_x phi_y phi_xy - (1+phi_x^2)phi_yy.
// TimeX is the x -> ix variant:
//   (1+phi_y^2)phi_xx - 2 phi_x phi_y phi_xy + (phi_x^2-1)phi_yy.
enum class BornInfeldAxis { TimeY, TimeX };

double born_infeld_residual(const Jet2& j,
                            BornInfeldAxis axis = BornInfeldAxis::TimeY) noexcept;

// Residual of the equation the surface solves (minimal, maximal, or y-time
// Born-Infeld) at (x, y), with the jet and the residual carried in long
// double. The terms grow like sec^2(sx) sec^2(t) near the singular lines, so
// in double the cancellation leaves about eps times that.
double surface_residual(const SurfaceSpec& spec, double x, double y);

}  // namespace scherk
