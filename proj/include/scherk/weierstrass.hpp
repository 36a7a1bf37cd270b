#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "scherk/quadrature.hpp"
#include "scherk/surfaces.hpp"

namespace scherk {

// Which closed form of the Weierstrass function R(w) to use.
//   Derived:   R = F'(w) with x - iy = F(xi) + G(conj xi) built from the
//              hodographic solution of the height function. Reproduces the
//              height through the W-E integrals.
//   AsPrinted: sqrt(1+a^2)(1+ia)/((1+a^2)+(1 +/- ia)^2 w^2) + 1/(1-w^2).
// Both agree at a = 0 (Euclidean), where R = 2/(1-w^4).
enum class RForm { Derived, AsPrinted };

// Third W-E integrand: 2wR(w) (Standard) or 2R(w) (AsPrinted).
enum class ZIntegrand { Standard, AsPrinted };

struct WeOptions {
  RForm r_form = RForm::Derived;
  ZIntegrand z_integrand = ZIntegrand::Standard;
};

// Throws Error(PoleProximity) if a denominator of R is smaller than
// `pole_threshold` in magnitude. Only Euclidean and Lorentz are supported.
Complex weierstrass_R(const SurfaceSpec& spec, Complex w, RForm form = RForm::Derived,
                      double pole_threshold = 1e-12);

// The four poles of R, all on the unit circle.
std::array<Complex, 4> umbilic_poles(const SurfaceSpec& spec, RForm form = RForm::Derived);

struct WEPoint {
  Complex xi;
  double x = 0.0;
  double y = 0.0;
  double phi = 0.0;
  double est_error = 0.0;
  int subdivisions = 0;
};

// (x, y, phi) at xi by integrating the W-E forms from the base point 0, where
// (x, y, phi) = (0, 0, 0). Requires |xi| < 1 - pole_clearance.
WEPoint we_integrate(const SurfaceSpec& spec, Complex xi, const QuadratureConfig& cfg = {},
                     const WeOptions& opts = {});

// Same, along the polyline 0 -> path[0] -> path[1] -> ... ; the last vertex is
// the evaluation point.
WEPoint we_integrate_path(const SurfaceSpec& spec, std::span<const Complex> path,
                          const QuadratureConfig& cfg = {}, const WeOptions& opts = {});

// Deviation of a closed-form chart value from the numerically integrated one.
struct ChartComparison {
  double dx = 0.0;
  double dy = 0.0;
  double dphi = 0.0;
  double max_deviation = 0.0;
  // |phi - height(x, y)| for the closed-form (x, y, phi); NaN if the point is
  // off the height domain.
  double height_gap = 0.0;
  bool finite = true;
};

ChartComparison compare_with_quadrature(const SurfaceSpec& spec, Complex xi, double x, double y,
                                        double phi, const QuadratureConfig& cfg = {});

// lambda_1..lambda_5 closed forms evaluated term for term with principal
// branches, assembled as x = Im l1 + Re l2, y = Im l3 + 2 Re l4, phi = Re l5.
struct LambdaData {
  std::array<Complex, 5> lambda{};
  double x = 0.0;
  double y = 0.0;
  double phi = 0.0;
  bool branch_warning = false;
  // An intermediate was infinite (1/xi at xi = 0, log 0 at a = 0).
  bool singular = false;
  std::vector<std::string> notes;
  ChartComparison comparison;
};

// Requires |xi| <= 0.5.
LambdaData lambda_data(double a, Complex xi, const QuadratureConfig& cfg = {});

// mu_1..mu_6 closed forms for the Lorentz chart, assembled as
// x = Re m1 + Im m2, y = Re m3 + Im m4, phi = Re m5 + Re m6.
struct MuData {
  std::array<Complex, 6> mu{};
  double x = 0.0;
  double y = 0.0;
  double phi = 0.0;
  bool branch_warning = false;
  bool singular = false;
  std::vector<std::string> notes;
  ChartComparison comparison;
};

// Requires |zeta| <= 0.5.
MuData mu_data(double a, Complex zeta, const QuadratureConfig& cfg = {});

struct HodographPair {
  Complex first;
  Complex second;
  bool branch_warning = false;
};

// (u, v) -> (xi, xibar). Euclidean: xi = (sqrt(1+4uv)-1)/(2v); Lorentz:
// zeta = (1-sqrt(1-4uv))/(2v). Evaluated in the rationalized form
// 2u/(1+sqrt(1 +/- 4uv)), which is exact at u = 0 or v = 0.
HodographPair hodograph_forward(Signature signature, Complex u, Complex v);

// (xi, xibar) -> (u, v) = (xi, xibar)/(1 -/+ xi xibar).
HodographPair hodograph_inverse(Signature signature, Complex xi, Complex xibar);

}  // namespace scherk
