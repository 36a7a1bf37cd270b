#include "scherk/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "scherk/error.hpp"

namespace scherk {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kCutWindow = 1e-6;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_real_signature(const SurfaceSpec& spec) {
  if (spec.signature == Signature::BornInfeldWick) {
    throw Error(ErrorKind::Domain, "W-E data exists for Euclidean and Lorentz signatures only");
  }
}

// Unit phase (1+ia)/sqrt(1+a^2).
Complex unit_phase(double a) { return Complex(1.0, a) / std::sqrt(1.0 + a * a); }

double distance_to_segment(Complex p, Complex from, Complex to) {
  const Complex d = to - from;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - from);
  const double t = std::clamp(((p - from) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (from + t * d));
}

// Principal-branch helpers that record proximity to their cuts.
class BranchTracker {
 public:
  Complex log(Complex z, const char* what) {
    if (z == Complex(0.0, 0.0)) {
      singular_ = true;
      notes_.push_back(std::string("log of zero in ") + what);
    } else if (z.real() < 0.0 && std::abs(z.imag()) < kCutWindow) {
      near_cut(what);
    }
    return std::log(z);
  }

  Complex sqrt(Complex z, const char* what) {
    if (z.real() < 0.0 && std::abs(z.imag()) < kCutWindow) near_cut(what);
    return std::sqrt(z);
  }

  Complex pow(Complex z, double p, const char* what) {
    if (z.real() < 0.0 && std::abs(z.imag()) < kCutWindow) near_cut(what);
    return std::exp(p * std::log(z));
  }

  // atan cuts run along the imaginary axis from +-i to +-i*infinity.
  Complex atan(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      singular_ = true;
      notes_.push_back(std::string("infinite argument to atan in ") + what);
      return {kNaN, kNaN};
    }
    const double im = std::abs(z.imag());
    const double dist = im >= 1.0 ? std::abs(z.real()) : std::hypot(z.real(), 1.0 - im);
    if (dist < kCutWindow) near_cut(what);
    return std::atan(z);
  }

  Complex divide(Complex num, Complex den, const char* what) {
    if (den == Complex(0.0, 0.0)) {
      singular_ = true;
      notes_.push_back(std::string("division by zero in ") + what);
      return {std::numeric_limits<double>::infinity(), 0.0};
    }
    return num / den;
  }

  bool warned() const { return warned_ || singular_; }
  bool singular() const { return singular_; }
  std::vector<std::string> take_notes() { return std::move(notes_); }

 private:
  void near_cut(const char* what) {
    warned_ = true;
    notes_.push_back(std::string("argument within 1e-6 of a branch cut in ") + what);
  }

  bool warned_ = false;
  bool singular_ = false;
  std::vector<std::string> notes_;
};

bool all_finite(double x, double y, double phi) {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(phi);
}

}  // namespace

Complex weierstrass_R(const SurfaceSpec& spec, Complex w, RForm form, double pole_threshold) {
  require_real_signature(spec);
  const double a = spec.a;
  const bool lorentz = spec.signature == Signature::Lorentz;
  const auto check = [&](Complex den) {
    if (std::abs(den) < pole_threshold) {
      throw Error(ErrorKind::PoleProximity, "R(w) evaluated at a pole");
    }
    return den;
  };
  const Complex w2 = w * w;

  if (form == RForm::AsPrinted) {
    const double s2 = 1.0 + a * a;
    const Complex lead = std::sqrt(s2) * Complex(1.0, a);
    const Complex mix = lorentz ? Complex(1.0, -a) : Complex(1.0, a);
    return lead / check(s2 + mix * mix * w2) + 1.0 / check(1.0 - w2);
  }

  const Complex c2 = unit_phase(a) * unit_phase(a);
  if (lorentz) {
    return -c2 / check(1.0 - c2 * w2) - 1.0 / check(1.0 + w2);
  }
  return c2 / check(1.0 + c2 * w2) + 1.0 / check(1.0 - w2);
}

std::array<Complex, 4> umbilic_poles(const SurfaceSpec& spec, RForm form) {
  require_real_signature(spec);
  const double a = spec.a;
  const double s = spec.stretch();
  const bool lorentz = spec.signature == Signature::Lorentz;
  Complex q;
  if (form == RForm::AsPrinted) {
    q = kI * s / (lorentz ? Complex(1.0, -a) : Complex(1.0, a));
  } else if (lorentz) {
    // 1 - c^2 w^2 = 0 gives w = conj(c); the second family sits at +-i.
    const Complex c = unit_phase(a);
    return {kI, -kI, std::conj(c), -std::conj(c)};
  } else {
    q = kI * std::conj(unit_phase(a));
  }
  return {Complex(1.0, 0.0), Complex(-1.0, 0.0), q, -q};
}

WEPoint we_integrate(const SurfaceSpec& spec, Complex xi, const QuadratureConfig& cfg,
                     const WeOptions& opts) {
  const Complex path[] = {xi};
  return we_integrate_path(spec, path, cfg, opts);
}

WEPoint we_integrate_path(const SurfaceSpec& spec, std::span<const Complex> path,
                          const QuadratureConfig& cfg, const WeOptions& opts) {
  require_real_signature(spec);
  if (path.empty()) throw Error(ErrorKind::Domain, "empty integration path");
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0) || cfg.max_subdivisions < 1) {
    throw Error(ErrorKind::Domain, "quadrature tolerances must be positive");
  }
  for (const Complex& v : path) {
    if (!(std::abs(v) < 1.0 - cfg.pole_clearance)) {
      throw Error(ErrorKind::Domain, "path vertex outside the disc |w| < 1 - pole_clearance");
    }
  }
  const auto poles = umbilic_poles(spec, opts.r_form);
  Complex from{0.0, 0.0};
  for (const Complex& to : path) {
    for (const Complex& p : poles) {
      if (distance_to_segment(p, from, to) < cfg.pole_clearance) {
        throw Error(ErrorKind::PoleProximity, "integration path passes too close to a pole");
      }
    }
    from = to;
  }

  const bool lorentz = spec.signature == Signature::Lorentz;
  const bool printed_z = opts.z_integrand == ZIntegrand::AsPrinted;
  auto integrand = [&](Complex w) {
    const Complex r = weierstrass_R(spec, w, opts.r_form);
    const Complex w2 = w * w;
    const Complex minus = r * (1.0 - w2);
    const Complex plus = r * (1.0 + w2);
    return std::array<Complex, 3>{lorentz ? plus : minus, kI * (lorentz ? minus : plus),
                                  printed_z ? 2.0 * r : 2.0 * w * r};
  };

  WEPoint out;
  out.xi = path.back();
  from = Complex(0.0, 0.0);
  std::array<Complex, 3> total{};
  std::array<double, 3> error{};
  for (const Complex& to : path) {
    if (to != from) {
      const auto seg = integrate_segment<3>(integrand, from, to, cfg);
      if (!seg.converged) {
        throw Error(ErrorKind::ToleranceNotMet, "subdivision budget exhausted in we_integrate");
      }
      for (std::size_t c = 0; c < 3; ++c) {
        total[c] += seg.value[c];
        error[c] += seg.error[c];
      }
      out.subdivisions += seg.subdivisions;
    }
    from = to;
  }
  out.x = total[0].real();
  out.y = total[1].real();
  out.phi = total[2].real();
  out.est_error = *std::max_element(error.begin(), error.end());
  return out;
}

ChartComparison compare_with_quadrature(const SurfaceSpec& spec, Complex xi, double x, double y,
                                        double phi, const QuadratureConfig& cfg) {
  ChartComparison cmp;
  const WEPoint ref = we_integrate(spec, xi, cfg);
  cmp.finite = all_finite(x, y, phi);
  cmp.dx = std::abs(x - ref.x);
  cmp.dy = std::abs(y - ref.y);
  cmp.dphi = std::abs(phi - ref.phi);
  cmp.max_deviation = cmp.finite ? std::max({cmp.dx, cmp.dy, cmp.dphi})
                                 : std::numeric_limits<double>::infinity();
  cmp.height_gap = cmp.finite && in_domain(spec, x, y, 0.0)
                       ? std::abs(phi - height(spec, x, y))
                       : kNaN;
  return cmp;
}

LambdaData lambda_data(double a, Complex xi, const QuadratureConfig& cfg) {
  if (!(std::abs(xi) <= 0.5)) throw Error(ErrorKind::Domain, "lambda_data needs |xi| <= 0.5");
  BranchTracker br;
  const double s = std::sqrt(1.0 + a * a);
  const Complex ia_plus = Complex(a, 1.0);    // i + a
  const Complex a_minus = Complex(a, -1.0);   // a - i
  const Complex sq_plus = br.sqrt(ia_plus, "sqrt(i+a)");
  const Complex sq_minus = br.sqrt(a_minus, "sqrt(a-i)");
  const Complex shared_den = kI * sq_plus * br.pow(a_minus, 1.5, "(a-i)^(3/2)");
  const Complex slope = br.divide(sq_minus, kI * sq_plus, "sqrt(a-i)/(i sqrt(i+a))");

  LambdaData d;
  auto& l = d.lambda;
  l[0] = -ia_plus / s * xi;
  l[1] = xi - 2.0 * s * br.atan(slope * xi, "lambda2") / shared_den;
  l[2] = (Complex(1.0, -a) / s - 1.0) * xi + 2.0 * br.atan(xi, "lambda3");
  // The printed argument of lambda4 carries xi in the denominator.
  const Complex arg4 = br.divide(sq_minus, kI * sq_plus * xi, "lambda4 argument");
  l[3] = a * s * br.atan(arg4, "lambda4") / shared_den;
  const Complex xi2 = xi * xi;
  const Complex bracket = 2.0 * br.atan(a - 2.0 * a / (1.0 + xi2), "lambda5 atan") -
                          kI * br.log(a * a * (xi2 - 1.0) * (xi2 - 1.0), "lambda5 log") +
                          (xi2 + 1.0) * (xi2 + 1.0);
  l[4] = ia_plus / (2.0 * s) * bracket - br.log(1.0 - xi2, "log(1-xi^2)");

  d.x = l[0].imag() + l[1].real();
  d.y = l[2].imag() + 2.0 * l[3].real();
  d.phi = l[4].real();
  d.branch_warning = br.warned();
  d.singular = br.singular();
  d.notes = br.take_notes();
  d.comparison = compare_with_quadrature(SurfaceSpec{a, Signature::Euclidean}, xi, d.x, d.y,
                                         d.phi, cfg);
  return d;
}

MuData mu_data(double a, Complex zeta, const QuadratureConfig& cfg) {
  if (!(std::abs(zeta) <= 0.5)) throw Error(ErrorKind::Domain, "mu_data needs |zeta| <= 0.5");
  BranchTracker br;
  const double s = std::sqrt(1.0 + a * a);
  const Complex ia_plus = Complex(a, 1.0);    // i + a
  const Complex ia_minus = Complex(-a, 1.0);  // i - a
  const Complex sq_plus = br.sqrt(ia_plus, "sqrt(i+a)");
  const Complex sq_minus = br.sqrt(ia_minus, "sqrt(i-a)");
  const Complex linear = -(a * a + kI * (s + 2.0) * a + s - 1.0) * zeta / (ia_plus * ia_plus);
  const Complex log_ratio = br.log((1.0 + zeta) / (1.0 - zeta), "log((1+z)/(1-z))");
  const Complex atan_term = br.atan(sq_plus / sq_minus * zeta, "atan(sqrt(i+a)/sqrt(i-a) z)");

  MuData d;
  auto& m = d.mu;
  m[0] = linear + log_ratio;
  m[1] = -2.0 * a * sq_minus * s / br.pow(ia_plus, 2.5, "(i+a)^(5/2)") * atan_term;
  m[2] = sq_minus * s / br.pow(ia_plus, 2.5, "(i+a)^(5/2)") *
         br.log((sq_minus - kI * sq_plus * zeta) / (sq_minus + kI * sq_plus * zeta), "mu3 log");
  m[3] = linear;
  m[4] = log_ratio;
  m[5] = -2.0 * sq_minus * s / br.pow(ia_plus, 1.5, "(i+a)^(3/2)") * atan_term;

  d.x = m[0].real() + m[1].imag();
  d.y = m[2].real() + m[3].imag();
  d.phi = m[4].real() + m[5].real();
  d.branch_warning = br.warned();
  d.singular = br.singular();
  d.notes = br.take_notes();
  d.comparison =
      compare_with_quadrature(SurfaceSpec{a, Signature::Lorentz}, zeta, d.x, d.y, d.phi, cfg);
  return d;
}

HodographPair hodograph_forward(Signature signature, Complex u, Complex v) {
  if (signature == Signature::BornInfeldWick) {
    throw Error(ErrorKind::Domain, "hodograph map defined for Euclidean and Lorentz only");
  }
  const double sign = signature == Signature::Euclidean ? 1.0 : -1.0;
  const Complex radicand = 1.0 + sign * 4.0 * u * v;
  HodographPair out;
  out.branch_warning = radicand.real() < 0.0 && std::abs(radicand.imag()) < kCutWindow;
  const Complex denom = 1.0 + std::sqrt(radicand);
  if (std::abs(denom) == 0.0) throw Error(ErrorKind::Domain, "hodograph map at 1 + sqrt(.) = 0");
  out.first = 2.0 * u / denom;
  out.second = 2.0 * v / denom;
  return out;
}

HodographPair hodograph_inverse(Signature signature, Complex xi, Complex xibar) {
  if (signature == Signature::BornInfeldWick) {
    throw Error(ErrorKind::Domain, "hodograph map defined for Euclidean and Lorentz only");
  }
  const double sign = signature == Signature::Euclidean ? -1.0 : 1.0;
  const Complex denom = 1.0 + sign * xi * xibar;
  if (std::abs(denom) < 1e-14) throw Error(ErrorKind::Domain, "singular hodograph product");
  return {xi / denom, xibar / denom, false};
}

}  // namespace scherk
