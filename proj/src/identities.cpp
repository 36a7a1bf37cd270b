#include "scherk/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "scherk/error.hpp"
#include "scherk/summation.hpp"

namespace scherk {
namespace {

// log(1+z) on the principal branch, accurate for small |z|.
Complex log1p_complex(Complex z) {
  const double re = 0.5 * std::log1p(2.0 * z.real() + std::norm(z));
  return {re, std::atan2(z.imag(), 1.0 + z.real())};
}

bool near_odd_half_pi(Complex z) {
  const double k = std::round(z.real() / std::numbers::pi - 0.5);
  const Complex nearest((k + 0.5) * std::numbers::pi, 0.0);
  return std::abs(z - nearest) < 1e-8;
}

std::string convergence_warning(std::int64_t K) {
  return "ConvergenceWarning: last term exceeds rel_tol * partial sum at K = " +
         std::to_string(K);
}

}  // namespace

double alpha_k(std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::Domain, "alpha_k needs k >= 1");
  return (static_cast<double>(k) - 0.5) * std::numbers::pi;
}

SeriesResult<Complex> ramanujan_log_sum(Complex shifted, Complex anchor, std::int64_t K,
                                        double rel_tol) {
  if (K < 1) throw Error(ErrorKind::Domain, "K must be >= 1");
  if (near_odd_half_pi(anchor) || near_odd_half_pi(-anchor)) {
    throw Error(ErrorKind::Domain, "A is within 1e-8 of an odd multiple of pi/2");
  }
  // log((alpha - B)/(alpha - A)) = log1p((A - B)/(alpha - A)), and the mirror
  // factor log1p((B - A)/(alpha + A)).
  const Complex gap = anchor - shifted;
  CompensatedSum<Complex> sum;
  Complex term{};
  for (std::int64_t k = 1; k <= K; ++k) {
    const double alpha = alpha_k(k);
    const Complex lo = alpha - anchor;
    const Complex hi = alpha + anchor;
    const double scale = 1e-12 * alpha;
    if (std::abs(alpha - shifted) < scale || std::abs(alpha + shifted) < scale ||
        std::abs(lo) < scale || std::abs(hi) < scale) {
      throw Error(ErrorKind::SingularFactor, "vanishing factor at k = " + std::to_string(k));
    }
    term = log1p_complex(gap / lo) + log1p_complex(-gap / hi);
    sum += term;
  }
  SeriesResult<Complex> out;
  out.value = sum.value();
  out.last_term = term;
  out.tail_estimate = std::abs(term) * static_cast<double>(K);
  if (std::abs(term) > rel_tol * std::abs(out.value)) {
    out.warnings.push_back(convergence_warning(K));
  }
  return out;
}

SeriesResult<double> affine_ramanujan(double a, double x, double y, std::int64_t K) {
  const SurfaceSpec spec{a, Signature::Euclidean};
  if (!in_domain(spec, x, y, 0.0)) {
    throw Error(ErrorKind::Domain, "affine_ramanujan point outside the Euclidean domain");
  }
  const auto raw = ramanujan_log_sum(Complex(y + a * x, 0.0), Complex(spec.stretch() * x, 0.0), K);
  SeriesResult<double> out;
  out.value = raw.value.real();
  out.last_term = raw.last_term.real();
  out.tail_estimate = raw.tail_estimate;
  out.warnings = raw.warnings;
  return out;
}

LorentzSeries lorentz_ramanujan(double a, double x, double y, std::int64_t K) {
  const SurfaceSpec spec{a, Signature::Lorentz};
  if (!in_domain(spec, x, y, 0.0)) {
    throw Error(ErrorKind::Domain, "lorentz_ramanujan point violates the spacelike condition");
  }
  const auto raw =
      ramanujan_log_sum(Complex(0.0, y + a * x), Complex(0.0, spec.stretch() * x), K);
  LorentzSeries out;
  out.imag_residue = raw.value.imag();
  if (std::abs(out.imag_residue) > 1e-8 * (1.0 + std::abs(raw.value.real()))) {
    throw Error(ErrorKind::ImaginaryResidue, "imaginary part does not cancel");
  }
  out.value = raw.value.real();
  out.last_term = raw.last_term.real();
  out.tail_estimate = raw.tail_estimate;
  out.warnings = raw.warnings;
  return out;
}

double dirichlet_P(double s, double p, std::int64_t N) {
  if (!(std::abs(p) < 1.0)) throw Error(ErrorKind::Domain, "dirichlet_P needs |p| < 1");
  if (N < 1) throw Error(ErrorKind::Domain, "N must be >= 1");
  CompensatedSum<double> sum;
  double power = 1.0;
  for (std::int64_t n = 1; n <= N; ++n) {
    power *= -p;
    if (power == 0.0) break;
    sum += -power / std::pow(static_cast<double>(n), s);
  }
  return sum.value();
}

double dirichlet_T(double s, double b, std::int64_t N) {
  if (!(std::abs(b) < 1.0)) throw Error(ErrorKind::Domain, "dirichlet_T needs |b| < 1");
  if (N < 1) throw Error(ErrorKind::Domain, "N must be >= 1");
  CompensatedSum<double> sum;
  double power = 1.0;
  for (std::int64_t n = 1; n <= N; ++n) {
    power *= b;
    if (power == 0.0) break;
    sum += power / std::pow(static_cast<double>(n), s);
  }
  return sum.value();
}

DirichletResult height_via_dirichlet(double a, double x, double y, const SeriesConfig& cfg) {
  if (cfg.outer_terms < 1 || cfg.inner_terms < 1) {
    throw Error(ErrorKind::Domain, "K and N must be >= 1");
  }
  if (!(cfg.clamp_ratio > 0.0 && cfg.clamp_ratio < 1.0)) {
    throw Error(ErrorKind::Domain, "clamp_ratio must lie in (0, 1)");
  }
  if (!std::isfinite(a) || !std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorKind::Domain, "non-finite input to height_via_dirichlet");
  }
  const double s2 = 1.0 + a * a;
  const double alpha1 = alpha_k(1);
  // Both guard ratios are largest at k = 1:
  //   s2 x^2/(alpha_1^2 - s2 x^2) < 1  <=>  s2 x^2 < alpha_1^2 / 2
  //   (y+ax)^2/alpha_1^2 < 1           <=>  |y+ax| < alpha_1
  const auto p_ratio = [&](double xx) {
    const double den = alpha1 * alpha1 - s2 * xx * xx;
    return den > 0.0 ? s2 * xx * xx / den : std::numeric_limits<double>::infinity();
  };
  const auto t_ratio = [&](double xx, double yy) {
    const double t = yy + a * xx;
    return t * t / (alpha1 * alpha1);
  };

  DirichletResult out;
  out.x = x;
  out.y = y;
  if (!(p_ratio(x) < 1.0) || !(t_ratio(x, y) < 1.0)) {
    if (cfg.guard == GuardPolicy::Strict) {
      throw Error(ErrorKind::GuardViolation, "Dirichlet convergence guard fails at k = 1");
    }
    // Shrink until the larger ratio equals clamp_ratio.
    const double r = cfg.clamp_ratio;
    double scale = 1.0;
    if (x != 0.0) scale = std::min(scale, alpha1 * std::sqrt(r / ((1.0 + r) * s2)) / std::abs(x));
    if (y + a * x != 0.0) scale = std::min(scale, alpha1 * std::sqrt(r) / std::abs(y + a * x));
    out.x = x * scale;
    out.y = y * scale;
    out.clamped = true;
    out.warnings.push_back("GuardViolation: point clamped by factor " + std::to_string(scale));
  }
  const double xx = out.x;
  const double t = out.y + a * out.x;
  out.max_p_ratio = p_ratio(xx);
  out.max_t_ratio = t_ratio(xx, out.y);

  CompensatedSum<double> sum;
  double term = 0.0;
  for (std::int64_t k = 1; k <= cfg.outer_terms; ++k) {
    const double alpha = alpha_k(k);
    const double a2 = alpha * alpha;
    const double p = s2 * xx * xx / (a2 - s2 * xx * xx);
    const double b = t * t / a2;
    term = dirichlet_P(1.0, p, cfg.inner_terms) - dirichlet_T(1.0, b, cfg.inner_terms);
    sum += term;
  }
  out.value = sum.value();
  out.last_term = term;
  const double n1 = static_cast<double>(cfg.inner_terms + 1);
  const double worst = std::max(out.max_p_ratio, out.max_t_ratio);
  out.tail_estimate = std::abs(term) * static_cast<double>(cfg.outer_terms) +
                      std::pow(worst, n1) / (n1 * (1.0 - worst));
  if (std::abs(term) > cfg.rel_tol * std::abs(out.value)) {
    out.warnings.push_back(convergence_warning(cfg.outer_terms));
  }
  return out;
}

}  // namespace scherk
