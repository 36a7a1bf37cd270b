#include "scherk/surfaces.hpp"

#include <cmath>
#include <string>

#include "scherk/error.hpp"

namespace scherk {
namespace {

bool finite(double a, double x, double y) {
  return std::isfinite(a) && std::isfinite(x) && std::isfinite(y);
}

template <typename T>
struct Jet {
  T phi{}, phi_x{}, phi_y{}, phi_xx{}, phi_xy{}, phi_yy{};
};

template <typename T>
T sec2(T t) {
  const T c = std::cos(t);
  return T(1) / (c * c);
}

template <typename T>
T sech2(T t) {
  const T c = std::cosh(t);
  return T(1) / (c * c);
}

template <typename T>
Jet<T> euclidean_jet(T a, T x, T y) {
  const T s = std::sqrt(T(1) + a * a);
  const T t = y + a * x;
  const T tan_t = std::tan(t);
  const T tan_sx = std::tan(s * x);
  Jet<T> j;
  j.phi = std::log(std::cos(t) / std::cos(s * x));
  j.phi_x = s * tan_sx - a * tan_t;
  j.phi_y = -tan_t;
  j.phi_xx = s * s * sec2(s * x) - a * a * sec2(t);
  j.phi_xy = -a * sec2(t);
  j.phi_yy = -sec2(t);
  return j;
}

template <typename T>
Jet<T> lorentz_jet(T a, T x, T y) {
  const T s = std::sqrt(T(1) + a * a);
  const T t = y + a * x;
  const T th_t = std::tanh(t);
  const T th_sx = std::tanh(s * x);
  Jet<T> j;
  // log(cosh t) - log(cosh sx), written to survive large |t|.
  const auto log_cosh = [](T u) {
    const T v = std::abs(u);
    return v + std::log1p(std::exp(T(-2) * v)) - std::log(T(2));
  };
  j.phi = log_cosh(t) - log_cosh(s * x);
  j.phi_x = a * th_t - s * th_sx;
  j.phi_y = th_t;
  j.phi_xx = a * a * sech2(t) - s * s * sech2(s * x);
  j.phi_xy = a * sech2(t);
  j.phi_yy = sech2(t);
  return j;
}

template <typename T>
Jet<T> wick_jet(T x, T y) {
  Jet<T> j;
  j.phi = std::log(std::cosh(y) / std::cos(x));
  j.phi_x = std::tan(x);
  j.phi_y = std::tanh(y);
  j.phi_xx = sec2(x);
  j.phi_xy = T(0);
  j.phi_yy = sech2(y);
  return j;
}

Jet2 narrow(const Jet<double>& j) {
  return {j.phi, j.phi_x, j.phi_y, j.phi_xx, j.phi_xy, j.phi_yy};
}

template <typename T>
T minimal(const Jet<T>& j) {
  return (T(1) + j.phi_y * j.phi_y) * j.phi_xx - T(2) * j.phi_x * j.phi_y * j.phi_xy +
         (T(1) + j.phi_x * j.phi_x) * j.phi_yy;
}

template <typename T>
T maximal(const Jet<T>& j) {
  if (!(j.phi_x * j.phi_x + j.phi_y * j.phi_y < T(1))) {
    throw Error(ErrorKind::SpacelikeViolation, "phi_x^2 + phi_y^2 >= 1");
  }
  return (T(1) - j.phi_y * j.phi_y) * j.phi_xx + T(2) * j.phi_x * j.phi_y * j.phi_xy +
         (T(1) - j.phi_x * j.phi_x) * j.phi_yy;
}

template <typename T>
T born_infeld(const Jet<T>& j, BornInfeldAxis axis) {
  if (axis == BornInfeldAxis::TimeX) {
    return (T(1) + j.phi_y * j.phi_y) * j.phi_xx - T(2) * j.phi_x * j.phi_y * j.phi_xy +
           (j.phi_x * j.phi_x - T(1)) * j.phi_yy;
  }
  return (T(1) - j.phi_y * j.phi_y) * j.phi_xx + T(2) * j.phi_x * j.phi_y * j.phi_xy -
         (T(1) + j.phi_x * j.phi_x) * j.phi_yy;
}

Jet<double> widen(const Jet2& j) {
  return {j.phi, j.phi_x, j.phi_y, j.phi_xx, j.phi_xy, j.phi_yy};
}

[[noreturn]] void domain_error(const SurfaceSpec& spec, double x, double y) {
  throw Error(ErrorKind::Domain, "point (" + std::to_string(x) + ", " + std::to_string(y) +
                                     ") outside the domain for a = " + std::to_string(spec.a));
}

void check_jet_point(const SurfaceSpec& spec, double x, double y) {
  if (spec.signature != Signature::BornInfeldWick) {
    if (!in_domain(spec, x, y, 0.0)) domain_error(spec, x, y);
    return;
  }
  if (spec.a != 0.0) throw Error(ErrorKind::Domain, "real jet of the wick surface needs a = 0");
  if (!(std::cos(x) > 0.0) || !finite(spec.a, x, y)) domain_error(spec, x, y);
}

}  // namespace

double SurfaceSpec::stretch() const noexcept { return std::sqrt(1.0 + a * a); }

bool in_domain(const SurfaceSpec& spec, double x, double y, double margin) {
  if (!finite(spec.a, x, y)) return false;
  const double a = spec.a;
  const double s = spec.stretch();
  switch (spec.signature) {
    case Signature::Euclidean:
      return std::cos(s * x) > margin && std::cos(y + a * x) > margin;
    case Signature::Lorentz: {
      const Jet<double> j = lorentz_jet(a, x, y);
      return j.phi_x * j.phi_x + j.phi_y * j.phi_y < 1.0 - margin;
    }
    case Signature::BornInfeldWick:
      return std::abs(std::cos(s * x)) > margin &&
             std::abs(std::cos(Complex(a * x, y))) > margin;
  }
  return false;
}

double height(const SurfaceSpec& spec, double x, double y) {
  if (spec.signature == Signature::BornInfeldWick) {
    throw Error(ErrorKind::Domain, "height is real-valued only for Euclidean/Lorentz; use wick_height");
  }
  if (!in_domain(spec, x, y, 0.0)) domain_error(spec, x, y);
  const double a = spec.a;
  const double s = spec.stretch();
  if (spec.signature == Signature::Euclidean) {
    return std::log(std::cos(y + a * x) / std::cos(s * x));
  }
  return lorentz_jet(a, x, y).phi;
}

WickValue wick_height(double a, double x, double y) {
  if (!finite(a, x, y)) throw Error(ErrorKind::Domain, "non-finite input to wick_height");
  const double s = std::sqrt(1.0 + a * a);
  const double den = std::cos(s * x);
  const Complex num = std::cos(Complex(a * x, y));
  if (std::abs(den) < 1e-15 || std::abs(num) < 1e-15) {
    throw Error(ErrorKind::Domain, "vanishing cosine in wick_height");
  }
  const Complex ratio = num / den;
  WickValue out;
  out.value = std::log(ratio);
  out.branch_warning = ratio.real() < 0.0 && std::abs(ratio.imag()) <= 1e-12 * std::abs(ratio);
  return out;
}

Jet2 analytic_jet(const SurfaceSpec& spec, double x, double y) {
  check_jet_point(spec, x, y);
  switch (spec.signature) {
    case Signature::Euclidean: return narrow(euclidean_jet(spec.a, x, y));
    case Signature::Lorentz: return narrow(lorentz_jet(spec.a, x, y));
    case Signature::BornInfeldWick: return narrow(wick_jet(x, y));
  }
  domain_error(spec, x, y);
}

double minimal_residual(const Jet2& j) noexcept { return minimal(widen(j)); }

double maximal_residual(const Jet2& j) { return maximal(widen(j)); }

double born_infeld_residual(const Jet2& j, BornInfeldAxis axis) noexcept {
  return born_infeld(widen(j), axis);
}

double surface_residual(const SurfaceSpec& spec, double x, double y) {
  using L = long double;
  check_jet_point(spec, x, y);
  switch (spec.signature) {
    case Signature::Euclidean:
      return static_cast<double>(minimal(euclidean_jet<L>(spec.a, x, y)));
    case Signature::Lorentz:
      return static_cast<double>(maximal(lorentz_jet<L>(spec.a, x, y)));
    case Signature::BornInfeldWick:
      return static_cast<double>(born_infeld(wick_jet<L>(x, y), BornInfeldAxis::TimeY));
  }
  domain_error(spec, x, y);
}

}  // namespace scherk
