#include "scherk/logdist.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scherk/error.hpp"
#include "scherk/identities.hpp"
#include "scherk/summation.hpp"
#include "scherk/surfaces.hpp"

namespace scherk {
namespace {

void check_counts(std::int64_t n, std::int64_t J) {
  if (n < 1 || J < 1) throw Error(ErrorKind::Domain, "n and J must be >= 1");
}

void check_point(double a, double x, double y) {
  if (!in_domain(SurfaceSpec{a, Signature::Euclidean}, x, y, 0.0)) {
    throw Error(ErrorKind::Domain, "pmf point outside the Euclidean domain");
  }
}

// Parameters whose powers make up the numerators: two per k in Split mode,
// one per k in Scalar mode.
std::vector<double> series_parameters(double a, double x, double y, std::int64_t n,
                                      PmfMode mode) {
  std::vector<double> params;
  params.reserve(static_cast<std::size_t>(mode == PmfMode::Split ? 2 * n : n));
  for (std::int64_t k = 1; k <= n; ++k) {
    const AkTerms t = ak_terms(a, x, y, k);
    if (mode == PmfMode::Split) {
      if (!(std::abs(t.q) < 1.0) || !(t.p < 1.0)) {
        throw Error(ErrorKind::Domain, "log series parameter outside (-1, 1) at k = " +
                                           std::to_string(k));
      }
      params.push_back(t.p);
      params.push_back(t.q);
    } else {
      const double A = t.p + t.q;
      if (!(std::abs(A) < 1.0)) {
        throw Error(ErrorKind::ScalarDomain, "|A_k| >= 1 at k = " + std::to_string(k));
      }
      params.push_back(A);
    }
  }
  return params;
}

double tail_bound(const std::vector<double>& params, std::int64_t J, double denominator) {
  // |sum_{j>J} r^j/j| <= |r|^{J+1} / ((J+1)(1-|r|)).
  CompensatedSum<double> sum;
  const double j1 = static_cast<double>(J + 1);
  for (double r : params) {
    const double m = std::abs(r);
    if (m == 0.0) continue;
    sum += std::pow(m, j1) / (j1 * (1.0 - m));
  }
  return sum.value() / std::abs(denominator);
}

}  // namespace

AkTerms ak_terms(double a, double x, double y, std::int64_t k) {
  const double alpha = alpha_k(k);
  const double s2x2 = (1.0 + a * a) * x * x;
  const double den = alpha * alpha - s2x2;
  if (den == 0.0 || std::abs(den) < 1e-14 * alpha * alpha) {
    throw Error(ErrorKind::Domain, "resonance alpha_k^2 = (1+a^2)x^2");
  }
  AkTerms t;
  t.k = k;
  const double shear = y + a * x;
  t.p = shear * shear / (alpha * alpha);
  t.q = -s2x2 / den;
  const double A = t.p + t.q;
  t.scalar_in_unit_interval = A > 0.0 && A < 1.0;
  return t;
}

PmfTable pmf(double a, double x, double y, std::int64_t n, std::int64_t J, PmfMode mode) {
  check_counts(n, J);
  check_point(a, x, y);
  const std::vector<double> params = series_parameters(a, x, y, n, mode);

  CompensatedSum<double> den;
  for (double r : params) den += std::log1p(-r);
  PmfTable table;
  table.n = n;
  table.J = J;
  table.mode = mode;
  table.denominator = den.value();
  if (table.denominator == 0.0) {
    throw Error(ErrorKind::ZeroDenominator, "sum of log(1 - A_k) vanishes");
  }

  table.f.reserve(static_cast<std::size_t>(J));
  std::vector<double> powers(params.size(), 1.0);
  CompensatedSum<double> cumulative;
  for (std::int64_t j = 1; j <= J; ++j) {
    CompensatedSum<double> num;
    for (std::size_t i = 0; i < params.size(); ++i) {
      powers[i] *= params[i];
      num += -powers[i];
    }
    const double fj = num.value() / static_cast<double>(j) / table.denominator;
    table.f.push_back(fj);
    cumulative += fj;
    if (fj < 0.0) table.nonneg = false;
  }
  table.cumulative = cumulative.value();
  table.tail_bound = tail_bound(params, J, table.denominator);
  return table;
}

std::int64_t pmf_terms_for_tail(double a, double x, double y, std::int64_t n, PmfMode mode,
                                double tol, std::int64_t max_J) {
  check_counts(n, 1);
  check_point(a, x, y);
  const std::vector<double> params = series_parameters(a, x, y, n, mode);
  CompensatedSum<double> den;
  for (double r : params) den += std::log1p(-r);
  if (den.value() == 0.0) throw Error(ErrorKind::ZeroDenominator, "sum of log(1 - A_k) vanishes");
  for (std::int64_t J = 1; J < max_J; ++J) {
    if (tail_bound(params, J, den.value()) < tol) return J;
  }
  return max_J;
}

double partial_sum_series(double a, double x, double y, std::int64_t n, std::int64_t J) {
  check_counts(n, J);
  check_point(a, x, y);
  CompensatedSum<double> sum;
  for (std::int64_t k = 1; k <= n; ++k) {
    const AkTerms t = ak_terms(a, x, y, k);
    if (!(std::abs(t.q) < 1.0) || !(t.p < 1.0)) {
      throw Error(ErrorKind::Domain, "log series parameter outside (-1, 1) at k = " +
                                         std::to_string(k));
    }
    double pp = 1.0;
    double qq = 1.0;
    for (std::int64_t j = 1; j <= J; ++j) {
      pp *= t.p;
      qq *= t.q;
      if (pp == 0.0 && qq == 0.0) break;
      sum += -(pp + qq) / static_cast<double>(j);
    }
  }
  return sum.value();
}

}  // namespace scherk
