#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "scherk/surfaces.hpp"

namespace scherk {

enum class GuardPolicy { Strict, Clamp };

struct SeriesConfig {
  std::int64_t outer_terms = 10000;  // K, index k of the products/sums
  std::int64_t inner_terms = 200;    // N, power-series index n
  GuardPolicy guard = GuardPolicy::Strict;
  // Under Clamp, the k = 1 guard ratio the point is shrunk to. The inner
  // series then converge like clamp_ratio^N.
  double clamp_ratio = 0.9;
  // ConvergenceWarning when |last term| > rel_tol * |partial sum|.
  double rel_tol = 1e-6;
};

// alpha_k = (k - 1/2) pi, k >= 1.
double alpha_k(std::int64_t k);

template <typename T>
struct SeriesResult {
  T value{};
  T last_term{};
  // Estimated remainder beyond the truncation (terms decay like 1/k^2, so the
  // tail is about K times the last term).
  double tail_estimate = 0.0;
  std::vector<std::string> warnings;
};

// sum_{k<=K} log((a_k-(X+A))/(a_k-A)) + log((a_k+(X+A))/(a_k+A)), which tends
// to log(cos(X+A)/cos A). `shifted` is X+A, `anchor` is A.
SeriesResult<Complex> ramanujan_log_sum(Complex shifted, Complex anchor, std::int64_t K,
                                        double rel_tol = 1e-6);

// X+A = y+ax, A = sqrt(1+a^2)x; tends to the Euclidean height.
SeriesResult<double> affine_ramanujan(double a, double x, double y, std::int64_t K);

// X+A = i(y+ax), A = i sqrt(1+a^2)x; tends to the Lorentz height. Throws
// ImaginaryResidue if |Im| > 1e-8 (1 + |Re|). The residue that was dropped is
// reported in `imag_residue`.
struct LorentzSeries : SeriesResult<double> {
  double imag_residue = 0.0;
};
LorentzSeries lorentz_ramanujan(double a, double x, double y, std::int64_t K);

// sum_{n<=N} (-1)^{n+1} p^n / n^s, |p| < 1.
double dirichlet_P(double s, double p, std::int64_t N);

// sum_{n<=N} b^n / n^s, |b| < 1.
double dirichlet_T(double s, double b, std::int64_t N);

struct DirichletResult : SeriesResult<double> {
  // Point actually evaluated (differs from the request only under Clamp).
  double x = 0.0;
  double y = 0.0;
  bool clamped = false;
  // Largest guard ratio seen (k = 1 dominates).
  double max_p_ratio = 0.0;
  double max_t_ratio = 0.0;
};

// sum_{k<=K} [P(1, (1+a^2)x^2/(a_k^2-(1+a^2)x^2)) - T(1, (y+ax)^2/a_k^2)]
// with N inner terms.
DirichletResult height_via_dirichlet(double a, double x, double y, const SeriesConfig& cfg);

}  // namespace scherk
