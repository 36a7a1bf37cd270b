#pragma once

#include <cstdint>
#include <vector>

namespace scherk {

// Per-k split of the height series: p = (y+ax)^2/alpha_k^2 (>= 0) and
// q = -(1+a^2)x^2/(alpha_k^2 - (1+a^2)x^2) (<= 0 inside the domain), so that
// log(1-p) + log(1-q) is the k-th factor of the height.
struct AkTerms {
  std::int64_t k = 1;
  double p = 0.0;
  double q = 0.0;
  // Diagnostic for the scalar reading A_k = p + q: whether 0 < A_k < 1.
  bool scalar_in_unit_interval = false;
};

AkTerms ak_terms(double a, double x, double y, std::int64_t k);

// Split:  f(j) = sum_k -(p_k^j + q_k^j)/j  /  sum_k [log(1-p_k) + log(1-q_k)]
// Scalar: f(j) = sum_k -A_k^j/j            /  sum_k log(1-A_k),  A_k = p_k + q_k
// Either way sum_{j>=1} f(j) = 1, because the numerators are the terms of the
// logarithm series whose total is the denominator.
enum class PmfMode { Split, Scalar };

struct PmfTable {
  std::int64_t n = 0;  // number of k terms
  std::int64_t J = 0;  // largest j tabulated
  PmfMode mode = PmfMode::Split;
  std::vector<double> f;  // f[j-1] = f(j)
  double cumulative = 0.0;
  // Bound on |sum_{j>J} f(j)| from the geometric majorant of the tail.
  double tail_bound = 0.0;
  // Sum of the log terms (the partial height for Split mode).
  double denominator = 0.0;
  bool nonneg = true;
};

PmfTable pmf(double a, double x, double y, std::int64_t n, std::int64_t J, PmfMode mode);

// Smallest J whose tail bound is below `tol` (capped at `max_J`).
std::int64_t pmf_terms_for_tail(double a, double x, double y, std::int64_t n, PmfMode mode,
                                double tol, std::int64_t max_J = 100000);

// sum_{k<=n} sum_{j<=J} -(p_k^j + q_k^j)/j, which tends to the Euclidean
// height as n, J grow.
double partial_sum_series(double a, double x, double y, std::int64_t n, std::int64_t J);

}  // namespace scherk
