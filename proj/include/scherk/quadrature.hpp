#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace scherk {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  // Minimum distance kept between the contour and any pole of the integrand.
  double pole_clearance = 1e-2;
};

template <std::size_t N>
struct SegmentIntegral {
  std::array<std::complex<double>, N> value{};
  std::array<double, N> error{};
  int subdivisions = 0;
  bool converged = false;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1] (QUADPACK qk15).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::size_t N>
struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  std::array<std::complex<double>, N> value{};
  std::array<double, N> error{};
  double worst = 0.0;  // largest component error, used as the split key

  bool operator<(const Panel& other) const {
    // Ties broken by position so the split order is deterministic.
    if (worst != other.worst) return worst < other.worst;
    return lo > other.lo;
  }
};

// F: std::complex<double> -> std::array<std::complex<double>, N>, evaluated on
// the straight segment from `from` to `to`, parametrized by t in [lo, hi].
template <std::size_t N, typename F>
Panel<N> gauss_kronrod_panel(F& f, std::complex<double> from, std::complex<double> to,
                             double lo, double hi) {
  const std::complex<double> chord = to - from;
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::array<std::complex<double>, N> kronrod{};
  std::array<std::complex<double>, N> gauss{};
  for (std::size_t i = 0; i < kKronrodNodes.size(); ++i) {
    const double node = kKronrodNodes[i];
    const int sides = node == 0.0 ? 1 : 2;
    for (int side = 0; side < sides; ++side) {
      const double t = center + (side == 0 ? half * node : -half * node);
      const auto sample = f(from + t * chord);
      for (std::size_t c = 0; c < N; ++c) {
        const std::complex<double> term = sample[c] * chord;
        kronrod[c] += kKronrodWeights[i] * term;
        if (i % 2 == 1) gauss[c] += kGaussWeights[i / 2] * term;
      }
    }
  }
  Panel<N> panel;
  panel.lo = lo;
  panel.hi = hi;
  for (std::size_t c = 0; c < N; ++c) {
    panel.value[c] = half * kronrod[c];
    panel.error[c] = std::abs(half * (kronrod[c] - gauss[c]));
    panel.worst = std::max(panel.worst, panel.error[c]);
  }
  return panel;
}

}  // namespace detail

// Globally adaptive G7-K15 integration of a vector of complex integrands
// along the segment [from, to]. The worst panel is bisected until every
// component meets max(abs_tol, rel_tol * |integral|) or the subdivision
// budget is spent.
template <std::size_t N, typename F>
SegmentIntegral<N> integrate_segment(F&& f, std::complex<double> from, std::complex<double> to,
                                     const QuadratureConfig& cfg) {
  std::priority_queue<detail::Panel<N>> panels;
  panels.push(detail::gauss_kronrod_panel<N>(f, from, to, 0.0, 1.0));

  SegmentIntegral<N> out;
  const auto totals = [&](std::array<std::complex<double>, N>& value,
                          std::array<double, N>& error) {
    value.fill({});
    error.fill(0.0);
    auto copy = panels;
    std::vector<detail::Panel<N>> ordered;
    ordered.reserve(copy.size());
    while (!copy.empty()) {
      ordered.push_back(copy.top());
      copy.pop();
    }
    // Sum in position order so results do not depend on heap layout.
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& l, const auto& r) { return l.lo < r.lo; });
    for (const auto& p : ordered) {
      for (std::size_t c = 0; c < N; ++c) {
        value[c] += p.value[c];
        error[c] += p.error[c];
      }
    }
  };

  while (true) {
    totals(out.value, out.error);
    bool done = true;
    for (std::size_t c = 0; c < N; ++c) {
      const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value[c]));
      if (out.error[c] > target) done = false;
    }
    if (done) {
      out.converged = true;
      return out;
    }
    if (out.subdivisions >= cfg.max_subdivisions) return out;
    const detail::Panel<N> worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    panels.push(detail::gauss_kronrod_panel<N>(f, from, to, worst.lo, mid));
    panels.push(detail::gauss_kronrod_panel<N>(f, from, to, mid, worst.hi));
    ++out.subdivisions;
  }
}

}  // namespace scherk
