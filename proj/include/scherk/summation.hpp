#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace scherk {

// Neumaier's variant of Kahan summation. Order of add() calls fixes the
// result bit-for-bit.
template <typename T>
class CompensatedSum {
 public:
  void add(T term) noexcept {
    if constexpr (std::is_floating_point_v<T>) {
      add_real(sum_, comp_, term);
    } else {
      using R = typename T::value_type;
      R sr = sum_.real(), cr = comp_.real();
      R si = sum_.imag(), ci = comp_.imag();
      add_real(sr, cr, term.real());
      add_real(si, ci, term.imag());
      sum_ = T(sr, si);
      comp_ = T(cr, ci);
    }
  }

  CompensatedSum& operator+=(T term) noexcept {
    add(term);
    return *this;
  }

  T value() const noexcept { return sum_ + comp_; }

 private:
  template <typename R>
  static void add_real(R& sum, R& comp, R term) noexcept {
    const R t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }

  T sum_{};
  T comp_{};
};

}  // namespace scherk
