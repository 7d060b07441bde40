#include "tsrelay/bessel.hpp"

#include <cmath>

#include "tsrelay/errors.hpp"

#if !defined(__cpp_lib_math_special_functions) && !defined(__STDCPP_MATH_SPEC_FUNCS__)
#error "std::cyl_bessel_k is required (libstdc++ or MSVC)"
#endif

namespace tsrelay::special {

namespace {

void check_domain(double x) {
  if (!(x > 0.0)) throw DomainError("modified Bessel K requires x > 0");
}

}  // namespace

double bessel_k0(double x) {
  check_domain(x);
  return std::cyl_bessel_k(0.0, x);
}

double bessel_k1(double x) {
  check_domain(x);
  return std::cyl_bessel_k(1.0, x);
}

double bessel_k2(double x) { return bessel_k0(x) + 2.0 * bessel_k1(x) / x; }

double bessel_kn(int n, double x) {
  if (n < 0) throw DomainError("bessel_kn requires n >= 0");
  double prev = bessel_k0(x);
  if (n == 0) return prev;
  double cur = bessel_k1(x);
  for (int k = 1; k < n; ++k) {
    const double next = prev + 2.0 * k / x * cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace tsrelay::special
