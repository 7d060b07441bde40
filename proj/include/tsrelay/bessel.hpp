#pragma once

namespace tsrelay::special {

// Modified Bessel functions of the second kind for integer order, on top of
// std::cyl_bessel_k with argument checking. Positive and strictly decreasing on
// (0, inf); past x ~ 745 the result underflows to 0.
//
// All throw DomainError for x <= 0 or NaN.

double bessel_k0(double x);
double bessel_k1(double x);
double bessel_k2(double x);

/// K_n for n >= 0 via the (stable) upward recurrence K_{n+1} = K_{n-1} + 2n/x K_n.
double bessel_kn(int n, double x);

}  // namespace tsrelay::special
