#pragma once

namespace gps {

/// k-th zero (k >= 1) of the Airy function Ai, a negative number. Newton
/// iteration seeded from the large-k asymptotic expansion.
double airy_zero(int k);

/// I_n(g) = int_0^inf exp(-x^2) H_n(x)^2 (1 - g x^2) / (1 + g x^2) dx
/// for 0 <= n <= 20 and g > 0, by adaptive Gauss-Kronrod quadrature.
double hermite_integral(int n, double g);

/// sqrt(pi) 2^n n! / 2, the g -> 0 limit of hermite_integral.
double hermite_half_norm(int n);

}  // namespace gps
