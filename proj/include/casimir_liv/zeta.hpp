#pragma once

namespace casimir_liv::zeta {

/// Riemann zeta function for real s != 1.
///
/// For s >= 1/2 the sum is evaluated directly up to a cut and the remainder
/// by Euler-Maclaurin with Bernoulli corrections. For s < 1/2 the reflection
///   zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
/// maps back onto the convergent side, so zeta(-3) = 1/120 comes out to a
/// few ulp. Negative even integers return exactly 0.
///
/// Throws DomainError at the pole s = 1 and for non-finite s.
double riemann_zeta(double s);

}  // namespace casimir_liv::zeta
