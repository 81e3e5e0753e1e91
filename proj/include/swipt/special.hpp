#pragma once

namespace swipt {

/// Modified Bessel function of the second kind, order one, for t > 0.
/// Saturates to +inf below the representable range and to 0 above ~745.
/// Throws DomainError for t <= 0 or NaN.
double bessel_k1(double t);

/// psi * K1(psi), continuous at 0 with limit 1. Returns exactly 1 for
/// psi < 1e-12 so integrands never form 0 * inf.
double psi_k1(double psi);

/// 1 - psi * K1(psi), the conditional relay-failure probability. Small psi
/// uses the ascending series directly, which avoids the cancellation in
/// 1 - psi_k1(psi) when psi -> 0.
double one_minus_psi_k1(double psi);

} // namespace swipt
