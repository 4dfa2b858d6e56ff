#pragma once

namespace ellgas {

/// Bessel function of the first kind J_a(x) for a > -1 and x >= 0.
/// Power series for x <= 2, Schlafli integral representation above.
/// J_a(0) is 1 for a = 0, 0 for a > 0 and +inf for a < 0.
[[nodiscard]] double bessel_j(double a, double x);

}  // namespace ellgas
