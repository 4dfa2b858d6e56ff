#pragma once

#include <string_view>

#include "ellgas/geometry.hpp"

namespace ellgas {

/// The four Chebyshev families: First = T, Second = U, Third = V, Fourth = W.
enum class ChebyshevKind { First, Second, Third, Fourth };

[[nodiscard]] std::string_view to_string(ChebyshevKind kind) noexcept;

/// T_n, U_n, V_n or W_n at z = (omega + 1/omega)/2, evaluated from powers of omega.
[[nodiscard]] cplx chebyshev_eval(ChebyshevKind kind, int n, const OmegaCoord& w);

/// The monic normalization M_n: T_n / 2^{n-1} (1 at n = 0) for the first kind,
/// p_n / 2^n for the other three.
[[nodiscard]] cplx monic_eval(ChebyshevKind kind, int n, const OmegaCoord& w);

}  // namespace ellgas
