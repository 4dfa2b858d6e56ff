#include "ellgas/chebyshev.hpp"

#include <cmath>

#include "ellgas/errors.hpp"

namespace ellgas {

std::string_view to_string(ChebyshevKind kind) noexcept {
    switch (kind) {
        case ChebyshevKind::First: return "T";
        case ChebyshevKind::Second: return "U";
        case ChebyshevKind::Third: return "V";
        case ChebyshevKind::Fourth: return "W";
    }
    return "?";
}

cplx chebyshev_eval(ChebyshevKind kind, int n, const OmegaCoord& w) {
    if (n < 0) throw DomainError("chebyshev_eval: negative degree");
    const cplx L = w.log_omega();
    const cplx omega = w.omega();
    const double m = static_cast<double>(n);
    // omega^k = exp(k log omega)
    auto pw = [&](double k) { return std::exp(k * L); };
    switch (kind) {
        case ChebyshevKind::First:
            return 0.5 * (pw(m) + pw(-m));
        case ChebyshevKind::Second:
            return (pw(m + 1.0) - pw(-m - 1.0)) / (omega - 1.0 / omega);
        case ChebyshevKind::Third:
            return (pw(m + 1.0) + pw(-m)) / (omega + 1.0);
        case ChebyshevKind::Fourth:
            return (pw(m + 1.0) - pw(-m)) / (omega - 1.0);
    }
    return {};
}

cplx monic_eval(ChebyshevKind kind, int n, const OmegaCoord& w) {
    const cplx p = chebyshev_eval(kind, n, w);
    if (kind == ChebyshevKind::First) {
        return n == 0 ? cplx{1.0, 0.0} : p * std::ldexp(1.0, 1 - n);
    }
    return p * std::ldexp(1.0, -n);
}

}  // namespace ellgas
