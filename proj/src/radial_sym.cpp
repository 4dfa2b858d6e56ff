#include "ellgas/radial_sym.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ellgas/errors.hpp"

namespace ellgas {

namespace {
constexpr double kRadialSlack = 1e-12;
}

RadialSymSpec::RadialSymSpec(double gamma, double inner, double outer)
    : gamma_(gamma), inner_(inner), outer_(outer) {
    if (!std::isfinite(gamma) || !(gamma > -2.0)) {
        throw DomainError("RadialSymSpec: gamma must exceed -2, got " + std::to_string(gamma));
    }
    if (!std::isfinite(inner) || !std::isfinite(outer) || !(1.0 < inner) || !(inner < outer)) {
        throw DomainError("RadialSymSpec: need 1 < R < v");
    }
}

bool contains(const RadialSymSpec& spec, ComplexPoint z) noexcept {
    const double rho = std::hypot(z.x, z.y);
    return rho >= spec.inner_radius() * (1.0 - kRadialSlack) && rho <= spec.outer_radius() * (1.0 + kRadialSlack);
}

double radial_sym_norm_constant(const RadialSymSpec& spec, int n) {
    if (n < 0) throw DomainError("radial_sym_norm_constant: negative degree");
    const double e = 2.0 * n + spec.gamma() + 2.0;
    return 2.0 * std::numbers::pi / e * std::exp(e * std::log(spec.outer_radius())) *
           -std::expm1(e * std::log(spec.inner() / spec.outer()));
}

cplx kernel_radial_sym(const RadialSymSpec& spec, int N, ComplexPoint z1, ComplexPoint z2) {
    if (N < 1) throw DomainError("kernel_radial_sym: N must be at least 1");
    if (!contains(spec, z1) || !contains(spec, z2)) {
        throw DomainError("kernel_radial_sym: point outside the annulus");
    }
    const double g = spec.gamma();
    const double rv = spec.outer_radius();
    const double log_rho = std::log(std::hypot(z1.x, z1.y) * std::hypot(z2.x, z2.y) / (rv * rv));
    const double dtheta = std::atan2(z1.y, z1.x) - std::atan2(z2.y, z2.x);
    const double log_ratio = std::log(spec.inner() / spec.outer());

    // Each term is rescaled by (v/2)^{2n+gamma+2}.
    cplx sum = 0.0;
    for (int n = 0; n < N; ++n) {
        const double e = 2.0 * n + g + 2.0;
        const double mag = e * std::exp((n + 0.5 * g) * log_rho) / -std::expm1(e * log_ratio);
        sum += std::polar(mag, n * dtheta);
    }
    return sum / (2.0 * std::numbers::pi * rv * rv);
}

}  // namespace ellgas
