#include "ellgas/geometry.hpp"

#include <cmath>
#include <string>

#include "ellgas/errors.hpp"

namespace ellgas {

namespace {

constexpr double kCutTolerance = 1e-14;
// Relative slack on the radial bounds so that boundary points survive a
// forward/inverse round trip.
constexpr double kRadialSlack = 1e-12;

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

}  // namespace

OmegaCoord::OmegaCoord(double r, double theta) : r_(r), theta_(0.0) {
    if (!std::isfinite(r) || !std::isfinite(theta)) {
        throw DomainError("OmegaCoord: non-finite coordinate");
    }
    if (!(r > 1.0)) {
        throw DomainError("OmegaCoord: r must exceed 1, got " + std::to_string(r));
    }
    theta_ = wrap_angle(theta);
}

AnnulusSpec::AnnulusSpec(double inner, double outer) : inner_(inner), outer_(outer) {
    if (!std::isfinite(inner) || !std::isfinite(outer) || !(1.0 < inner) || !(inner < outer)) {
        throw DomainError("AnnulusSpec: need 1 < R < v, got R=" + std::to_string(inner) +
                          " v=" + std::to_string(outer));
    }
}

double AnnulusSpec::area() const noexcept {
    return std::numbers::pi * (outer_major() * outer_minor() - inner_major() * inner_minor());
}

ComplexPoint joukowski_forward(const OmegaCoord& w) noexcept {
    const double r = w.r();
    return {0.5 * (r + 1.0 / r) * std::cos(w.theta()), 0.5 * (r - 1.0 / r) * std::sin(w.theta())};
}

OmegaCoord joukowski_inverse(ComplexPoint z) {
    if (std::abs(z.y) <= kCutTolerance && std::abs(z.x) <= 1.0) {
        throw DomainError("joukowski_inverse: point on the cut [-1, 1]");
    }
    const cplx zz = z.value();
    // (z - 1)(z + 1) avoids cancellation near the endpoints.
    const cplx root = std::sqrt((zz - 1.0) * (zz + 1.0));
    const cplx a = zz + root;
    const cplx b = zz - root;
    const cplx w = std::abs(a) >= std::abs(b) ? a : b;
    const double r = std::abs(w);
    if (!(r > 1.0 + kCutTolerance)) {
        throw DomainError("joukowski_inverse: point numerically on the cut");
    }
    return OmegaCoord(r, std::arg(w));
}

double abs_one_minus_z_squared(const OmegaCoord& w) noexcept {
    const double sh = std::sinh(std::log(w.r()));
    const double sn = std::sin(w.theta());
    return sh * sh + sn * sn;
}

double abs_one_minus_z(const OmegaCoord& w) noexcept {
    const double sh = std::sinh(0.5 * std::log(w.r()));
    const double sn = std::sin(0.5 * w.theta());
    return 2.0 * (sh * sh + sn * sn);
}

double abs_one_plus_z(const OmegaCoord& w) noexcept {
    const double sh = std::sinh(0.5 * std::log(w.r()));
    const double cs = std::cos(0.5 * w.theta());
    return 2.0 * (sh * sh + cs * cs);
}

double jacobian(const OmegaCoord& w) noexcept { return abs_one_minus_z_squared(w) / w.r(); }

bool contains(const AnnulusSpec& spec, const OmegaCoord& w) noexcept {
    return w.r() >= spec.inner() * (1.0 - kRadialSlack) && w.r() <= spec.outer() * (1.0 + kRadialSlack);
}

bool contains(const AnnulusSpec& spec, ComplexPoint z) noexcept {
    if (!std::isfinite(z.x) || !std::isfinite(z.y)) return false;
    try {
        return contains(spec, joukowski_inverse(z));
    } catch (const DomainError&) {
        return false;
    }
}

}  // namespace ellgas
