#pragma once

#include <complex>
#include <numbers>

namespace ellgas {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Location z = x + iy of a molecule on the plane.
struct ComplexPoint {
    double x = 0.0;
    double y = 0.0;

    [[nodiscard]] cplx value() const noexcept { return {x, y}; }
    [[nodiscard]] static ComplexPoint from(cplx z) noexcept { return {z.real(), z.imag()}; }
};

/// Elliptic polar coordinates: omega = r e^{i theta}, with r > 1 and theta in [0, 2 pi).
class OmegaCoord {
public:
    /// Throws DomainError unless r > 1 and both values are finite. theta is wrapped to [0, 2 pi).
    OmegaCoord(double r, double theta);

    [[nodiscard]] double r() const noexcept { return r_; }
    [[nodiscard]] double theta() const noexcept { return theta_; }
    [[nodiscard]] cplx omega() const noexcept { return std::polar(r_, theta_); }
    /// Principal-branch logarithm ln r + i theta.
    [[nodiscard]] cplx log_omega() const noexcept { return {std::log(r_), theta_}; }

private:
    double r_;
    double theta_;
};

/// Elliptic annulus between the images of |omega| = R and |omega| = v, 1 < R < v.
class AnnulusSpec {
public:
    /// Throws DomainError unless 1 < R < v, both finite.
    AnnulusSpec(double inner, double outer);

    [[nodiscard]] double inner() const noexcept { return inner_; }
    [[nodiscard]] double outer() const noexcept { return outer_; }

    // Semi-axes of the bounding ellipses.
    [[nodiscard]] double outer_major() const noexcept { return 0.5 * (outer_ + 1.0 / outer_); }
    [[nodiscard]] double outer_minor() const noexcept { return 0.5 * (outer_ - 1.0 / outer_); }
    [[nodiscard]] double inner_major() const noexcept { return 0.5 * (inner_ + 1.0 / inner_); }
    [[nodiscard]] double inner_minor() const noexcept { return 0.5 * (inner_ - 1.0 / inner_); }

    /// pi (a_v b_v - a_R b_R).
    [[nodiscard]] double area() const noexcept;

private:
    double inner_;
    double outer_;
};

/// z = (omega + 1/omega) / 2.
[[nodiscard]] ComplexPoint joukowski_forward(const OmegaCoord& w) noexcept;

/// The preimage with |omega| > 1. Throws DomainError on the cut [-1, 1].
[[nodiscard]] OmegaCoord joukowski_inverse(ComplexPoint z);

/// d(x, y)/d(r, theta) = |omega - 1/omega|^2 / (4 r) = |1 - z^2| / r.
[[nodiscard]] double jacobian(const OmegaCoord& w) noexcept;

// Moduli evaluated through half-angle factorizations in omega, free of
// cancellation near the inner boundary:
//   |1 - z^2| = sinh^2(ln r) + sin^2 theta
//   |1 - z|   = 2 (sinh^2(ln r / 2) + sin^2(theta / 2))
//   |1 + z|   = 2 (sinh^2(ln r / 2) + cos^2(theta / 2))
[[nodiscard]] double abs_one_minus_z_squared(const OmegaCoord& w) noexcept;
[[nodiscard]] double abs_one_minus_z(const OmegaCoord& w) noexcept;
[[nodiscard]] double abs_one_plus_z(const OmegaCoord& w) noexcept;

/// Membership in the closed annulus. Points on the cut are never inside.
[[nodiscard]] bool contains(const AnnulusSpec& spec, ComplexPoint z) noexcept;

/// Radial-coordinate membership test, R <= r <= v up to round-off.
[[nodiscard]] bool contains(const AnnulusSpec& spec, const OmegaCoord& w) noexcept;

}  // namespace ellgas
