#pragma once

#include "ellgas/geometry.hpp"

namespace ellgas {

/// Circular annulus R/2 <= |z| <= v/2 with weight |z|^gamma.
class RadialSymSpec {
public:
    /// Throws DomainError unless gamma > -2 and 1 < R < v.
    RadialSymSpec(double gamma, double inner, double outer);

    [[nodiscard]] double gamma() const noexcept { return gamma_; }
    [[nodiscard]] double inner() const noexcept { return inner_; }
    [[nodiscard]] double outer() const noexcept { return outer_; }
    [[nodiscard]] double inner_radius() const noexcept { return 0.5 * inner_; }
    [[nodiscard]] double outer_radius() const noexcept { return 0.5 * outer_; }

private:
    double gamma_;
    double inner_;
    double outer_;
};

[[nodiscard]] bool contains(const RadialSymSpec& spec, ComplexPoint z) noexcept;

/// h_n = 2 pi / (2n + gamma + 2) ((v/2)^{2n+gamma+2} - (R/2)^{2n+gamma+2}) for M_n = z^n.
[[nodiscard]] double radial_sym_norm_constant(const RadialSymSpec& spec, int n);

/// Monomial-basis kernel. Throws DomainError outside the annulus or for N < 1.
[[nodiscard]] cplx kernel_radial_sym(const RadialSymSpec& spec, int N, ComplexPoint z1, ComplexPoint z2);

}  // namespace ellgas
