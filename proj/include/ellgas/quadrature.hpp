#pragma once

#include <functional>
#include <vector>

#include "ellgas/geometry.hpp"
#include "ellgas/radial_sym.hpp"
#include "ellgas/weights_kernels.hpp"

namespace ellgas {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

[[nodiscard]] GaussRule gauss_legendre(int n);

/// Integrates f over [lo, hi] with `panels` equal panels of an n-point rule.
[[nodiscard]] double integrate_interval(const std::function<double(double)>& f, double lo, double hi, int n,
                                        int panels = 1);

/// Tensor rule over the annulus: composite Gauss-Legendre in r, trapezoid in theta.
struct QuadratureSpec {
    int radial_nodes = 24;
    int radial_panels = 4;
    int angular_nodes = 64;
    double target_tol = 1e-10;
    int max_refinements = 4;

    /// Throws DomainError unless radial_nodes >= 4, angular_nodes >= 8, target_tol > 0.
    void validate() const;
};

/// A quadrature node; `weight` already includes the Joukowski Jacobian, so
/// sum f(z) * weight approximates the dx dy integral.
struct AnnulusNode {
    OmegaCoord w;
    ComplexPoint z;
    double weight;
};

[[nodiscard]] std::vector<AnnulusNode> annulus_nodes(const AnnulusSpec& spec, int radial_nodes, int radial_panels,
                                                     int angular_nodes);

/// Integral over the annulus of f(node) dx dy. The rule is refined by doubling
/// both the radial panel count and the angular node count until two successive
/// results agree to target_tol relative to max(|I|, integral of |f|).
/// Throws ToleranceNotMet after max_refinements doublings.
[[nodiscard]] cplx integrate_annulus_nodes(const std::function<cplx(const AnnulusNode&)>& f, const AnnulusSpec& spec,
                                           const QuadratureSpec& q);

/// Integral over the annulus of f(z) dx dy.
[[nodiscard]] cplx integrate_annulus(const std::function<cplx(ComplexPoint)>& f, const AnnulusSpec& spec,
                                     const QuadratureSpec& q);

/// Integral over the circular annulus R/2 <= |z| <= v/2 in polar coordinates.
[[nodiscard]] cplx integrate_disc_annulus(const std::function<cplx(ComplexPoint)>& f, const RadialSymSpec& spec,
                                          const QuadratureSpec& q);

/// Gram matrix of the monic polynomials under a model weight, compared with the closed-form h_n.
struct OrthoReport {
    ModelKind model = ModelKind::I;
    int nmax = 0;
    std::vector<std::vector<double>> gram;  // (nmax+1) x (nmax+1)
    std::vector<double> reference;          // closed-form h_n
    double max_offdiag = 0.0;               // max |gram[m][n]|, m != n
    double max_diag_relerr = 0.0;           // max |gram[n][n] - h_n| / h_n
    double max_reference = 0.0;             // max h_n
    double max_asymmetry = 0.0;             // max |gram[m][n] - gram[n][m]|
};

[[nodiscard]] OrthoReport orthogonality_matrix(ModelKind model, int nmax, const AnnulusSpec& spec,
                                               const QuadratureSpec& q);

/// Integral of K_N(z, z) over the annulus; equals N for a projection kernel.
[[nodiscard]] double kernel_trace(ModelKind model, int N, const AnnulusSpec& spec, const QuadratureSpec& q);

/// Default rule for integrands up to polynomial degree nmax in z and conj(z).
[[nodiscard]] QuadratureSpec default_quadrature(int nmax);

}  // namespace ellgas
