#pragma once

#include "ellgas/geometry.hpp"
#include "ellgas/radial_sym.hpp"
#include "ellgas/weights_kernels.hpp"

namespace ellgas {

/// Edge regime: r_j = v(1 - t_j/N), theta_j = psi + phi_j/N, R = v(1 - T/N).
struct EdgeScaling {
    double v = 2.0;
    double psi = 0.0;
    double T = 1.0;
    double t1 = 0.5;
    double t2 = 0.5;
    double phi1 = 0.0;
    double phi2 = 0.0;

    /// Throws DomainError unless v > 1, T > 0 and 0 < t1, t2 < T.
    void validate() const;
};

/// Interval regime: r_j = 1 + t_j/N, theta_j = psi + phi_j/N, R = 1 + T/N, v = 1 + u/N.
struct IntervalScaling {
    double u = 1.0;
    double T = 0.0;
    double psi = 0.0;
    cplx s1{0.5, 0.0};  // t1 + i phi1
    cplx s2{0.5, 0.0};  // t2 + i phi2

    /// Throws DomainError unless 0 <= T < u.
    void validate() const;
};

enum class Parity { Plus, Minus };

/// Result of a [0, 1] Gauss-Legendre integral: 128-node value, difference to the 64-node value.
struct UnitIntegral {
    cplx value;
    double error;
};

[[nodiscard]] cplx edge_kernel_universal(const EdgeScaling& e, int N);

[[nodiscard]] double rho_v(double v, double psi, int N, double T);

[[nodiscard]] double sigma_density(double v, double psi);

[[nodiscard]] cplx kappa(double tau, double varphi);

[[nodiscard]] double lambda_corr(double tau, double varphi);

[[nodiscard]] cplx interval_edge_kernel(Parity parity, const IntervalScaling& s, int N);

/// Complex in general; real when s1 + conj(s2) is real.
[[nodiscard]] cplx interval_bulk_kernel(const IntervalScaling& s, int N);

[[nodiscard]] double sine_kernel_line(double phi1, double phi2, int N);

[[nodiscard]] double kernel_r(Parity parity, double phi1, double phi2, int N);

/// N^2 int_0^1 c J_a(c phi1) J_a(c phi2) dc.
[[nodiscard]] double bessel_kernel(double a, double phi1, double phi2, int N);

[[nodiscard]] cplx edge_kernel_radial_sym(double v, double T, double t1, double t2, double phi1, double phi2, int N);

/// Which interval-edge kernel a model approaches at psi = 0 or psi = pi.
[[nodiscard]] Parity interval_edge_parity(ModelKind model, double psi);

/// Interval-regime limit for a model: bulk kernel at psi = pi/2, routed edge kernel at 0 and pi.
[[nodiscard]] cplx interval_limit(ModelKind model, const IntervalScaling& s, int N);

/// Finite-N points and annulus for a scaling. Throws DomainError when the
/// scaled points are not inside the scaled annulus.
struct ScaledPair {
    OmegaCoord w1;
    OmegaCoord w2;
    AnnulusSpec spec;
};

[[nodiscard]] ScaledPair edge_scaled_points(const EdgeScaling& e, int N);
[[nodiscard]] ScaledPair interval_scaled_points(const IntervalScaling& s, int N);

/// Finite-N radially symmetric kernel at the edge-scaled points |z_j| = (v/2)(1 - t_j/N).
[[nodiscard]] cplx radial_sym_edge_finite(double gamma, double v, double T, double t1, double t2, double phi1,
                                          double phi2, int N);

}  // namespace ellgas
