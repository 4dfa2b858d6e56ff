#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "ellgas/chebyshev.hpp"
#include "ellgas/geometry.hpp"

namespace ellgas {

/// The four annulus weights:
///   I   -> 1/|1 - z^2|  (first kind)
///   II  -> 1            (second kind)
///   III -> 1/|1 - z|    (third kind)
///   IV  -> 1/|1 + z|    (fourth kind)
enum class ModelKind { I, II, III, IV };

inline constexpr ModelKind kAllModels[] = {ModelKind::I, ModelKind::II, ModelKind::III, ModelKind::IV};

[[nodiscard]] std::string_view to_string(ModelKind model) noexcept;
/// Parses "I".."IV" (also "1".."4"). Throws DomainError otherwise.
[[nodiscard]] ModelKind parse_model(std::string_view text);
[[nodiscard]] ChebyshevKind chebyshev_kind(ModelKind model) noexcept;

/// w_A on the annulus, evaluated from omega. No support check.
[[nodiscard]] double annulus_weight(ModelKind model, const OmegaCoord& w) noexcept;

/// w_C(z): the annulus weight inside the annulus, 0 outside.
[[nodiscard]] double weight_eval(ModelKind model, ComplexPoint z, const AnnulusSpec& spec);

/// Closed-form squared norm h_n of the monic polynomial M_n under the model weight.
[[nodiscard]] double norm_constant(ModelKind model, int n, const AnnulusSpec& spec);

/// K_N(z1, z2) for the given model, by the omega-form sums with every term
/// rescaled by powers of v. Throws DomainError if a point is outside the annulus
/// or N < 1.
[[nodiscard]] cplx kernel_elliptic(ModelKind model, int N, ComplexPoint z1, ComplexPoint z2,
                                   const AnnulusSpec& spec);
[[nodiscard]] cplx kernel_elliptic(ModelKind model, int N, const OmegaCoord& w1, const OmegaCoord& w2,
                                   const AnnulusSpec& spec);

/// Fills out[n] = sqrt(w(z)) M_n(z) / sqrt(h_n), n = 0..out.size()-1, so that
/// K_N(z1, z2) = sum_n out1[n] * conj(out2[n]). No support check.
void orthonormal_functions(ModelKind model, const OmegaCoord& w, const AnnulusSpec& spec, std::span<cplx> out);

/// det[K(p_j, p_l)] for a Hermitian kernel, complex result.
template <class Point, class Kernel>
[[nodiscard]] cplx correlation_det_complex(Kernel&& kernel, std::span<const Point> points) {
    const auto k = static_cast<Eigen::Index>(points.size());
    if (k == 0) return {1.0, 0.0};
    Eigen::MatrixXcd m(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index l = 0; l < k; ++l) {
            m(j, l) = cplx(kernel(points[static_cast<std::size_t>(j)], points[static_cast<std::size_t>(l)]));
        }
    }
    return m.partialPivLu().determinant();
}

/// The k-point correlation det[K(p_j, p_l)]. The imaginary part is round-off and is dropped.
template <class Point, class Kernel>
[[nodiscard]] double correlation_det(Kernel&& kernel, std::span<const Point> points) {
    return correlation_det_complex<Point>(std::forward<Kernel>(kernel), points).real();
}

}  // namespace ellgas
