#include "ellgas/weights_kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ellgas/errors.hpp"

namespace ellgas {

namespace {

constexpr double kPi = std::numbers::pi;

// D_m / v^{2m} with D_m = v^{2m} - v^{-2m} - R^{2m} + R^{-2m}, factored as
// (1 + (vR)^{-2m}) (1 - (R/v)^{2m}).
double bracket_scaled(double m, double log_v, double log_r) {
    return (1.0 + std::exp(-2.0 * m * (log_v + log_r))) * -std::expm1(-2.0 * m * (log_v - log_r));
}

// (omega^n +- omega^{-n}) / v^n
cplx pair_scaled(int n, cplx L, double log_v, double sign) {
    const double m = n;
    return std::exp(m * (L - log_v)) + sign * std::exp(-m * (L + log_v));
}

// (omega^{n+1} +- omega^{-n}) / v^{n+1}
cplx shifted_pair_scaled(int n, cplx L, double log_v, double sign) {
    const double m = n;
    return std::exp((m + 1.0) * (L - log_v)) + sign * std::exp(-m * L - (m + 1.0) * log_v);
}

}  // namespace

std::string_view to_string(ModelKind model) noexcept {
    switch (model) {
        case ModelKind::I: return "I";
        case ModelKind::II: return "II";
        case ModelKind::III: return "III";
        case ModelKind::IV: return "IV";
    }
    return "?";
}

ModelKind parse_model(std::string_view text) {
    if (text == "I" || text == "1") return ModelKind::I;
    if (text == "II" || text == "2") return ModelKind::II;
    if (text == "III" || text == "3") return ModelKind::III;
    if (text == "IV" || text == "4") return ModelKind::IV;
    throw DomainError("unknown model '" + std::string(text) + "'");
}

ChebyshevKind chebyshev_kind(ModelKind model) noexcept {
    switch (model) {
        case ModelKind::I: return ChebyshevKind::First;
        case ModelKind::II: return ChebyshevKind::Second;
        case ModelKind::III: return ChebyshevKind::Third;
        case ModelKind::IV: return ChebyshevKind::Fourth;
    }
    return ChebyshevKind::First;
}

double annulus_weight(ModelKind model, const OmegaCoord& w) noexcept {
    switch (model) {
        case ModelKind::I: return 1.0 / abs_one_minus_z_squared(w);
        case ModelKind::II: return 1.0;
        case ModelKind::III: return 1.0 / abs_one_minus_z(w);
        case ModelKind::IV: return 1.0 / abs_one_plus_z(w);
    }
    return 0.0;
}

double weight_eval(ModelKind model, ComplexPoint z, const AnnulusSpec& spec) {
    if (!contains(spec, z)) return 0.0;
    return annulus_weight(model, joukowski_inverse(z));
}

double norm_constant(ModelKind model, int n, const AnnulusSpec& spec) {
    if (n < 0) throw DomainError("norm_constant: negative degree");
    const double lv = std::log(spec.outer());
    const double lr = std::log(spec.inner());
    const double lhalf = std::log(0.5 * spec.outer());
    const double m = n;
    switch (model) {
        case ModelKind::I:
            if (n == 0) return 2.0 * kPi * (lv - lr);
            // pi / (4^n n) * D_n
            return kPi / m * std::exp(2.0 * m * lhalf) * bracket_scaled(m, lv, lr);
        case ModelKind::II:
            // pi / (4^{n+1} (n+1)) * D_{n+1}
            return kPi / (m + 1.0) * std::exp(2.0 * (m + 1.0) * lhalf) * bracket_scaled(m + 1.0, lv, lr);
        case ModelKind::III:
        case ModelKind::IV:
            // pi / (4^n (2n+1)) * D_{n+1/2}
            return kPi / (2.0 * m + 1.0) * spec.outer() * std::exp(2.0 * m * lhalf) *
                   bracket_scaled(m + 0.5, lv, lr);
    }
    return 0.0;
}

cplx kernel_elliptic(ModelKind model, int N, ComplexPoint z1, ComplexPoint z2, const AnnulusSpec& spec) {
    if (!contains(spec, z1) || !contains(spec, z2)) {
        throw DomainError("kernel_elliptic: point outside the annulus");
    }
    return kernel_elliptic(model, N, joukowski_inverse(z1), joukowski_inverse(z2), spec);
}

cplx kernel_elliptic(ModelKind model, int N, const OmegaCoord& w1, const OmegaCoord& w2, const AnnulusSpec& spec) {
    if (N < 1) throw DomainError("kernel_elliptic: N must be at least 1");
    if (!contains(spec, w1) || !contains(spec, w2)) {
        throw DomainError("kernel_elliptic: point outside the annulus");
    }
    const double lv = std::log(spec.outer());
    const double lr = std::log(spec.inner());
    const cplx L1 = w1.log_omega();
    const cplx L2 = w2.log_omega();

    switch (model) {
        case ModelKind::I: {
            cplx sum = 1.0 / (2.0 * kPi * (lv - lr));
            for (int n = 1; n < N; ++n) {
                sum += static_cast<double>(n) / kPi * pair_scaled(n, L1, lv, 1.0) *
                       std::conj(pair_scaled(n, L2, lv, 1.0)) / bracket_scaled(n, lv, lr);
            }
            return sum / std::sqrt(abs_one_minus_z_squared(w1) * abs_one_minus_z_squared(w2));
        }
        case ModelKind::II: {
            cplx sum = 0.0;
            for (int n = 1; n <= N; ++n) {
                sum += static_cast<double>(n) * pair_scaled(n, L1, lv, -1.0) *
                       std::conj(pair_scaled(n, L2, lv, -1.0)) / bracket_scaled(n, lv, lr);
            }
            // omega - 1/omega = 2 sinh(log omega)
            const cplx d1 = 2.0 * std::sinh(L1);
            const cplx d2 = 2.0 * std::sinh(L2);
            return 4.0 / kPi * sum / (d1 * std::conj(d2));
        }
        case ModelKind::III:
        case ModelKind::IV: {
            const bool third = model == ModelKind::III;
            const double sign = third ? 1.0 : -1.0;
            cplx sum = 0.0;
            for (int n = 0; n < N; ++n) {
                sum += (2.0 * n + 1.0) * shifted_pair_scaled(n, L1, lv, sign) *
                       std::conj(shifted_pair_scaled(n, L2, lv, sign)) / bracket_scaled(n + 0.5, lv, lr);
            }
            sum *= spec.outer();
            // omega + 1 = 2 e^{L/2} cosh(L/2), omega - 1 = 2 e^{L/2} sinh(L/2)
            auto shift = [&](cplx L) {
                return 2.0 * std::exp(0.5 * L) * (third ? std::cosh(0.5 * L) : std::sinh(0.5 * L));
            };
            const double wprod = third ? abs_one_minus_z(w1) * abs_one_minus_z(w2)
                                       : abs_one_plus_z(w1) * abs_one_plus_z(w2);
            return sum / (kPi * shift(L1) * std::conj(shift(L2)) * std::sqrt(wprod));
        }
    }
    return {};
}

void orthonormal_functions(ModelKind model, const OmegaCoord& w, const AnnulusSpec& spec, std::span<cplx> out) {
    const double lv = std::log(spec.outer());
    const double lr = std::log(spec.inner());
    const cplx L = w.log_omega();
    const double sqrt_w = std::sqrt(annulus_weight(model, w));
    const int count = static_cast<int>(out.size());

    switch (model) {
        case ModelKind::I:
            for (int n = 0; n < count; ++n) {
                if (n == 0) {
                    out[0] = sqrt_w / std::sqrt(2.0 * kPi * (lv - lr));
                } else {
                    out[n] = sqrt_w * std::sqrt(n / kPi) * pair_scaled(n, L, lv, 1.0) /
                             std::sqrt(bracket_scaled(n, lv, lr));
                }
            }
            return;
        case ModelKind::II: {
            const cplx d = 2.0 * std::sinh(L);
            for (int n = 0; n < count; ++n) {
                out[n] = 2.0 * std::sqrt((n + 1.0) / kPi) * pair_scaled(n + 1, L, lv, -1.0) /
                         (d * std::sqrt(bracket_scaled(n + 1.0, lv, lr)));
            }
            return;
        }
        case ModelKind::III:
        case ModelKind::IV: {
            const bool third = model == ModelKind::III;
            const double sign = third ? 1.0 : -1.0;
            const cplx shift = 2.0 * std::exp(0.5 * L) * (third ? std::cosh(0.5 * L) : std::sinh(0.5 * L));
            const double sqrt_v = std::sqrt(spec.outer());
            for (int n = 0; n < count; ++n) {
                out[n] = sqrt_w * std::sqrt((2.0 * n + 1.0) / kPi) * sqrt_v * shifted_pair_scaled(n, L, lv, sign) /
                         (shift * std::sqrt(bracket_scaled(n + 0.5, lv, lr)));
            }
            return;
        }
    }
}

}  // namespace ellgas
