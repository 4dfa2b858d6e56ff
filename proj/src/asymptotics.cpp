#include "ellgas/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ellgas/bessel.hpp"
#include "ellgas/errors.hpp"
#include "ellgas/quadrature.hpp"

namespace ellgas {

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
cplx gauss_unit(F&& f, const GaussRule& rule) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(0.5 * (1.0 + rule.nodes[i]));
    return 0.5 * sum;
}

template <class F>
UnitIntegral integrate_unit(F&& f) {
    static const GaussRule coarse = gauss_legendre(64);
    static const GaussRule fine = gauss_legendre(128);
    const cplx a = gauss_unit(f, coarse);
    const cplx b = gauss_unit(f, fine);
    return {b, std::abs(b - a)};
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// c / (1 - exp(-2 c T)), continued to 1/(2T) at c = 0
double edge_weight(double c, double T) { return c == 0.0 ? 0.5 / T : c / -std::expm1(-2.0 * c * T); }

// c / sinh(c (u - T)), continued to 1/(u - T) at c = 0
double interval_weight(double c, double u, double T) {
    const double d = u - T;
    return c == 0.0 ? 1.0 / d : c / std::sinh(c * d);
}

cplx edge_integral(double tau, double dphi, double T) {
    return integrate_unit([&](double c) {
               return edge_weight(c, T) * std::exp(cplx(-c * tau, c * dphi));
           })
        .value;
}

double edge_denominator(double v, double psi) { return v * v + 1.0 / (v * v) - 2.0 * std::cos(2.0 * psi); }

bool near(double a, double b) { return std::abs(a - b) <= 1e-12; }

}  // namespace

void EdgeScaling::validate() const {
    if (!(v > 1.0)) throw DomainError("EdgeScaling: v must exceed 1");
    if (!(T > 0.0)) throw DomainError("EdgeScaling: T must be positive");
    if (!(t1 > 0.0 && t1 < T && t2 > 0.0 && t2 < T)) throw DomainError("EdgeScaling: need 0 < t1, t2 < T");
}

void IntervalScaling::validate() const {
    if (!(T >= 0.0) || !(T < u)) throw DomainError("IntervalScaling: need 0 <= T < u");
}

cplx edge_kernel_universal(const EdgeScaling& e, int N) {
    e.validate();
    const double pref = 4.0 * N * static_cast<double>(N) / kPi / edge_denominator(e.v, e.psi);
    return pref * edge_integral(e.t1 + e.t2, e.phi1 - e.phi2, e.T);
}

double rho_v(double v, double psi, int N, double T) {
    if (!(v > 1.0) || !(T > 0.0)) throw DomainError("rho_v: need v > 1 and T > 0");
    return 2.0 * N * static_cast<double>(N) / (kPi * T) / edge_denominator(v, psi);
}

double sigma_density(double v, double psi) {
    if (!(v > 1.0)) throw DomainError("sigma_density: v must exceed 1");
    return (v * v - 1.0 / (v * v)) / (2.0 * kPi) / edge_denominator(v, psi);
}

cplx kappa(double tau, double varphi) {
    if (!(tau > 0.0)) throw DomainError("kappa: tau must be positive");
    const cplx z(-tau, varphi);
    if (std::abs(z) < 0.5) {
        // ((z - 1) e^z + 1) / z^2 = sum_{k>=2} (k - 1) z^(k-2) / k!
        cplx sum = 0.0;
        cplx power = 1.0;
        double fact = 2.0;
        for (int k = 2; k < 40; ++k) {
            sum += (k - 1.0) * power / fact;
            power *= z;
            fact *= k + 1.0;
        }
        return sum;
    }
    return ((z - 1.0) * std::exp(z) + 1.0) / (z * z);
}

double lambda_corr(double tau, double varphi) {
    const double k0 = kappa(tau, 0.0).real();
    return 1.0 - std::norm(kappa(tau, std::abs(varphi))) / (k0 * k0);
}

cplx interval_edge_kernel(Parity parity, const IntervalScaling& s, int N) {
    s.validate();
    const cplx s2c = std::conj(s.s2);
    const UnitIntegral in = integrate_unit([&](double c) {
        const cplx num = parity == Parity::Plus ? std::cosh(c * s.s1) * std::cosh(c * s2c)
                                                : std::sinh(c * s.s1) * std::sinh(c * s2c);
        return num * interval_weight(c, s.u, s.T) / std::cosh(c * (s.u + s.T));
    });
    const double n4 = std::pow(static_cast<double>(N), 4);
    const cplx pref = parity == Parity::Plus ? cplx(1.0 / (std::abs(s.s1) * std::abs(s.s2))) : 1.0 / (s.s1 * s2c);
    return n4 / kPi * pref * in.value;
}

cplx interval_bulk_kernel(const IntervalScaling& s, int N) {
    s.validate();
    const cplx sum = s.s1 + std::conj(s.s2);
    const UnitIntegral in = integrate_unit([&](double c) {
        return std::cosh(c * sum) * interval_weight(c, s.u, s.T) / (2.0 * std::cosh(c * (s.u + s.T)));
    });
    return N * static_cast<double>(N) / kPi * in.value;
}

double sine_kernel_line(double phi1, double phi2, int N) { return N / kPi * sinc(phi1 - phi2); }

double kernel_r(Parity parity, double phi1, double phi2, int N) {
    if (phi1 == 0.0 || phi2 == 0.0) throw DomainError("kernel_r: phi must be nonzero");
    const double sign = parity == Parity::Plus ? 1.0 : -1.0;
    return N * static_cast<double>(N) / kPi / std::sqrt(std::abs(phi1 * phi2)) *
           (sinc(phi1 - phi2) + sign * sinc(phi1 + phi2));
}

double bessel_kernel(double a, double phi1, double phi2, int N) {
    if (!(a > -1.0)) throw DomainError("bessel_kernel: a must exceed -1");
    if (!(phi1 > 0.0) || !(phi2 > 0.0)) throw DomainError("bessel_kernel: phi must be positive");

    // [0, c0] termwise from the power series, c0 * max(phi) <= 4
    const double c0 = std::min(1.0, 4.0 / std::max(phi1, phi2));
    auto coefficients = [&](double x) {
        std::vector<double> beta;
        double term = std::exp(a * std::log(0.5 * x) - std::lgamma(a + 1.0));
        const double q = 0.25 * x * x;
        for (int k = 0; k < 40; ++k) {
            beta.push_back(term);
            term *= -q / ((k + 1.0) * (k + 1.0 + a));
        }
        return beta;
    };
    const auto b1 = coefficients(c0 * phi1);
    const auto b2 = coefficients(c0 * phi2);
    double low = 0.0;
    for (std::size_t k = 0; k < b1.size(); ++k) {
        for (std::size_t m = 0; m < b2.size(); ++m) low += b1[k] * b2[m] / (2.0 * a + 2.0 * (k + m) + 2.0);
    }
    low *= c0 * c0;

    // [c0, 1] on panels that grow geometrically and are capped by the oscillation scale
    static const GaussRule rule = gauss_legendre(24);
    const double cap = 8.0 / (phi1 + phi2);
    double high = 0.0;
    double lo = c0;
    while (lo < 1.0) {
        const double hi = std::min(1.0, lo + std::min(lo, cap));
        const double half = 0.5 * (hi - lo);
        const double mid = lo + half;
        double part = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double c = mid + half * rule.nodes[i];
            part += rule.weights[i] * c * bessel_j(a, c * phi1) * bessel_j(a, c * phi2);
        }
        high += half * part;
        lo = hi;
    }
    return N * static_cast<double>(N) * (low + high);
}

cplx edge_kernel_radial_sym(double v, double T, double t1, double t2, double phi1, double phi2, int N) {
    if (!(v > 1.0) || !(T > 0.0)) throw DomainError("edge_kernel_radial_sym: need v > 1 and T > 0");
    if (!(t1 > 0.0 && t1 < T && t2 > 0.0 && t2 < T)) throw DomainError("edge_kernel_radial_sym: need 0 < t < T");
    const double pref = 4.0 * N * static_cast<double>(N) / (kPi * v * v);
    return pref * edge_integral(t1 + t2, phi1 - phi2, T);
}

Parity interval_edge_parity(ModelKind model, double psi) {
    const bool left = near(psi, kPi);
    if (!near(psi, 0.0) && !left) throw DomainError("interval_edge_parity: psi must be 0 or pi");
    switch (model) {
        case ModelKind::I: return Parity::Plus;
        case ModelKind::II: return Parity::Minus;
        case ModelKind::III: return left ? Parity::Minus : Parity::Plus;
        case ModelKind::IV: return left ? Parity::Plus : Parity::Minus;
    }
    return Parity::Plus;
}

cplx interval_limit(ModelKind model, const IntervalScaling& s, int N) {
    if (near(s.psi, 0.5 * kPi)) return interval_bulk_kernel(s, N);
    return interval_edge_kernel(interval_edge_parity(model, s.psi), s, N);
}

ScaledPair edge_scaled_points(const EdgeScaling& e, int N) {
    e.validate();
    if (N < 1) throw DomainError("edge_scaled_points: N must be at least 1");
    const double inner = e.v * (1.0 - e.T / N);
    if (!(inner > 1.0)) throw DomainError("edge_scaled_points: scaled inner radius is not above 1");
    ScaledPair pair{OmegaCoord(e.v * (1.0 - e.t1 / N), e.psi + e.phi1 / N),
                    OmegaCoord(e.v * (1.0 - e.t2 / N), e.psi + e.phi2 / N), AnnulusSpec(inner, e.v)};
    if (!contains(pair.spec, pair.w1) || !contains(pair.spec, pair.w2)) {
        throw DomainError("edge_scaled_points: scaled point leaves the annulus");
    }
    return pair;
}

ScaledPair interval_scaled_points(const IntervalScaling& s, int N) {
    s.validate();
    if (N < 1) throw DomainError("interval_scaled_points: N must be at least 1");
    const double inner = 1.0 + s.T / N;
    if (!(inner > 1.0)) throw DomainError("interval_scaled_points: T must be positive for a finite annulus");
    const double r1 = 1.0 + s.s1.real() / N;
    const double r2 = 1.0 + s.s2.real() / N;
    if (!(r1 > 1.0) || !(r2 > 1.0)) throw DomainError("interval_scaled_points: scaled point leaves the annulus");
    ScaledPair pair{OmegaCoord(r1, s.psi + s.s1.imag() / N), OmegaCoord(r2, s.psi + s.s2.imag() / N),
                    AnnulusSpec(inner, 1.0 + s.u / N)};
    if (!contains(pair.spec, pair.w1) || !contains(pair.spec, pair.w2)) {
        throw DomainError("interval_scaled_points: scaled point leaves the annulus");
    }
    return pair;
}

cplx radial_sym_edge_finite(double gamma, double v, double T, double t1, double t2, double phi1, double phi2,
                            int N) {
    if (N < 1) throw DomainError("radial_sym_edge_finite: N must be at least 1");
    const RadialSymSpec spec(gamma, v * (1.0 - T / N), v);
    const double half = 0.5 * v;
    const auto z1 = ComplexPoint::from(std::polar(half * (1.0 - t1 / N), phi1 / N));
    const auto z2 = ComplexPoint::from(std::polar(half * (1.0 - t2 / N), phi2 / N));
    if (!contains(spec, z1) || !contains(spec, z2)) {
        throw DomainError("radial_sym_edge_finite: scaled point leaves the annulus");
    }
    return kernel_radial_sym(spec, N, z1, z2);
}

}  // namespace ellgas
