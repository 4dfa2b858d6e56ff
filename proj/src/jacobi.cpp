#include "ellgas/jacobi.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ellgas/errors.hpp"

namespace ellgas {

namespace {

// log(M_n / P_n) = log(2^n n! Gamma(a+b+n+1) / Gamma(a+b+2n+1)), n >= 1.
double log_monic_factor(double a, double b, int n) {
    const double m = n;
    return m * std::numbers::ln2 + std::lgamma(m + 1.0) + std::lgamma(a + b + m + 1.0) -
           std::lgamma(a + b + 2.0 * m + 1.0);
}

// P_0..P_{count-1} at x.
std::vector<double> jacobi_sequence(double a, double b, int count, double x) {
    std::vector<double> p(static_cast<std::size_t>(std::max(count, 0)));
    if (count > 0) p[0] = 1.0;
    if (count > 1) p[1] = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int n = 2; n < count; ++n) {
        const double m = n;
        const double s = 2.0 * m + a + b;
        const double c1 = 2.0 * m * (m + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double c3 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * s;
        p[static_cast<std::size_t>(n)] =
            (c2 * p[static_cast<std::size_t>(n - 1)] - c3 * p[static_cast<std::size_t>(n - 2)]) / c1;
    }
    return p;
}

}  // namespace

JacobiSpec::JacobiSpec(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a > -1.0) || !(b > -1.0)) {
        throw DomainError("JacobiSpec: need a, b > -1, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
}

double jacobi_polynomial(const JacobiSpec& spec, int n, double x) {
    if (n < 0) throw DomainError("jacobi_polynomial: negative degree");
    return jacobi_sequence(spec.a(), spec.b(), n + 1, x).back();
}

double jacobi_monic(const JacobiSpec& spec, int n, double x) {
    if (n == 0) return 1.0;
    return std::exp(log_monic_factor(spec.a(), spec.b(), n)) * jacobi_polynomial(spec, n, x);
}

double jacobi_log_norm_constant(const JacobiSpec& spec, int n) {
    if (n < 0) throw DomainError("jacobi_log_norm_constant: negative degree");
    const double a = spec.a();
    const double b = spec.b();
    if (n == 0) {
        // Gamma(a+b+1) cancels; it is singular at a + b = -1.
        return (a + b + 1.0) * std::numbers::ln2 + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
               std::lgamma(a + b + 2.0);
    }
    const double m = n;
    return (2.0 * m + a + b + 1.0) * std::numbers::ln2 + std::lgamma(m + 1.0) + std::lgamma(a + m + 1.0) +
           std::lgamma(b + m + 1.0) + std::lgamma(a + b + m + 1.0) - std::lgamma(a + b + 2.0 * m + 1.0) -
           std::lgamma(a + b + 2.0 * m + 2.0);
}

double kernel_jacobi(const JacobiSpec& spec, int N, double x1, double x2) {
    if (N < 1) throw DomainError("kernel_jacobi: N must be at least 1");
    if (!(std::abs(x1) < 1.0) || !(std::abs(x2) < 1.0)) {
        throw DomainError("kernel_jacobi: points must lie in (-1, 1)");
    }
    const double a = spec.a();
    const double b = spec.b();
    const auto p1 = jacobi_sequence(a, b, N, x1);
    const auto p2 = jacobi_sequence(a, b, N, x2);
    double sum = 0.0;
    for (int n = 0; n < N; ++n) {
        const double log_scale = (n == 0 ? 0.0 : 2.0 * log_monic_factor(a, b, n)) - jacobi_log_norm_constant(spec, n);
        sum += p1[static_cast<std::size_t>(n)] * p2[static_cast<std::size_t>(n)] * std::exp(log_scale);
    }
    const double w1 = std::pow(1.0 - x1, a) * std::pow(1.0 + x1, b);
    const double w2 = std::pow(1.0 - x2, a) * std::pow(1.0 + x2, b);
    return std::sqrt(w1 * w2) * sum;
}

}  // namespace ellgas
