#include "ellgas/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ellgas/errors.hpp"
#include "ellgas/quadrature.hpp"

namespace ellgas {

namespace {

constexpr double kSeriesLimit = 2.0;
constexpr int kPanelNodes = 24;

const GaussRule& panel_rule() {
    static const GaussRule rule = gauss_legendre(kPanelNodes);
    return rule;
}

double series(double a, double x) {
    const double q = 0.25 * x * x;
    double term = std::exp(a * std::log(0.5 * x) - std::lgamma(a + 1.0));
    double sum = term;
    for (int k = 0; k < 200; ++k) {
        term *= -q / ((k + 1.0) * (k + 1.0 + a));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) && k > 2) break;
    }
    return sum;
}

template <class F>
double composite(F&& f, double lo, double hi, int panels) {
    const GaussRule& rule = panel_rule();
    const double half = 0.5 * (hi - lo) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (2 * p + 1) * half;
        double part = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) part += rule.weights[i] * f(mid + half * rule.nodes[i]);
        sum += part * half;
    }
    return sum;
}

// J_a(x) = (1/pi) int_0^pi cos(a t - x sin t) dt - (sin(a pi)/pi) int_0^inf exp(-x sinh t - a t) dt
double schlafli(double a, double x) {
    const double pi = std::numbers::pi;
    const int osc_panels = 1 + static_cast<int>(std::ceil((x + std::abs(a)) * pi / 16.0));
    const double first = composite([&](double t) { return std::cos(a * t - x * std::sin(t)); }, 0.0, pi, osc_panels);

    const double s = std::sin(a * pi);
    double second = 0.0;
    if (s != 0.0) {
        // beyond tmax the integrand is below exp(-45)
        const double tmax = std::asinh((45.0 + 2.0 * std::abs(a)) / x) + 1.0;
        second = composite([&](double t) { return std::exp(-x * std::sinh(t) - a * t); }, 0.0, tmax, 8);
    }
    return (first - s * second) / pi;
}

}  // namespace

double bessel_j(double a, double x) {
    if (!(a > -1.0) || !std::isfinite(a)) throw DomainError("bessel_j: order must be > -1");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("bessel_j: argument must be finite and >= 0");
    if (x == 0.0) {
        if (a == 0.0) return 1.0;
        return a > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return x <= kSeriesLimit ? series(a, x) : schlafli(a, x);
}

}  // namespace ellgas
