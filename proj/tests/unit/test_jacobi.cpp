#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ellgas/errors.hpp"
#include "ellgas/jacobi.hpp"
#include "ellgas/quadrature.hpp"

using namespace ellgas;

namespace {

// int_{-1}^{1} (1-x)^a (1+x)^b f(x) dx with x = cos t
template <class F>
double weighted_integral(const JacobiSpec& s, F&& f) {
    return integrate_interval(
        [&](double t) {
            const double x = std::cos(t);
            const double w = std::pow(2.0 * std::pow(std::sin(0.5 * t), 2), s.a()) *
                             std::pow(2.0 * std::pow(std::cos(0.5 * t), 2), s.b());
            return w * f(x) * std::sin(t);
        },
        0.0, std::numbers::pi, 32, 8);
}

}  // namespace

TEST_CASE("frozen Jacobi values") {
    CHECK(jacobi_polynomial(JacobiSpec(0.3, -0.2), 3, 0.7) == doctest::Approx(0.0151113125).epsilon(1e-12));
    CHECK(jacobi_polynomial(JacobiSpec(-0.5, -0.5), 2, 0.5) == doctest::Approx(-0.1875).epsilon(1e-14));
    CHECK(jacobi_polynomial(JacobiSpec(0.5, 0.5), 1, 0.25) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(kernel_jacobi(JacobiSpec(0.3, -0.2), 5, 0.2, -0.4) == doctest::Approx(0.18080213257286108).epsilon(1e-12));
}

TEST_CASE("recurrence seeds") {
    const JacobiSpec s(0.7, -0.4);
    CHECK(jacobi_polynomial(s, 0, 0.3) == 1.0);
    CHECK(jacobi_polynomial(s, 1, 0.3) == doctest::Approx(0.5 * (0.7 + 0.4) + 0.5 * (0.7 - 0.4 + 2.0) * 0.3));
}

TEST_CASE("monic polynomials have unit leading coefficient") {
    // leading coefficient recovered as the n-th divided difference on n+1 nodes
    const JacobiSpec s(0.3, 1.2);
    for (int n = 1; n <= 8; ++n) {
        std::vector<double> x(static_cast<std::size_t>(n + 1));
        std::vector<double> f(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = -1.0 + 2.0 * static_cast<double>(i) / n;
            f[i] = jacobi_monic(s, n, x[i]);
        }
        for (std::size_t level = 1; level < x.size(); ++level) {
            for (std::size_t i = x.size() - 1; i >= level; --i) f[i] = (f[i] - f[i - 1]) / (x[i] - x[i - level]);
        }
        CHECK(f.back() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("orthogonality and norm constants by quadrature") {
    for (const JacobiSpec& s : {JacobiSpec(1.5, 2.0), JacobiSpec(-0.5, 0.5), JacobiSpec(0.5, 0.5)}) {
        for (int m = 0; m <= 6; ++m) {
            for (int n = 0; n <= 6; ++n) {
                const double g =
                    weighted_integral(s, [&](double x) { return jacobi_monic(s, m, x) * jacobi_monic(s, n, x); });
                if (m == n) {
                    CHECK(g == doctest::Approx(std::exp(jacobi_log_norm_constant(s, n))).epsilon(1e-11));
                } else {
                    CHECK(std::abs(g) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("Jacobi kernel is a rank-N projection") {
    const JacobiSpec s(1.5, 2.0);
    const int N = 5;
    const double trace = weighted_integral(s, [&](double x) {
        return kernel_jacobi(s, N, x, x) / (std::pow(1.0 - x, s.a()) * std::pow(1.0 + x, s.b()));
    });
    CHECK(trace == doctest::Approx(N).epsilon(1e-11));
    for (auto [x1, x2] : {std::pair{0.2, -0.4}, std::pair{0.9, 0.1}, std::pair{-0.7, -0.7}}) {
        const double lhs = weighted_integral(s, [&](double y) {
            return kernel_jacobi(s, N, x1, y) * kernel_jacobi(s, N, y, x2) /
                   (std::pow(1.0 - y, s.a()) * std::pow(1.0 + y, s.b()));
        });
        CHECK(lhs == doctest::Approx(kernel_jacobi(s, N, x1, x2)).epsilon(1e-10));
    }
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(JacobiSpec(-1.0, 0.0), DomainError);
    CHECK_THROWS_AS(JacobiSpec(0.0, -1.5), DomainError);
    const JacobiSpec s(0.0, 0.0);
    CHECK_THROWS_AS((void)kernel_jacobi(s, 3, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS((void)kernel_jacobi(s, 0, 0.1, 0.0), DomainError);
    CHECK_THROWS_AS((void)jacobi_polynomial(s, -1, 0.0), DomainError);
}
