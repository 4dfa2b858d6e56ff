#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ellgas/asymptotics.hpp"
#include "ellgas/errors.hpp"

using namespace ellgas;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// composite Simpson on [0, 1]
template <class F>
cplx simpson(F&& f, int intervals) {
    const double h = 1.0 / intervals;
    cplx s = f(0.0) + f(1.0);
    for (int i = 1; i < intervals; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("frozen limit values") {
    const cplx edge = edge_kernel_universal(EdgeScaling{2.0, 0.7, 3.0, 1.2, 1.2, 0.5, 0.0}, 1);
    CHECK(rel(edge, {0.046695661373894118, 0.010677389382583751}) < 1e-13);
    CHECK(kappa(1.0, 0.0).real() == doctest::Approx(0.26424111765711536).epsilon(1e-14));
    CHECK(rel(kappa(0.7, 2.3), {0.031901162268990564, 0.26828823049041511}) < 1e-13);
    CHECK(lambda_corr(1.0, 1.7) == doctest::Approx(0.16551762862277013).epsilon(1e-12));
    CHECK(rho_v(2.0, 0.0, 1, 1.0) == doctest::Approx(0.28294212105225837).epsilon(1e-14));
    CHECK(rho_v(2.0, kPi / 2, 1, 1.0) == doctest::Approx(0.10185916357881301).epsilon(1e-14));

    const IntervalScaling real_s{1.0, 0.2, kPi / 2, {0.5, 0.0}, {0.5, 0.0}};
    CHECK(interval_bulk_kernel(real_s, 1).real() == doctest::Approx(0.18147599905212987).epsilon(1e-13));
    CHECK(interval_bulk_kernel(real_s, 1).imag() == 0.0);
    const IntervalScaling s{1.0, 0.2, 0.0, {0.5, 0.4}, {0.7, -0.3}};
    CHECK(rel(interval_bulk_kernel(s, 1), {0.17727767911211449, 0.039748694981034012}) < 1e-13);
    CHECK(rel(interval_edge_kernel(Parity::Plus, s, 1), {0.69029074709196142, 0.079721005983870959}) < 1e-13);
    CHECK(rel(interval_edge_kernel(Parity::Minus, s, 1), {0.090802297885755446, 0.0068550412731038144}) < 1e-13);
}

TEST_CASE("bulk kernel against an independent Simpson rule") {
    const double u = 1.0;
    const double T = 0.2;
    auto f = [&](double c) -> cplx {
        if (c == 0.0) return 1.0 / (2.0 * (u - T));
        const double d = std::exp(2 * c * u) - std::exp(-2 * c * u) - std::exp(2 * c * T) + std::exp(-2 * c * T);
        return c * (std::exp(c * 1.0) + std::exp(-c * 1.0)) / d;
    };
    const double oracle = simpson(f, 20000).real() / kPi;
    CHECK(interval_bulk_kernel(IntervalScaling{u, T, kPi / 2, {0.5, 0.0}, {0.5, 0.0}}, 1).real() ==
          doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("sigma density") {
    CHECK(sigma_density(2.0, 0.0) == doctest::Approx(3.75 / (2 * kPi * 2.25)).epsilon(1e-15));
    CHECK(sigma_density(2.0, kPi / 2) == doctest::Approx(3.75 / (2 * kPi * 6.25)).epsilon(1e-15));
    for (double v : {1.1, 1.2, 1.5, 2.0, 10.0}) {
        const int n = 2048;
        double sum = 0.0;
        for (int k = 0; k < n; ++k) sum += sigma_density(v, kTwoPi * k / n);
        CHECK(sum * kTwoPi / n == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(sigma_density(v, 0.3) == doctest::Approx(sigma_density(v, 0.3 + kPi)).epsilon(1e-14));
        for (int k = 0; k < 50; ++k) {
            CHECK(sigma_density(v, kPi / 2 * k / 50.0) > sigma_density(v, kPi / 2 * (k + 1) / 50.0));
        }
    }
    CHECK_THROWS_AS((void)sigma_density(1.0, 0.0), DomainError);
}

TEST_CASE("rho_v and sigma share the angular profile") {
    for (double psi : {0.0, 0.4, 1.2}) {
        CHECK(rho_v(1.7, psi, 3, 2.0) / sigma_density(1.7, psi) ==
              doctest::Approx(rho_v(1.7, 0.0, 3, 2.0) / sigma_density(1.7, 0.0)).epsilon(1e-14));
    }
}

TEST_CASE("kappa limits") {
    CHECK(kappa(1.0, 0.0).real() == doctest::Approx(1.0 - 2.0 / std::exp(1.0)).epsilon(1e-15));
    CHECK(kappa(1e-9, 0.0).real() == doctest::Approx(0.5).epsilon(1e-8));
    // both branches agree near the switch
    CHECK(rel(kappa(0.3, 0.39), kappa(0.3, 0.41)) < 0.05);
    CHECK(std::abs(kappa(0.4, 0.2999999) - kappa(0.4, 0.3000001)) < 1e-6);
    // large-T edge integral: the gap to kappa is pi^2 / (24 T^2) to leading order
    const double tau = 0.9;
    const double dphi = 1.3;
    const double T = 1000.0;
    const EdgeScaling e{2.0, 0.0, T, 0.45, 0.45, dphi, 0.0};
    const double pref = 4.0 / kPi / (4.0 + 0.25 - 2.0);
    const cplx gap = edge_kernel_universal(e, 1) / pref - kappa(tau, dphi);
    CHECK(std::abs(gap) < 1e-6);
    CHECK(std::abs(gap - kPi * kPi / (24.0 * T * T)) < 1e-8);
}

TEST_CASE("lambda properties") {
    for (double tau : {0.2, 1.0, 3.0}) {
        CHECK(lambda_corr(tau, 0.0) == 0.0);
        for (double phi : {0.1, 1.0, 5.0, 37.0}) {
            CHECK(lambda_corr(tau, phi) == lambda_corr(tau, -phi));
            CHECK(lambda_corr(tau, phi) >= 0.0);
        }
    }
    CHECK(std::abs(lambda_corr(1.0, 200.0) - 1.0) <= 1e-3);
}

TEST_CASE("edge integral with vanishing offsets") {
    // int_0^1 c / (1 - e^{-2cT}) dc = 1/2 + pi^2 / (24 T^2) up to e^{-2T}
    const double T = 80.0;
    const EdgeScaling e{2.0, 0.0, T, 1e-12, 1e-12, 0.0, 0.0};
    const double pref = 4.0 / kPi / (4.0 + 0.25 - 2.0);
    CHECK(edge_kernel_universal(e, 1).real() / pref ==
          doctest::Approx(0.5 + kPi * kPi / (24.0 * T * T)).epsilon(1e-10));
}

TEST_CASE("interval kernels in the thin limit reduce to sine kernels") {
    const double u = 1e-4;
    const double p1 = 0.8;
    const double p2 = -1.9;
    const IntervalScaling s{u, 0.0, 0.0, {1e-7, p1}, {1e-7, p2}};
    const double plus = (interval_edge_kernel(Parity::Plus, s, 1) * (2 * kPi * u)).real();
    const double minus = (interval_edge_kernel(Parity::Minus, s, 1) * (2 * kPi * u)).real();
    auto sinc = [](double x) { return std::sin(x) / x; };
    CHECK(plus == doctest::Approx((sinc(p1 - p2) + sinc(p1 + p2)) / std::abs(p1 * p2)).epsilon(1e-3));
    CHECK(minus == doctest::Approx((sinc(p1 - p2) - sinc(p1 + p2)) / (p1 * p2)).epsilon(1e-3));
    const IntervalScaling b{u, 0.0, kPi / 2, {1e-7, p1}, {1e-7, p2}};
    CHECK((interval_bulk_kernel(b, 1) * (2 * kPi * u)).real() == doctest::Approx(sinc(p1 - p2)).epsilon(1e-3));
}

TEST_CASE("interval domain checks") {
    const IntervalScaling bad{1.0, 1.0, 0.0, {0.5, 0.0}, {0.5, 0.0}};
    CHECK_THROWS_AS((void)interval_bulk_kernel(bad, 1), DomainError);
    CHECK_THROWS_AS((void)interval_edge_kernel(Parity::Plus, bad, 1), DomainError);
    CHECK_THROWS_AS((void)interval_edge_parity(ModelKind::I, 1.0), DomainError);
}

TEST_CASE("one-dimensional kernels") {
    CHECK(sine_kernel_line(0.4, 0.4, 3) == doctest::Approx(3.0 / kPi));
    CHECK(sine_kernel_line(0.4, 1.1, 3) == sine_kernel_line(1.1, 0.4, 3));
    CHECK(std::abs(sine_kernel_line(kPi + 0.2, 0.2, 1)) < 1e-16);
    const double phi = 0.9;
    CHECK(kernel_r(Parity::Plus, phi, phi, 2) ==
          doctest::Approx(4.0 / kPi / phi * (1.0 + std::sin(2 * phi) / (2 * phi))).epsilon(1e-14));
    CHECK(kernel_r(Parity::Plus, -0.7, 1.3, 1) == doctest::Approx(kernel_r(Parity::Plus, 0.7, 1.3, 1)).epsilon(1e-14));
    CHECK(kernel_r(Parity::Minus, -0.7, 1.3, 1) ==
          doctest::Approx(-kernel_r(Parity::Minus, 0.7, 1.3, 1)).epsilon(1e-14));
    CHECK_THROWS_AS((void)kernel_r(Parity::Plus, 0.0, 1.0, 1), DomainError);
}

TEST_CASE("frozen Bessel kernel values") {
    CHECK(bessel_kernel(0.0, 0.5, 2.0, 1) == doctest::Approx(0.28142848038882379).epsilon(1e-12));
    CHECK(bessel_kernel(1.3, 3.1, 7.4, 1) == doctest::Approx(-0.019499118815544161).epsilon(1e-11));
    CHECK(bessel_kernel(-0.7, 1.2, 15.5, 1) == doctest::Approx(0.00074654394911626763).epsilon(1e-10));
    CHECK(bessel_kernel(2.5, 18.0, 19.5, 1) == doctest::Approx(0.011232063671805674).epsilon(1e-11));
    CHECK(bessel_kernel(0.0, 1e-8, 1e-8, 3) == doctest::Approx(4.5).epsilon(1e-12));
}

TEST_CASE("Bessel kernel against the Christoffel-Darboux closed form") {
    // int_0^1 c J_a(cx) J_a(cy) dc = (x J_{a+1}(x) J_a(y) - y J_a(x) J_{a+1}(y)) / (x^2 - y^2)
    for (double a : {0.0, 0.7, 1.3, 3.0}) {
        for (auto [x, y] : {std::pair{0.4, 2.2}, std::pair{5.0, 13.0}, std::pair{19.0, 7.5}, std::pair{30.0, 31.0}}) {
            using std::cyl_bessel_j;
            const double cd =
                (x * cyl_bessel_j(a + 1, x) * cyl_bessel_j(a, y) - y * cyl_bessel_j(a, x) * cyl_bessel_j(a + 1, y)) /
                (x * x - y * y);
            CHECK(std::abs(bessel_kernel(a, x, y, 1) - cd) < 1e-13);
        }
    }
}

TEST_CASE("Bessel kernel at a = -1/2 and 1/2 equals the sinc kernels") {
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 8; ++k) {
            const double p1 = 0.1 + 19.9 * i / 7.0;
            const double p2 = 0.1 + 19.9 * k / 7.0;
            const double plus = kernel_r(Parity::Plus, p1, p2, 2);
            const double minus = kernel_r(Parity::Minus, p1, p2, 2);
            CHECK(std::abs(bessel_kernel(-0.5, p1, p2, 2) - plus) <= 1e-10 * std::abs(plus));
            CHECK(std::abs(bessel_kernel(0.5, p1, p2, 2) - minus) <= 1e-10 * std::abs(minus));
        }
    }
}

TEST_CASE("finite edge kernels approach the universal limit") {
    const EdgeScaling e{2.0, 0.7, 3.0, 1.0, 1.4, 0.3, -0.2};
    for (ModelKind m : kAllModels) {
        double prev = 1.0;
        for (int N : {50, 100, 200}) {
            const ScaledPair p = edge_scaled_points(e, N);
            const double err = rel(kernel_elliptic(m, N, p.w1, p.w2, p.spec), edge_kernel_universal(e, N));
            CHECK(err < prev);
            prev = err;
        }
        CHECK(prev < 0.02);
    }
}

TEST_CASE("interval routing") {
    CHECK(interval_edge_parity(ModelKind::I, 0.0) == Parity::Plus);
    CHECK(interval_edge_parity(ModelKind::I, kPi) == Parity::Plus);
    CHECK(interval_edge_parity(ModelKind::II, 0.0) == Parity::Minus);
    CHECK(interval_edge_parity(ModelKind::II, kPi) == Parity::Minus);
    CHECK(interval_edge_parity(ModelKind::III, 0.0) == Parity::Plus);
    CHECK(interval_edge_parity(ModelKind::III, kPi) == Parity::Minus);
    CHECK(interval_edge_parity(ModelKind::IV, 0.0) == Parity::Minus);
    CHECK(interval_edge_parity(ModelKind::IV, kPi) == Parity::Plus);
    for (double psi : {0.0, kPi / 2, kPi}) {
        const IntervalScaling s{1.0, 0.2, psi, {0.5, 0.4}, {0.7, -0.3}};
        for (ModelKind m : kAllModels) {
            double prev = 1.0;
            for (int N : {50, 100, 200}) {
                const ScaledPair p = interval_scaled_points(s, N);
                const double err = rel(kernel_elliptic(m, N, p.w1, p.w2, p.spec), interval_limit(m, s, N));
                CHECK(err < prev);
                prev = err;
            }
        }
    }
}

TEST_CASE("scaled points outside the annulus are rejected") {
    CHECK_THROWS_AS((void)edge_scaled_points(EdgeScaling{2.0, 0.7, 3.0, 1.0, 1.4, 0.3, -0.2}, 2), DomainError);
    CHECK_THROWS_AS((void)edge_scaled_points(EdgeScaling{2.0, 0.7, 3.0, 3.5, 1.4, 0.3, -0.2}, 100), DomainError);
    CHECK_THROWS_AS((void)interval_scaled_points(IntervalScaling{1.0, 0.2, 0.0, {1.5, 0.0}, {0.5, 0.0}}, 100),
                    DomainError);
}

TEST_CASE("radially symmetric edge limit") {
    const double big = 50.0;
    const EdgeScaling e{big, 0.3, 2.0, 0.5, 0.8, 0.1, 0.4};
    const cplx ratio = edge_kernel_radial_sym(big, 2.0, 0.5, 0.8, 0.1, 0.4, 5) / edge_kernel_universal(e, 5);
    CHECK(std::abs(ratio - 1.0) < 1e-3);
    CHECK(edge_kernel_radial_sym(2.0, 2.0, 0.5, 0.8, 0.4, 0.4, 5).real() > 0.0);
    CHECK(edge_kernel_radial_sym(2.0, 2.0, 0.5, 0.8, 0.4, 0.4, 5).imag() == 0.0);
    // T -> infinity
    const cplx far = edge_kernel_radial_sym(2.0, 1000.0, 0.5, 0.8, 1.1, 0.2, 1) / (4.0 / (kPi * 4.0));
    CHECK(rel(far, kappa(1.3, 0.9)) < 1e-5);
}

TEST_CASE("radially symmetric finite kernels converge for every gamma") {
    std::vector<cplx> at_largest;
    for (double gamma : {-0.5, 0.0, 1.5}) {
        double prev = 1.0;
        for (int N : {100, 200, 400}) {
            const cplx finite = radial_sym_edge_finite(gamma, 2.0, 3.0, 1.0, 1.4, 0.3, -0.2, N);
            const cplx limit = edge_kernel_radial_sym(2.0, 3.0, 1.0, 1.4, 0.3, -0.2, N);
            const double err = rel(finite, limit);
            CHECK(err < prev);
            prev = err;
            if (N == 400) at_largest.push_back(finite / limit);
        }
        CHECK(prev < 0.01);
    }
    CHECK(std::abs(at_largest[0] - at_largest[2]) < 0.01);
}
