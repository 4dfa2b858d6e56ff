#include <doctest.h>

#include <cmath>
#include <vector>

#include "ellgas/chebyshev.hpp"
#include "ellgas/errors.hpp"
#include "ellgas/jacobi.hpp"

using namespace ellgas;

namespace {

// coefficients (lowest degree first) of the kind-specific recursion p_{n+1} = 2 z p_n - p_{n-1}
std::vector<std::vector<double>> recursion_coefficients(ChebyshevKind kind, int nmax) {
    std::vector<std::vector<double>> p(static_cast<std::size_t>(nmax + 1));
    p[0] = {1.0};
    switch (kind) {
        case ChebyshevKind::First: p[1] = {0.0, 1.0}; break;
        case ChebyshevKind::Second: p[1] = {0.0, 2.0}; break;
        case ChebyshevKind::Third: p[1] = {-1.0, 2.0}; break;
        case ChebyshevKind::Fourth: p[1] = {1.0, 2.0}; break;
    }
    for (int n = 1; n < nmax; ++n) {
        const auto& a = p[static_cast<std::size_t>(n)];
        const auto& b = p[static_cast<std::size_t>(n - 1)];
        std::vector<double> next(a.size() + 1, 0.0);
        for (std::size_t k = 0; k < a.size(); ++k) next[k + 1] += 2.0 * a[k];
        for (std::size_t k = 0; k < b.size(); ++k) next[k] -= b[k];
        p[static_cast<std::size_t>(n + 1)] = next;
    }
    return p;
}

cplx horner(const std::vector<double>& c, cplx z) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

constexpr ChebyshevKind kKinds[] = {ChebyshevKind::First, ChebyshevKind::Second, ChebyshevKind::Third,
                                    ChebyshevKind::Fourth};

}  // namespace

TEST_CASE("monic values agree with the coefficient recursion") {
    const int nmax = 12;
    for (ChebyshevKind kind : kKinds) {
        const auto coeffs = recursion_coefficients(kind, nmax);
        for (int n = 0; n <= nmax; ++n) {
            const auto& c = coeffs[static_cast<std::size_t>(n)];
            CHECK(c.back() == doctest::Approx(kind == ChebyshevKind::First && n > 0 ? std::ldexp(1.0, n - 1)
                                                                                      : std::ldexp(1.0, n)));
            for (double r : {1.2, 1.9, 2.5}) {
                for (double t : {0.1, 1.3, 2.8, 4.0}) {
                    const OmegaCoord w(r, t);
                    const cplx expected = horner(c, joukowski_forward(w).value()) / c.back();
                    const cplx got = monic_eval(kind, n, w);
                    CHECK(std::abs(got - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
                }
            }
        }
    }
}

TEST_CASE("three-term recursion holds for every kind") {
    for (ChebyshevKind kind : kKinds) {
        for (int n = 1; n < 20; ++n) {
            const OmegaCoord w(1.7, 0.9);
            const cplx z = joukowski_forward(w).value();
            const cplx lhs = chebyshev_eval(kind, n + 1, w);
            const cplx rhs = 2.0 * z * chebyshev_eval(kind, n, w) - chebyshev_eval(kind, n - 1, w);
            CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(lhs));
        }
    }
}

TEST_CASE("monic T_3 at z = 1.25") {
    // omega = 2 maps to z = 1.25 on the real axis
    CHECK(monic_eval(ChebyshevKind::First, 3, OmegaCoord(2.0, 0.0)).real() == doctest::Approx(1.015625).epsilon(1e-14));
}

TEST_CASE("low-degree closed forms") {
    const OmegaCoord w(1.6, 0.7);
    const cplx z = joukowski_forward(w).value();
    CHECK(std::abs(chebyshev_eval(ChebyshevKind::First, 2, w) - (2.0 * z * z - 1.0)) < 1e-13);
    CHECK(std::abs(chebyshev_eval(ChebyshevKind::Second, 2, w) - (4.0 * z * z - 1.0)) < 1e-13);
    CHECK(std::abs(chebyshev_eval(ChebyshevKind::Third, 1, w) - (2.0 * z - 1.0)) < 1e-13);
    CHECK(std::abs(chebyshev_eval(ChebyshevKind::Fourth, 1, w) - (2.0 * z + 1.0)) < 1e-13);
}

TEST_CASE("Chebyshev polynomials are Jacobi polynomials with half-integer parameters") {
    struct Pair {
        ChebyshevKind kind;
        double a;
        double b;
    };
    const Pair pairs[] = {{ChebyshevKind::First, -0.5, -0.5},
                          {ChebyshevKind::Second, 0.5, 0.5},
                          {ChebyshevKind::Third, -0.5, 0.5},
                          {ChebyshevKind::Fourth, 0.5, -0.5}};
    for (const auto& p : pairs) {
        const JacobiSpec spec(p.a, p.b);
        for (int n = 0; n <= 10; ++n) {
            for (double r : {1.3, 2.0}) {
                const OmegaCoord w(r, 0.0);
                const double x = joukowski_forward(w).x;
                const double cheb = monic_eval(p.kind, n, w).real();
                CHECK(jacobi_monic(spec, n, x) == doctest::Approx(cheb).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("negative degree is rejected") {
    CHECK_THROWS_AS((void)chebyshev_eval(ChebyshevKind::First, -1, OmegaCoord(2.0, 0.0)), DomainError);
    CHECK_THROWS_AS((void)monic_eval(ChebyshevKind::Third, -2, OmegaCoord(2.0, 0.0)), DomainError);
}
