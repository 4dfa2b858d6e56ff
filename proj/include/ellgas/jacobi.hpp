#pragma once

namespace ellgas {

/// Jacobi weight (1 - x)^a (1 + x)^b on [-1, 1], a, b > -1.
class JacobiSpec {
public:
    JacobiSpec(double a, double b);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }

private:
    double a_;
    double b_;
};

/// P_n^{(a,b)}(x) by the three-term recurrence.
[[nodiscard]] double jacobi_polynomial(const JacobiSpec& spec, int n, double x);

/// Monic Jacobi polynomial 2^n n! Gamma(a+b+n+1)/Gamma(a+b+2n+1) P_n^{(a,b)}(x).
[[nodiscard]] double jacobi_monic(const JacobiSpec& spec, int n, double x);

/// Natural log of h_n, the squared weighted norm of the monic polynomial.
[[nodiscard]] double jacobi_log_norm_constant(const JacobiSpec& spec, int n);

/// sqrt(w(x1) w(x2)) sum_{n<N} M_n(x1) M_n(x2) / h_n. Throws DomainError for |x| >= 1.
[[nodiscard]] double kernel_jacobi(const JacobiSpec& spec, int N, double x1, double x2);

}  // namespace ellgas
