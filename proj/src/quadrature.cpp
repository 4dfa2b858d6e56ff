#include "ellgas/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ellgas/errors.hpp"

namespace ellgas {

GaussRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: need at least one node");
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

double integrate_interval(const std::function<double(double)>& f, double lo, double hi, int n, int panels) {
    const GaussRule rule = gauss_legendre(n);
    const double width = (hi - lo) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * width;
        const double half = 0.5 * width;
        const double mid = a + half;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.weights[i] * half * f(mid + half * rule.nodes[i]);
        }
    }
    return sum;
}

void QuadratureSpec::validate() const {
    if (radial_nodes < 4) throw DomainError("QuadratureSpec: radial_nodes must be >= 4");
    if (angular_nodes < 8) throw DomainError("QuadratureSpec: angular_nodes must be >= 8");
    if (radial_panels < 1) throw DomainError("QuadratureSpec: radial_panels must be >= 1");
    if (!(target_tol > 0.0)) throw DomainError("QuadratureSpec: target_tol must be positive");
    if (max_refinements < 1) throw DomainError("QuadratureSpec: max_refinements must be >= 1");
}

std::vector<AnnulusNode> annulus_nodes(const AnnulusSpec& spec, int radial_nodes, int radial_panels,
                                       int angular_nodes) {
    const GaussRule rule = gauss_legendre(radial_nodes);
    const double width = (spec.outer() - spec.inner()) / radial_panels;
    const double dtheta = kTwoPi / angular_nodes;
    std::vector<AnnulusNode> nodes;
    nodes.reserve(static_cast<std::size_t>(radial_nodes) * radial_panels * angular_nodes);
    for (int p = 0; p < radial_panels; ++p) {
        const double half = 0.5 * width;
        const double mid = spec.inner() + p * width + half;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double r = mid + half * rule.nodes[i];
            const double wr = rule.weights[i] * half;
            for (int k = 0; k < angular_nodes; ++k) {
                const OmegaCoord w(r, k * dtheta);
                nodes.push_back({w, joukowski_forward(w), wr * dtheta * jacobian(w)});
            }
        }
    }
    return nodes;
}

namespace {

struct Accumulated {
    cplx value;
    double magnitude;
};

template <class Eval>
cplx refine_until_converged(Eval&& eval_level, const QuadratureSpec& q, const char* what) {
    q.validate();
    Accumulated prev = eval_level(0);
    double last_diff = 0.0;
    for (int level = 1; level <= q.max_refinements; ++level) {
        const Accumulated cur = eval_level(level);
        last_diff = std::abs(cur.value - prev.value);
        const double scale = std::max(std::abs(cur.value), cur.magnitude);
        if (last_diff <= q.target_tol * scale) return cur.value;
        prev = cur;
    }
    throw ToleranceNotMet(std::string(what) + ": refinements still differ by " + std::to_string(last_diff));
}

}  // namespace

cplx integrate_annulus_nodes(const std::function<cplx(const AnnulusNode&)>& f, const AnnulusSpec& spec,
                             const QuadratureSpec& q) {
    auto level = [&](int k) {
        const int scale = 1 << k;
        Accumulated acc{0.0, 0.0};
        for (const auto& node : annulus_nodes(spec, q.radial_nodes, q.radial_panels * scale, q.angular_nodes * scale)) {
            const cplx v = f(node);
            acc.value += v * node.weight;
            acc.magnitude += std::abs(v) * node.weight;
        }
        return acc;
    };
    return refine_until_converged(level, q, "integrate_annulus");
}

cplx integrate_annulus(const std::function<cplx(ComplexPoint)>& f, const AnnulusSpec& spec, const QuadratureSpec& q) {
    return integrate_annulus_nodes([&](const AnnulusNode& node) { return f(node.z); }, spec, q);
}

cplx integrate_disc_annulus(const std::function<cplx(ComplexPoint)>& f, const RadialSymSpec& spec,
                            const QuadratureSpec& q) {
    auto level = [&](int k) {
        const int scale = 1 << k;
        const int panels = q.radial_panels * scale;
        const int angular = q.angular_nodes * scale;
        const GaussRule rule = gauss_legendre(q.radial_nodes);
        const double width = (spec.outer_radius() - spec.inner_radius()) / panels;
        const double dtheta = kTwoPi / angular;
        Accumulated acc{0.0, 0.0};
        for (int p = 0; p < panels; ++p) {
            const double half = 0.5 * width;
            const double mid = spec.inner_radius() + p * width + half;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double rho = mid + half * rule.nodes[i];
                const double wt = rule.weights[i] * half * dtheta * rho;
                for (int j = 0; j < angular; ++j) {
                    const cplx v = f(ComplexPoint::from(std::polar(rho, j * dtheta)));
                    acc.value += v * wt;
                    acc.magnitude += std::abs(v) * wt;
                }
            }
        }
        return acc;
    };
    return refine_until_converged(level, q, "integrate_disc_annulus");
}

OrthoReport orthogonality_matrix(ModelKind model, int nmax, const AnnulusSpec& spec, const QuadratureSpec& q) {
    if (nmax < 0) throw DomainError("orthogonality_matrix: nmax must be >= 0");
    q.validate();
    const auto dim = static_cast<std::size_t>(nmax + 1);
    const ChebyshevKind kind = chebyshev_kind(model);
    const int angular = std::max(q.angular_nodes, 4 * nmax + 8);

    auto gram_at = [&](int k) {
        const int scale = 1 << k;
        std::vector<cplx> g(dim * dim, 0.0);
        std::vector<cplx> m(dim);
        for (const auto& node : annulus_nodes(spec, q.radial_nodes, q.radial_panels * scale, angular * scale)) {
            const double wt = node.weight * annulus_weight(model, node.w);
            for (std::size_t n = 0; n < dim; ++n) m[n] = monic_eval(kind, static_cast<int>(n), node.w);
            for (std::size_t a = 0; a < dim; ++a) {
                for (std::size_t b = 0; b < dim; ++b) g[a * dim + b] += wt * std::conj(m[a]) * m[b];
            }
        }
        return g;
    };

    std::vector<double> reference(dim);
    for (std::size_t n = 0; n < dim; ++n) reference[n] = norm_constant(model, static_cast<int>(n), spec);
    const double href = *std::max_element(reference.begin(), reference.end());

    std::vector<cplx> prev = gram_at(0);
    std::vector<cplx> cur;
    bool converged = false;
    double diff = 0.0;
    for (int level = 1; level <= q.max_refinements; ++level) {
        cur = gram_at(level);
        diff = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i) diff = std::max(diff, std::abs(cur[i] - prev[i]));
        if (diff <= q.target_tol * href) {
            converged = true;
            break;
        }
        prev = cur;
    }
    if (!converged) {
        throw ToleranceNotMet("orthogonality_matrix: refinements still differ by " + std::to_string(diff));
    }

    OrthoReport report;
    report.model = model;
    report.nmax = nmax;
    report.reference = reference;
    report.max_reference = href;
    report.gram.assign(dim, std::vector<double>(dim, 0.0));
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            const double value = cur[a * dim + b].real();
            report.gram[a][b] = value;
            if (a != b) report.max_offdiag = std::max(report.max_offdiag, std::abs(value));
        }
        report.max_diag_relerr =
            std::max(report.max_diag_relerr, std::abs(report.gram[a][a] - reference[a]) / reference[a]);
    }
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            report.max_asymmetry = std::max(report.max_asymmetry, std::abs(report.gram[a][b] - report.gram[b][a]));
        }
    }
    return report;
}

double kernel_trace(ModelKind model, int N, const AnnulusSpec& spec, const QuadratureSpec& q) {
    if (N < 1) throw DomainError("kernel_trace: N must be at least 1");
    QuadratureSpec rule = q;
    rule.angular_nodes = std::max(q.angular_nodes, 2 * N + 8);
    const cplx value = integrate_annulus_nodes(
        [&](const AnnulusNode& node) { return kernel_elliptic(model, N, node.w, node.w, spec); }, spec, rule);
    return value.real();
}

QuadratureSpec default_quadrature(int nmax) {
    QuadratureSpec q;
    q.angular_nodes = std::max(64, 4 * nmax + 8);
    return q;
}

}  // namespace ellgas
