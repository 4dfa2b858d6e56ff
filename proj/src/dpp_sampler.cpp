#include "ellgas/dpp_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ellgas/errors.hpp"
#include "ellgas/quadrature.hpp"

namespace ellgas {

namespace {

constexpr double kResidualFloor = 1e-12;
constexpr int kMaxRebuilds = 20;

int cell_index(double value, double lo, double hi, int bins) {
    const int i = static_cast<int>(std::floor((value - lo) / (hi - lo) * bins));
    return std::clamp(i, 0, bins - 1);
}

}  // namespace

void SampleConfig::validate() const {
    if (N < 1 || N > 64) throw DomainError("SampleConfig: N must be in [1, 64]");
    if (envelope_grid < 2) throw DomainError("SampleConfig: envelope_grid must be >= 2");
    if (!(envelope_safety >= 1.2)) throw DomainError("SampleConfig: envelope_safety must be >= 1.2");
    if (max_rejects < 1) throw DomainError("SampleConfig: max_rejects must be >= 1");
}

DppSampler::DppSampler(const SampleConfig& cfg) : cfg_(cfg), rng_(cfg.seed), safety_(cfg.envelope_safety) {
    cfg_.validate();
    std::vector<cplx> phi(static_cast<std::size_t>(cfg_.N));
    const int nr = cfg_.envelope_grid;
    const int nt = 2 * cfg_.envelope_grid;
    const double R = cfg_.spec.inner();
    const double v = cfg_.spec.outer();
    for (int i = 0; i < nr; ++i) {
        const double r = R + (v - R) * i / (nr - 1);
        for (int j = 0; j < nt; ++j) {
            grid_max_ = std::max(grid_max_, full_density(OmegaCoord(r, kTwoPi * j / nt), phi));
        }
    }
    envelope_ = safety_ * grid_max_;
}

double DppSampler::uniform() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }

double DppSampler::full_density(const OmegaCoord& w, std::vector<cplx>& phi) const {
    orthonormal_functions(cfg_.model, w, cfg_.spec, phi);
    double sum = 0.0;
    for (const cplx& p : phi) sum += std::norm(p);
    return sum * jacobian(w);
}

void DppSampler::rebuild_envelope() {
    if (++rebuilds_ > kMaxRebuilds) throw EnvelopeExceeded("DppSampler: envelope keeps being exceeded");
    safety_ *= 2.0;
    envelope_ = safety_ * grid_max_;
}

std::vector<ComplexPoint> DppSampler::sample() {
    const auto n = static_cast<std::size_t>(cfg_.N);
    const double R = cfg_.spec.inner();
    const double width = cfg_.spec.outer() - R;
    std::vector<std::vector<cplx>> basis;
    std::vector<cplx> phi(n);
    std::vector<cplx> residual(n);
    std::vector<ComplexPoint> points;
    points.reserve(n);

    while (points.size() < n) {
        long rejects = 0;
        bool accepted = false;
        while (!accepted) {
            const OmegaCoord w(R + width * uniform(), kTwoPi * uniform());
            const double u = uniform();
            const double full = full_density(w, phi);
            if (full > envelope_) {
                // the envelope missed a peak; widen it and redraw the whole configuration
                rebuild_envelope();
                basis.clear();
                points.clear();
                break;
            }
            // project out the directions of the points already chosen
            residual = phi;
            for (const auto& e : basis) {
                cplx dot = 0.0;
                for (std::size_t k = 0; k < n; ++k) dot += std::conj(e[k]) * phi[k];
                for (std::size_t k = 0; k < n; ++k) residual[k] -= dot * e[k];
            }
            double norm2 = 0.0;
            for (const cplx& c : residual) norm2 += std::norm(c);
            const double q = norm2 * jacobian(w);
            if (u * envelope_ < q && std::sqrt(norm2) >= kResidualFloor) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (cplx& c : residual) c *= inv;
                basis.push_back(residual);
                points.push_back(joukowski_forward(w));
                accepted = true;
            } else if (++rejects >= cfg_.max_rejects) {
                throw RejectBudgetExhausted("DppSampler: " + std::to_string(rejects) + " consecutive rejections");
            }
        }
    }
    return points;
}

std::vector<ComplexPoint> sample(const SampleConfig& cfg) { return DppSampler(cfg).sample(); }

std::vector<std::vector<ComplexPoint>> sample_many(const SampleConfig& cfg, int count) {
    if (count < 0) throw DomainError("sample_many: count must be >= 0");
    DppSampler sampler(cfg);
    std::vector<std::vector<ComplexPoint>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(sampler.sample());
    return out;
}

long Histogram::total() const {
    long sum = 0;
    for (long c : counts) sum += c;
    return sum;
}

double cell_area(double r0, double r1, double t0, double t1) {
    const double radial = (r1 * r1 - r0 * r0) / 8.0 - (1.0 / (r1 * r1) - 1.0 / (r0 * r0)) / 8.0;
    const double cross = 0.5 * std::log(r1 / r0) * 0.5 * (std::sin(2.0 * t1) - std::sin(2.0 * t0));
    return (t1 - t0) * radial - cross;
}

Histogram empirical_density(const std::vector<std::vector<ComplexPoint>>& samples, int r_bins, int theta_bins,
                            const AnnulusSpec& spec) {
    if (r_bins < 1 || theta_bins < 1) throw DomainError("empirical_density: bins must be positive");
    Histogram h;
    h.r_bins = r_bins;
    h.theta_bins = theta_bins;
    h.n_samples = static_cast<long>(samples.size());
    const auto cells = static_cast<std::size_t>(r_bins) * static_cast<std::size_t>(theta_bins);
    h.counts.assign(cells, 0);
    h.area.resize(cells);
    h.density.assign(cells, 0.0);
    const double R = spec.inner();
    const double v = spec.outer();
    for (int i = 0; i < r_bins; ++i) {
        for (int j = 0; j < theta_bins; ++j) {
            h.area[static_cast<std::size_t>(i * theta_bins + j)] =
                cell_area(R + (v - R) * i / r_bins, R + (v - R) * (i + 1) / r_bins, kTwoPi * j / theta_bins,
                          kTwoPi * (j + 1) / theta_bins);
        }
    }
    for (const auto& config : samples) {
        for (const auto& z : config) {
            if (!contains(spec, z)) throw DomainError("empirical_density: point outside the annulus");
            const OmegaCoord w = joukowski_inverse(z);
            const int i = cell_index(w.r(), R, v, r_bins);
            const int j = cell_index(w.theta(), 0.0, kTwoPi, theta_bins);
            ++h.counts[static_cast<std::size_t>(i * theta_bins + j)];
        }
    }
    if (h.n_samples > 0) {
        for (std::size_t c = 0; c < cells; ++c) {
            h.density[c] = static_cast<double>(h.counts[c]) / (static_cast<double>(h.n_samples) * h.area[c]);
        }
    }
    return h;
}

std::vector<double> expected_cell_mass(ModelKind model, int N, const AnnulusSpec& spec, int r_bins,
                                       int theta_bins) {
    if (r_bins < 1 || theta_bins < 1) throw DomainError("expected_cell_mass: bins must be positive");
    const GaussRule rule = gauss_legendre(16);
    const double R = spec.inner();
    const double v = spec.outer();
    const double hr = 0.5 * (v - R) / r_bins;
    const double ht = 0.5 * kTwoPi / theta_bins;
    std::vector<double> mass(static_cast<std::size_t>(r_bins) * static_cast<std::size_t>(theta_bins), 0.0);
    for (int i = 0; i < r_bins; ++i) {
        for (int j = 0; j < theta_bins; ++j) {
            const double rm = R + (2 * i + 1) * hr;
            const double tm = (2 * j + 1) * ht;
            double sum = 0.0;
            for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
                for (std::size_t b = 0; b < rule.nodes.size(); ++b) {
                    const OmegaCoord w(rm + hr * rule.nodes[a], tm + ht * rule.nodes[b]);
                    sum += rule.weights[a] * rule.weights[b] * kernel_elliptic(model, N, w, w, spec).real() *
                           jacobian(w);
                }
            }
            mass[static_cast<std::size_t>(i * theta_bins + j)] = sum * hr * ht;
        }
    }
    return mass;
}

}  // namespace ellgas
