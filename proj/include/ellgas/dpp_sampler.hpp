#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ellgas/geometry.hpp"
#include "ellgas/weights_kernels.hpp"

namespace ellgas {

struct SampleConfig {
    ModelKind model = ModelKind::I;
    int N = 1;
    AnnulusSpec spec{1.5, 2.5};
    std::uint64_t seed = 0;
    int envelope_grid = 128;  // probe grid is envelope_grid x (2 envelope_grid) in (r, theta)
    double envelope_safety = 1.5;
    long max_rejects = 1000000;

    /// Throws DomainError unless 1 <= N <= 64, envelope_grid >= 2,
    /// envelope_safety >= 1.2 and max_rejects >= 1.
    void validate() const;
};

/// Sequential sampler for the N-point projection process with kernel K_N.
/// Each point is drawn by rejection from the uniform law on [R, v] x [0, 2 pi)
/// with the Jacobian folded into the acceptance ratio. The envelope is built
/// once from the unconditional diagonal K_N(z, z) * J, which bounds every
/// conditional density of the sequence.
class DppSampler {
public:
    explicit DppSampler(const SampleConfig& cfg);

    /// One configuration of N points, consuming the internal generator.
    [[nodiscard]] std::vector<ComplexPoint> sample();

    [[nodiscard]] const SampleConfig& config() const noexcept { return cfg_; }
    [[nodiscard]] double envelope() const noexcept { return envelope_; }
    [[nodiscard]] int envelope_rebuilds() const noexcept { return rebuilds_; }

private:
    double uniform();
    double full_density(const OmegaCoord& w, std::vector<cplx>& phi) const;
    void rebuild_envelope();

    SampleConfig cfg_;
    std::mt19937_64 rng_;
    double grid_max_ = 0.0;
    double safety_ = 1.5;
    double envelope_ = 0.0;
    int rebuilds_ = 0;
};

[[nodiscard]] std::vector<ComplexPoint> sample(const SampleConfig& cfg);

/// `count` independent configurations from one generator seeded with cfg.seed.
[[nodiscard]] std::vector<std::vector<ComplexPoint>> sample_many(const SampleConfig& cfg, int count);

/// (r, theta) histogram on [R, v] x [0, 2 pi). Cell (i, j) is stored at i * theta_bins + j.
struct Histogram {
    int r_bins = 0;
    int theta_bins = 0;
    long n_samples = 0;
    std::vector<long> counts;
    std::vector<double> area;     // dx dy area of each cell
    std::vector<double> density;  // counts / (n_samples * area), comparable to K_N(z, z)

    [[nodiscard]] long total() const;
};

/// Throws DomainError if a point is outside the annulus.
[[nodiscard]] Histogram empirical_density(const std::vector<std::vector<ComplexPoint>>& samples, int r_bins,
                                          int theta_bins, const AnnulusSpec& spec);

/// dx dy area of the cell [r0, r1] x [t0, t1] in omega coordinates.
[[nodiscard]] double cell_area(double r0, double r1, double t0, double t1);

/// Integral of K_N(z, z) over each histogram cell, same layout as Histogram::counts.
[[nodiscard]] std::vector<double> expected_cell_mass(ModelKind model, int N, const AnnulusSpec& spec, int r_bins,
                                                     int theta_bins);

}  // namespace ellgas
