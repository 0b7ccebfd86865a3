#pragma once

#include <string>
#include <vector>

#include "apt/grid.hpp"
#include "apt/resample.hpp"
#include "apt/schedule.hpp"

namespace apt {

// Pairwise pixel similarity s_ij = 1 - ||x_i - x_j||_2 / sqrt(C) over an
// n x n nearest-subsampled view of the patch, with channel values first
// normalized to [0, 1]. Symmetric, unit diagonal, entries in [0, 1].
struct SelfSimReport {
    int sample_n = 0;
    std::vector<double> matrix;  // (n*n) x (n*n), row-major
    double mean_similarity = 0.0;

    double at(int i, int j) const { return matrix[static_cast<size_t>(i) * sample_n * sample_n + j]; }
};

SelfSimReport self_similarity(const LatentGrid& patch, int sample_n);

struct PatchShift {
    double mean_delta = 0.0;
    double std_delta = 0.0;
};

// Per dilated patch, stats delta against the reference, plus aggregate
// histograms of the deltas (symmetric range, deterministic given the data).
struct ShiftReport {
    std::vector<PatchShift> patches;
    double median_mean_delta = 0.0;
    double median_std_delta = 0.0;
    int bins = 21;
    double mean_hist_halfwidth = 0.0;
    double std_hist_halfwidth = 0.0;
    std::vector<int> mean_hist;
    std::vector<int> std_hist;
};

ShiftReport dilated_shift_report(const LatentGrid& reference, const LatentGrid& upsampled,
                                 const DilatedLayout& layout);

// Monte Carlo check of the scaled-latent forward law: with z0' = z0 / k the
// chain's signal mean scales by 1/k while the noise std stays sqrt(1 - ab_t).
struct VarianceScalingReport {
    double k = 1.0;
    int t = 0;
    int trials = 0;
    double simulated_mean = 0.0;
    double expected_mean = 0.0;
    double mean_se = 0.0;
    double simulated_noise_std = 0.0;
    double expected_noise_std = 0.0;
    double noise_std_se = 0.0;
    bool mean_ok = false;
    bool noise_std_ok = false;

    bool pass() const { return mean_ok && noise_std_ok; }
};

VarianceScalingReport variance_scaling_check(const LatentGrid& z0, double k, const NoiseSchedule& schedule,
                                             int t, int trials, const SeedKey& key);

// One table row per (config, t). snr_shift != 1 applies the resolution shift
// to alpha_bar and log SNR while keeping the base beta column.
struct CurveConfig {
    double beta0 = 0.00085;
    double betaT = 0.012;
    int T = 1000;
    double eta = 1.0;
    double snr_shift = 1.0;
};

struct CurveRow {
    double eta = 1.0;
    double snr_shift = 1.0;
    int t = 0;
    double beta = 0.0;
    double alpha_bar = 1.0;
    double log_snr = 0.0;
};

std::vector<CurveRow> schedule_curves(const std::vector<CurveConfig>& configs);
std::string curves_to_csv(const std::vector<CurveRow>& rows);

}  // namespace apt
