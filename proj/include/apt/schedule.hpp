#pragma once

#include <vector>

namespace apt {

// Variance schedule tables for the power-mean beta family
//
//   beta_t = (beta0^eta + t * (betaT^eta - beta0^eta) / T)^(1/eta),  t = 0..T
//
// eta = 1 is the plain linear ramp used by the pretrained path; eta > 1
// front-loads noise growth. alpha_bars[t] is the cumulative product of
// (1 - beta_s) for s = 1..t, so alpha_bars[0] == 1 and betas[0] never enters
// the products.
struct NoiseSchedule {
    int T = 0;
    double beta0 = 0.0;
    double betaT = 0.0;
    double eta = 1.0;
    std::vector<double> betas;
    std::vector<double> alphas;
    std::vector<double> alpha_bars;

    // Derives alphas/alpha_bars from explicit betas (index 0..T). Only checks
    // betas lie in [0, 1); intended for tests and degenerate schedules.
    static NoiseSchedule from_betas(std::vector<double> betas, double eta = 1.0);
};

NoiseSchedule build_schedule(double beta0, double betaT, int T, double eta);

double alpha_bar(const NoiseSchedule& schedule, int t);

// ln(alpha_bar_t / (1 - alpha_bar_t)); t = 0 has infinite SNR and is rejected.
double log_snr(const NoiseSchedule& schedule, int t);

// Resolution-shifted alpha_bar: the alpha_bar' whose SNR equals
// shift_factor * SNR(t). shift_factor (s/S)^2 reproduces the lower-resolution
// reference schedule of Simple-Diffusion-style comparisons.
double shifted_alpha_bar(const NoiseSchedule& schedule, int t, double shift_factor);

// The inference-time subsampling of the training schedule: n_steps timesteps
// uniformly spaced in {1..T}, strictly decreasing, timesteps[0] == T.
// shortcut_t0 counts window positions from the low-noise end; denoising under
// the shortcut visits only timesteps[n_steps - shortcut_t0 ..].
struct SubstepMap {
    int n_steps = 0;
    std::vector<int> timesteps;
    int shortcut_t0 = 0;

    int window_start_index() const { return n_steps - shortcut_t0; }
};

SubstepMap build_substeps(int T, int n_steps, int shortcut_t0);

// Default growth exponent for an incremental per-side upscale ratio, by
// nearest tabulated ratio: 2.0 -> 2, 1.5 -> 3, 1.333 -> 3.5.
double default_eta_for_ratio(double side_ratio);

}  // namespace apt
