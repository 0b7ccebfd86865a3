#pragma once

#include <functional>
#include <string>
#include <vector>

#include "apt/grid.hpp"
#include "apt/schedule.hpp"

namespace apt {

enum class DenoiserKind { GaussianPrior, GmmPrior, External };

// Epsilon-prediction contract plus the parameters of the analytic instances.
// The analytic denoisers assume the clean latent is drawn i.i.d. per entry
// from the described prior and return the exact posterior-mean noise
// estimate; they ignore the conditioning label, which is only threaded
// through so an external denoiser can use it.
struct DenoiserSpec {
    DenoiserKind kind = DenoiserKind::GaussianPrior;
    std::vector<double> means{0.0};
    std::vector<double> stds{1.0};
    std::vector<double> weights{1.0};
    std::string label;

    void validate() const;  // throws std::invalid_argument
};

using DenoiserFn = std::function<LatentGrid(const LatentGrid& z_t, int t, const NoiseSchedule& schedule,
                                            const std::string& label)>;

// Closed-form forward marginal z_t = sqrt(ab_t) z0 + sqrt(1 - ab_t) noise.
LatentGrid forward_to(const LatentGrid& z0, const NoiseSchedule& schedule, int t, const LatentGrid& noise);

// t_target sequential applications of q(z_t | z_{t-1}) with keyed noise; the
// key's timestep field is overwritten with the step index.
LatentGrid forward_chain(const LatentGrid& z0, const NoiseSchedule& schedule, int t_target, const SeedKey& key);

// Deterministic DDIM update from t to t_prev < t:
//   z0_hat = (z_t - sqrt(1 - ab_t) eps) / sqrt(ab_t)
//   z_prev = sqrt(ab_prev) z0_hat + sqrt(1 - ab_prev) eps
// t_prev = 0 returns z0_hat exactly.
LatentGrid ddim_step(const LatentGrid& z_t, const LatentGrid& eps_hat, const NoiseSchedule& schedule,
                     int t, int t_prev);

// Posterior-mean noise estimate for a N(mean, std^2) prior:
//   E[z0|z_t] = (sqrt(ab) std^2 z_t + (1 - ab) mean) / (ab std^2 + 1 - ab)
//   eps_hat   = (z_t - sqrt(ab) E[z0|z_t]) / sqrt(1 - ab)
// At ab == 1 the noise is unidentifiable and eps_hat is defined as 0.
LatentGrid gaussian_eps(const LatentGrid& z_t, int t, const NoiseSchedule& schedule,
                        double prior_mean, double prior_std);

// Mixture prior: per-entry responsibilities w_i proportional to
// pi_i N(z_t; sqrt(ab) mu_i, ab sigma_i^2 + 1 - ab) blend the per-component
// posterior means. Reduces bit-for-bit to gaussian_eps for one component.
LatentGrid gmm_eps(const LatentGrid& z_t, int t, const NoiseSchedule& schedule, const DenoiserSpec& prior);

// Binds a DenoiserSpec to a callable. External kind requires `external`.
DenoiserFn make_denoiser(const DenoiserSpec& spec, DenoiserFn external = nullptr);

}  // namespace apt
