#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apt/diffuse.hpp"
#include "apt/grid.hpp"
#include "apt/resample.hpp"
#include "apt/schedule.hpp"

namespace apt {

// Full parameterization of a run: phase-1 reference generation at the base
// resolution, then progressive per-side upscaling stages s = 2..side_scale,
// each dual-path denoised under the shortcut window.
struct PipelineConfig {
    int base_h = 64;
    int base_w = 64;
    int channels = 4;
    int side_scale = 2;   // final dims are (base_h * side_scale, base_w * side_scale)
    int n_steps = 50;     // inference substeps per stage
    int shortcut_t0 = 30; // window positions actually denoised (<= n_steps)
    double overlap_ratio = 0.5;
    double beta0 = 0.00085;
    double betaT = 0.012;
    int train_steps = 1000;
    double lambda1_exponent = 1.0;
    double lambda2_exponent = 1.0;
    double lambda1_scale = 1.0;  // 0 disables the skip residual (ablation)
    double lambda2_scale = 1.0;  // 0 disables the dilated path contribution
    UpsampleMethod upsample_method = UpsampleMethod::Bicubic;
    FusionWeighting local_fusion = FusionWeighting::Uniform;
    bool sm_per_channel = false;
    std::map<int, double> eta_overrides;  // stage -> eta
    DenoiserSpec denoiser;
    uint64_t seed = 42;
    int threads = 1;
    std::string output_dir = "apt_out";

    void validate() const;
    // Override if present, else the default for the stage's incremental
    // per-side ratio s / (s - 1).
    double eta_for_stage(int stage) const;
};

struct StepRecord {
    int window_pos = 0;  // counts down shortcut_t0 .. 1
    int timestep = 0;    // training timestep of this substep
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double mean = 0.0;
    double std = 0.0;
};

struct StageRecord {
    int stage = 0;
    int height = 0;
    int width = 0;
    double eta = 1.0;
    long denoiser_calls_local = 0;
    long denoiser_calls_dilated = 0;
    int local_patches = 0;    // L
    int dilated_patches = 0;  // K
    int degenerate_sm_patches = 0;
    double post_sm_mean_dev = 0.0;  // max |patch mean - ref mean| right after SM fusion
    double post_sm_std_dev = 0.0;
    std::vector<StepRecord> steps;
    double wall_ms = 0.0;
};

struct RunReport {
    PipelineConfig config;
    GridStats reference_stats;
    std::vector<GridStats> reference_channel_stats;
    std::vector<StageRecord> stages;
    std::vector<LatentGrid> stage_grids;  // stage_grids[0] is the phase-1 latent
    bool aborted = false;
    std::string abort_reason;

    const LatentGrid& final_grid() const { return stage_grids.back(); }
    long total_denoiser_calls() const;
};

// Raised when a non-finite latent is detected mid-run; carries the partial report.
struct PipelineAbort : std::runtime_error {
    PipelineAbort(const std::string& what, RunReport partial_report)
        : std::runtime_error(what), partial(std::move(partial_report)) {}
    RunReport partial;
};

// ((1 + cos(pi (t0 - t) / t0)) / 2)^exponent for t counting down t0 -> 0;
// 1 at t = t0, 0 at t = 0, strictly decreasing in between.
double cosine_decay(int t, int t0, double exponent);

// lambda1 * diffused + (1 - lambda1) * denoised, elementwise.
LatentGrid skip_residual(const LatentGrid& diffused, const LatentGrid& denoised, double lambda1);

// One dual-path denoising window: for window position p = t0 down to 1,
// blend in the diffused ladder via the skip residual, DDIM-step every local
// patch under sched_local and every dilated patch under sched_dilated, and
// fuse with the cosine-decayed lambda2. `ladder[p]` must hold the diffused
// latent at window position p whenever lambda1_scale > 0.
struct WindowParams {
    const NoiseSchedule& sched_local;
    const NoiseSchedule& sched_dilated;
    const SubstepMap& substeps;
    double lambda1_exponent = 1.0;
    double lambda2_exponent = 1.0;
    double lambda1_scale = 1.0;
    double lambda2_scale = 1.0;
    int threads = 1;
};

LatentGrid denoise_window(LatentGrid z, const std::vector<LatentGrid>& ladder,
                          const PatchLayout& local, const DilatedLayout& dilated,
                          const DenoiserFn& eps, const std::string& label,
                          const WindowParams& params, StageRecord* record = nullptr);

// Phase 1: DDIM from pure noise over the full substep ladder on a single
// whole-grid patch. Returns the base latent and its pooled stats.
std::pair<LatentGrid, GridStats> generate_reference(const PipelineConfig& config, const DenoiserFn& eps,
                                                    StageRecord* record = nullptr);

// Phase 2 body for stage s: upsample, statistically match the dilated
// patches to the phase-1 reference, diffuse the result up the shortcut
// ladder, then run the dual-path window.
LatentGrid upscale_stage(const LatentGrid& z_prev, int stage, const PipelineConfig& config,
                         const GridStats& ref_stats, const std::vector<GridStats>& ref_channel_stats,
                         const DenoiserFn& eps, StageRecord* record = nullptr);

// The whole run. `external` backs DenoiserKind::External.
RunReport run_apt(const PipelineConfig& config, DenoiserFn external = nullptr);

}  // namespace apt
