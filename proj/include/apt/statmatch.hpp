#pragma once

#include <vector>

#include "apt/grid.hpp"
#include "apt/resample.hpp"

namespace apt {

struct MatchReport {
    int degenerate_patches = 0;
    std::vector<int> degenerate_indices;
};

// Affine renormalization (sigma_ref / sigma_patch) * (d - mu_patch) + mu_ref,
// so the result's pooled stats equal the reference. A patch whose stats
// already equal the reference is returned unchanged, bit for bit. A constant
// patch (sigma 0) gets a pure mean shift and sets *degenerate.
LatentGrid match_stats(const LatentGrid& patch, const GridStats& reference, bool* degenerate = nullptr);

// Channel-wise variant; reference holds one entry per channel.
LatentGrid match_stats_per_channel(const LatentGrid& patch, const std::vector<GridStats>& reference,
                                   bool* degenerate = nullptr);

// dilated_fuse(match_stats(.) for each dilated patch of `upsampled`).
LatentGrid match_all_dilated(const LatentGrid& upsampled, const DilatedLayout& layout,
                             const GridStats& reference, MatchReport* report = nullptr);

LatentGrid match_all_dilated_per_channel(const LatentGrid& upsampled, const DilatedLayout& layout,
                                         const std::vector<GridStats>& reference,
                                         MatchReport* report = nullptr);

}  // namespace apt
