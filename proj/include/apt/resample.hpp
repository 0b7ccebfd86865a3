#pragma once

#include <utility>
#include <vector>

#include "apt/grid.hpp"

namespace apt {

enum class UpsampleMethod { Bicubic, Nearest };

// Per-channel upsampling to (target_h, target_w) >= source dims.
// Bicubic uses the Catmull-Rom kernel (a = -0.5) with clamp-to-edge padding
// and half-pixel center alignment; it preserves constant grids bit-exactly.
// Nearest requires integer per-axis factors and replicates source pixels.
LatentGrid upsample(const LatentGrid& grid, int target_h, int target_w, UpsampleMethod method);

// Strided decomposition of an H x W grid into stride_h * stride_w patches of
// size (patch_h, patch_w): patch k (0-based k = i * stride_w + j) holds the
// pixels (i + a * stride_h, j + b * stride_w). The patches tile the grid
// exactly, so split/fuse is a bit-level bijection.
struct DilatedLayout {
    int stride_h = 1;
    int stride_w = 1;
    int patch_h = 0;
    int patch_w = 0;

    int patch_count() const { return stride_h * stride_w; }

    // Layout for an H x W grid with patches of the given dims; both axes must
    // divide exactly.
    static DilatedLayout for_dims(int grid_h, int grid_w, int patch_h, int patch_w);
};

std::vector<LatentGrid> dilated_split(const LatentGrid& grid, const DilatedLayout& layout);
LatentGrid dilated_fuse(const std::vector<LatentGrid>& patches, const DilatedLayout& layout);

enum class FusionWeighting { Uniform, Gaussian };

// Overlapping raster of (patch_h, patch_w) crops with anchors every
// (patch_h * r, patch_w * r) pixels, r the overlap ratio. weight_sum holds the
// accumulated fusion weight per pixel (the plain coverage count under uniform
// weighting); fusion divides by it, so normalized weights sum to 1 everywhere.
struct PatchLayout {
    int grid_h = 0;
    int grid_w = 0;
    int patch_h = 0;
    int patch_w = 0;
    double overlap_ratio = 0.5;
    FusionWeighting weighting = FusionWeighting::Uniform;
    std::vector<std::pair<int, int>> anchors;  // (row, col), raster order
    std::vector<double> weight_sum;            // grid_h * grid_w

    int patch_count() const { return static_cast<int>(anchors.size()); }
};

// Kernel weight at offset (dy, dx) inside a patch: 1 under uniform weighting,
// a centered Gaussian (sigma = dim / 6) otherwise.
double patch_weight(const PatchLayout& layout, int dy, int dx);

// Anchors at multiples of the stride covering the grid edge-to-edge. Rejects
// non-integral strides and ragged covers (stride not dividing grid - patch).
// A patch spanning the full axis yields the single anchor 0 for any r.
PatchLayout local_layout(int grid_h, int grid_w, int patch_h, int patch_w, double overlap_ratio,
                         FusionWeighting weighting = FusionWeighting::Uniform);

std::vector<LatentGrid> local_extract(const LatentGrid& grid, const PatchLayout& layout);

// Weighted per-pixel average of the patches; inverse of local_extract up to
// floating-point averaging error.
LatentGrid local_fuse(const std::vector<LatentGrid>& patches, const PatchLayout& layout, int channels);

}  // namespace apt
