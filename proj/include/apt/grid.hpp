#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace apt {

// Dense row-major H x W x C latent tensor.
// Value layout: values[(row * width + col) * channels + ch].
struct LatentGrid {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<double> values;

    LatentGrid() = default;
    LatentGrid(int height, int width, int channels, double fill = 0.0);

    double& at(int row, int col, int ch) {
        return values[static_cast<size_t>((row * width + col) * channels + ch)];
    }
    double at(int row, int col, int ch) const {
        return values[static_cast<size_t>((row * width + col) * channels + ch)];
    }
    size_t size() const { return values.size(); }
    bool same_shape(const LatentGrid& other) const {
        return height == other.height && width == other.width && channels == other.channels;
    }

    // Throws std::runtime_error naming `context` if any value is NaN/Inf.
    void ensure_finite(const char* context) const;
};

// Pooled scalar statistics; std uses the population (divide-by-N) convention.
struct GridStats {
    double mean = 0.0;
    double std = 0.0;
};

enum class NoisePurpose : uint32_t {
    Init = 0,     // initial latent draw
    Chain = 1,    // per-step forward diffusion noise
    Ladder = 2,   // shortcut diffusion ladder
    Trial = 3,    // Monte Carlo replication
    Texture = 4,  // procedural texture generation
};

// Identifies one noise stream. Equal keys reproduce bit-identical streams;
// changing any field yields a statistically independent stream, so results
// do not depend on evaluation order or thread count.
struct SeedKey {
    uint64_t run_seed = 0;
    int32_t stage = 0;
    int32_t timestep = 0;
    int32_t patch_index = 0;
    NoisePurpose purpose = NoisePurpose::Init;

    SeedKey with_timestep(int32_t t) const {
        SeedKey k = *this;
        k.timestep = t;
        return k;
    }
    SeedKey with_patch(int32_t p) const {
        SeedKey k = *this;
        k.patch_index = p;
        return k;
    }
};

LatentGrid make_grid(int height, int width, int channels, double fill);

// Mean and population std pooled over all H*W*C entries. A grid whose entries
// are all bit-equal reports std exactly 0.
GridStats stats(const LatentGrid& grid);

// Per-channel variant of stats(), one entry per channel.
std::vector<GridStats> stats_per_channel(const LatentGrid& grid);

// I.i.d. standard normal entries, a pure function of dimensions and key.
LatentGrid sample_gaussian(int height, int width, int channels, const SeedKey& key);

// Raw binary format: 16-byte header (magic "APTG", u32 height, u32 width,
// u32 channels, little-endian) followed by height*width*channels float32
// little-endian values in row-major (row, col, channel) order.
void write_grid_binary(const LatentGrid& grid, const std::string& path);
LatentGrid read_grid_binary(const std::string& path);

// One 16-bit P5 PGM per channel ("<prefix>_c<ch>.pgm"), channel values
// affinely mapped min..max -> 0..65535. Returns the written paths.
std::vector<std::string> write_grid_pgm(const LatentGrid& grid, const std::string& path_prefix);

// Binary PGM (P5 -> 1 channel) or PPM (P6 -> 3 channels), values scaled to [0,1].
LatentGrid read_pnm(const std::string& path);

// Temp-file + rename write; a crash mid-write never leaves a torn file.
void atomic_write_file(const std::string& path, const std::string& bytes);

}  // namespace apt
