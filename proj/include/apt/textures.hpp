#pragma once

#include <string>
#include <utility>
#include <vector>

#include "apt/grid.hpp"

namespace apt {

// Seeded procedural test textures (single channel). Generated, never shipped
// as data files, so diagnostics stay reproducible from code alone.

// cell x cell checkerboard in {0, 1} plus Gaussian perturbation of the given
// amplitude.
LatentGrid texture_checker(int n, int cell, double noise_amp, const SeedKey& key);

// Smooth value noise: a lattice of Gaussian knots interpolated with a
// smoothstep-weighted bilinear kernel.
LatentGrid texture_value_noise(int n, int lattice, const SeedKey& key);

// Diagonal gradient over [0, 1].
LatentGrid texture_ramp(int n);

// The fixed three-texture corpus used by trend assertions.
std::vector<std::pair<std::string, LatentGrid>> texture_corpus(int n, uint64_t seed);

LatentGrid texture_by_name(const std::string& name, int n, uint64_t seed);

}  // namespace apt
