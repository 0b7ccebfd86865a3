#pragma once

#include <array>
#include <cstdint>

#include "apt/grid.hpp"

namespace apt {

// Philox4x32-10 counter-based block cipher (Salmon et al.). Stateless: the
// output is a pure function of (counter, key), which is what makes keyed,
// order-independent noise streams possible.
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

// Deterministic stream of uniforms/gaussians owned by one SeedKey. The key
// fields are absorbed into a derived subkey with one cipher application, then
// blocks are generated by counting.
class NoiseStream {
public:
    explicit NoiseStream(const SeedKey& key);

    double next_uniform();   // strictly inside (0, 1)
    double next_gaussian();  // standard normal, Box-Muller

private:
    void refill();

    std::array<uint32_t, 2> key_{};
    std::array<uint32_t, 2> prefix_{};  // per-key counter prefix
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buffer_{};
    int buffer_pos_ = 4;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

}  // namespace apt
