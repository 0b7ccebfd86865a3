#include "apt/rng.hpp"

#include <cmath>

namespace apt {

namespace {

constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

constexpr double kPi = 3.14159265358979323846;

inline double u64_to_unit(uint64_t x) {
    // 53 random bits plus a half-ulp offset keeps the value strictly in (0,1).
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        const uint64_t product0 = static_cast<uint64_t>(kMul0) * counter[0];
        const uint64_t product1 = static_cast<uint64_t>(kMul1) * counter[2];
        const std::array<uint32_t, 4> next = {
            static_cast<uint32_t>(product1 >> 32) ^ counter[1] ^ key[0],
            static_cast<uint32_t>(product1),
            static_cast<uint32_t>(product0 >> 32) ^ counter[3] ^ key[1],
            static_cast<uint32_t>(product0),
        };
        counter = next;
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return counter;
}

NoiseStream::NoiseStream(const SeedKey& key) {
    // Absorb all key fields with one cipher application; the output becomes
    // the stream's subkey and counter prefix.
    const std::array<uint32_t, 4> msg = {
        static_cast<uint32_t>(key.stage),
        static_cast<uint32_t>(key.timestep),
        static_cast<uint32_t>(key.patch_index),
        static_cast<uint32_t>(key.purpose),
    };
    const std::array<uint32_t, 2> seed_key = {
        static_cast<uint32_t>(key.run_seed),
        static_cast<uint32_t>(key.run_seed >> 32),
    };
    const std::array<uint32_t, 4> derived = philox4x32(msg, seed_key);
    key_ = {derived[0], derived[1]};
    prefix_ = {derived[2], derived[3]};
}

void NoiseStream::refill() {
    const std::array<uint32_t, 4> counter = {
        prefix_[0],
        prefix_[1],
        static_cast<uint32_t>(block_),
        static_cast<uint32_t>(block_ >> 32),
    };
    buffer_ = philox4x32(counter, key_);
    ++block_;
    buffer_pos_ = 0;
}

double NoiseStream::next_uniform() {
    if (buffer_pos_ > 2) refill();
    const uint64_t lo = buffer_[buffer_pos_];
    const uint64_t hi = buffer_[buffer_pos_ + 1];
    buffer_pos_ += 2;
    return u64_to_unit(lo | (hi << 32));
}

double NoiseStream::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    cached_gaussian_ = radius * std::sin(angle);
    has_cached_gaussian_ = true;
    return radius * std::cos(angle);
}

}  // namespace apt
