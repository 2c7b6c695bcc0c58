#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcc/cipher.hpp"

namespace qcc {

/// Source of key material. Implementations must be deterministic functions
/// of their construction parameters so that key generation is reproducible.
class EntropySource {
public:
    virtual ~EntropySource() = default;
    virtual std::uint64_t next_u64() = 0;
};

/// Infinite deterministic stream expanded from a 64-bit seed (splitmix64).
class SeededEntropy final : public EntropySource {
public:
    explicit SeededEntropy(std::uint64_t seed) noexcept
        : state_(seed)
    {
    }

    std::uint64_t next_u64() override
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Finite byte buffer; throws EntropyExhausted once drained.
class BufferEntropy final : public EntropySource {
public:
    explicit BufferEntropy(std::span<const std::uint8_t> bytes)
        : bytes_(bytes.begin(), bytes.end())
    {
    }

    std::uint64_t next_u64() override;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

struct KeygenOptions {
    Variant variant = Variant::main;
    std::int64_t iterations = 1;
    bool palette = false;
    std::optional<int> force_e;          // restrict the field series
    std::optional<std::int64_t> force_m; // pin the field parameter
};

/**
 * Samples a full key from the entropy source: field with m in [1,50]
 * (e=+1) or [3,50] (e=-1), a window of valid normalized length built from
 * rational multiples of 1 and tau, a trial order, a direction, and a seed
 * found by bounded scan near a random lattice row. Invalid draws are
 * rejected and resampled; a drained or persistently unlucky source raises
 * EntropyExhausted.
 */
CipherKey keygen(EntropySource& entropy, const KeygenOptions& options = {});

} // namespace qcc
