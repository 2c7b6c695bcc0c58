#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcc/gridops.hpp"
#include "qcc/permutation.hpp"
#include "qcc/quasicrystal.hpp"

namespace qcc {

enum class Variant {
    main, // independent permutation per axis
    mod1, // main plus cyclic row and column rotations
    mod2, // single permutation of the row-major flattened data
};

const char* variant_name(Variant v) noexcept;

/// Full per-axis cryptovariable set.
struct KeySpec {
    QuadraticField field;
    RingElement seed;
    Window window;
    TrialOrder trial_order;
    Direction direction = Direction::plus;

    GeneratorConfig generator() const
    {
        return GeneratorConfig{field, window, seed, direction, trial_order};
    }

    friend bool operator==(const KeySpec&, const KeySpec&) = default;
};

struct CipherKey {
    KeySpec axis_x;
    KeySpec axis_y;
    std::optional<KeySpec> value_axis; // present iff the palette layer is on
    Variant variant = Variant::main;
    std::int64_t iterations = 1;

    friend bool operator==(const CipherKey&, const CipherKey&) = default;
};

/// Checks every key invariant (field, window, seed, iterations). InvalidKey.
void validate(const CipherKey& key);

/// 8-bit rectangular grid, row-major: sample (i, j) at j*width + i.
struct Grid {
    std::int64_t width = 0;
    std::int64_t height = 0;
    std::vector<std::uint8_t> pixels;

    static Grid make(std::int64_t width, std::int64_t height);

    std::uint8_t at(std::int64_t i, std::int64_t j) const
    {
        return pixels[static_cast<std::size_t>(j * width + i)];
    }
    std::uint8_t& at(std::int64_t i, std::int64_t j)
    {
        return pixels[static_cast<std::size_t>(j * width + i)];
    }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Permutation of {0..n-1} derived from the first n points of the axis.
Permutation axis_permutation(const KeySpec& spec, std::int64_t n);

Grid encrypt(const Grid& grid, const CipherKey& key,
             gridops::ExecPolicy policy = gridops::ExecPolicy::automatic);
Grid decrypt(const Grid& grid, const CipherKey& key,
             gridops::ExecPolicy policy = gridops::ExecPolicy::automatic);

} // namespace qcc
