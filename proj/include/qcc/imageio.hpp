#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcc/cipher.hpp"

namespace qcc {

/**
 * Lossless 8-bit grayscale codecs for the CLI: binary and plain PGM per the
 * netpbm convention (maxval 255), plus a headered RAW format of two 32-bit
 * big-endian dimensions (width, height) followed by width*height samples.
 */
enum class ImageFormat {
    pgm_p5,
    pgm_p2,
    raw,
};

/// P5/P2 by magic number; anything else is treated as RAW.
ImageFormat detect_format(std::span<const std::uint8_t> bytes) noexcept;

Grid read_image(std::span<const std::uint8_t> bytes, ImageFormat format);
Grid read_image(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> write_image(const Grid& grid, ImageFormat format);

} // namespace qcc
