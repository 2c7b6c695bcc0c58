#pragma once

#include <cstdint>
#include <span>

namespace qcc::gridops {

/**
 * Execution policy for the pixel-moving kernels. Every kernel has a serial
 * reference implementation and an OpenMP variant that produce identical
 * output; `automatic` picks the parallel path when it is available, the
 * thread cap allows it, and the work is large enough to pay for it.
 */
enum class ExecPolicy {
    automatic,
    serial,
    parallel,
};

/// Thread cap from APERIODIC_CIPHER_THREADS (0 or unset = auto).
int thread_cap();

/// Threads the parallel path would use right now (1 = serial fallback).
int effective_threads();

// All kernels are out-of-place gathers over 8-bit samples; `in` and `out`
// must not alias. Grids are row-major: sample (i, j) lives at j*n1 + i.

/// out[k] = in[map[k]]
void permute(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
             std::span<const std::int64_t> map, ExecPolicy policy = ExecPolicy::automatic);
void permute_serial(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                    std::span<const std::int64_t> map);

/// out(i, j) = in(map_x[i], map_y[j])
void scatter2d(std::span<const std::uint8_t> in, std::span<std::uint8_t> out, std::int64_t n1,
               std::int64_t n2, std::span<const std::int64_t> map_x,
               std::span<const std::int64_t> map_y, ExecPolicy policy = ExecPolicy::automatic);
void scatter2d_serial(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                      std::int64_t n1, std::int64_t n2, std::span<const std::int64_t> map_x,
                      std::span<const std::int64_t> map_y);

/// Row j shifts left by offsets[j]: out(i, j) = in((i + offsets[j]) mod n1, j)
void rotate_rows_left(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                      std::int64_t n1, std::int64_t n2, std::span<const std::int64_t> offsets,
                      ExecPolicy policy = ExecPolicy::automatic);
void rotate_rows_left_serial(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                             std::int64_t n1, std::int64_t n2,
                             std::span<const std::int64_t> offsets);

/// Column i shifts down by offsets[i]: out(i, j) = in(i, (j - offsets[i]) mod n2)
void rotate_cols_down(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                      std::int64_t n1, std::int64_t n2, std::span<const std::int64_t> offsets,
                      ExecPolicy policy = ExecPolicy::automatic);
void rotate_cols_down_serial(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                             std::int64_t n1, std::int64_t n2,
                             std::span<const std::int64_t> offsets);

/// out[k] = lut[in[k]]
void map_values(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                std::span<const std::uint8_t> lut, ExecPolicy policy = ExecPolicy::automatic);
void map_values_serial(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                       std::span<const std::uint8_t> lut);

} // namespace qcc::gridops
