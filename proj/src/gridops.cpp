#include "qcc/gridops.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcc/errors.hpp"

namespace qcc::gridops {

namespace {

// Below this many samples the parallel path is not worth spawning a team.
constexpr std::int64_t kParallelThreshold = 1 << 15;

bool use_parallel(ExecPolicy policy, std::int64_t work)
{
#ifdef _OPENMP
    switch (policy) {
    case ExecPolicy::serial: return false;
    case ExecPolicy::parallel: return effective_threads() > 1;
    case ExecPolicy::automatic:
        return work >= kParallelThreshold && effective_threads() > 1;
    }
    return false;
#else
    (void)policy;
    (void)work;
    return false;
#endif
}

void check_sizes(std::size_t in, std::size_t out, std::size_t expected, const char* kernel)
{
    if (in != expected || out != expected)
        raise(ErrorCode::dimension_mismatch,
              std::string(kernel) + ": buffer sizes do not match the grid");
}

} // namespace

int thread_cap()
{
    const char* env = std::getenv("APERIODIC_CIPHER_THREADS");
    if (env == nullptr || *env == '\0')
        return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0)
        return 0;
    return static_cast<int>(v);
}

int effective_threads()
{
#ifdef _OPENMP
    const int cap = thread_cap();
    const int hw = omp_get_max_threads();
    return cap == 0 ? hw : std::min(cap, hw);
#else
    return 1;
#endif
}

void permute_serial(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                    std::span<const std::int64_t> map)
{
    check_sizes(in.size(), out.size(), map.size(), "permute");
    for (std::size_t k = 0; k < map.size(); ++k)
        out[k] = in[static_cast<std::size_t>(map[k])];
}

void permute(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
             std::span<const std::int64_t> map, ExecPolicy policy)
{
    const auto n = static_cast<std::int64_t>(map.size());
    if (!use_parallel(policy, n)) {
        permute_serial(in, out, map);
        return;
    }
    check_sizes(in.size(), out.size(), map.size(), "permute");
#ifdef _OPENMP
    const std::uint8_t* src = in.data();
    std::uint8_t* dst = out.data();
    const std::int64_t* m = map.data();
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (std::int64_t k = 0; k < n; ++k)
        dst[k] = src[m[k]];
#endif
}

void scatter2d_serial(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                      std::int64_t n1, std::int64_t n2, std::span<const std::int64_t> map_x,
                      std::span<const std::int64_t> map_y)
{
    check_sizes(in.size(), out.size(), static_cast<std::size_t>(n1 * n2), "scatter2d");
    assert(static_cast<std::int64_t>(map_x.size()) == n1);
    assert(static_cast<std::int64_t>(map_y.size()) == n2);
    for (std::int64_t j = 0; j < n2; ++j) {
        const std::uint8_t* row = in.data() + map_y[static_cast<std::size_t>(j)] * n1;
        std::uint8_t* dst = out.data() + j * n1;
        for (std::int64_t i = 0; i < n1; ++i)
            dst[i] = row[map_x[static_cast<std::size_t>(i)]];
    }
}

void scatter2d(std::span<const std::uint8_t> in, std::span<std::uint8_t> out, std::int64_t n1,
               std::int64_t n2, std::span<const std::int64_t> map_x,
               std::span<const std::int64_t> map_y, ExecPolicy policy)
{
    if (!use_parallel(policy, n1 * n2)) {
        scatter2d_serial(in, out, n1, n2, map_x, map_y);
        return;
    }
    check_sizes(in.size(), out.size(), static_cast<std::size_t>(n1 * n2), "scatter2d");
#ifdef _OPENMP
    const std::uint8_t* src = in.data();
    std::uint8_t* dst = out.data();
    const std::int64_t* mx = map_x.data();
    const std::int64_t* my = map_y.data();
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (std::int64_t j = 0; j < n2; ++j) {
        const std::uint8_t* row = src + my[j] * n1;
        std::uint8_t* d = dst + j * n1;
        for (std::int64_t i = 0; i < n1; ++i)
            d[i] = row[mx[i]];
    }
#endif
}

void rotate_rows_left_serial(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                             std::int64_t n1, std::int64_t n2,
                             std::span<const std::int64_t> offsets)
{
    check_sizes(in.size(), out.size(), static_cast<std::size_t>(n1 * n2), "rotate_rows_left");
    assert(static_cast<std::int64_t>(offsets.size()) == n2);
    for (std::int64_t j = 0; j < n2; ++j) {
        const std::int64_t o = offsets[static_cast<std::size_t>(j)] % n1;
        const std::uint8_t* row = in.data() + j * n1;
        std::uint8_t* dst = out.data() + j * n1;
        for (std::int64_t i = 0; i < n1; ++i) {
            std::int64_t s = i + o;
            if (s >= n1)
                s -= n1;
            dst[i] = row[s];
        }
    }
}

void rotate_rows_left(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                      std::int64_t n1, std::int64_t n2, std::span<const std::int64_t> offsets,
                      ExecPolicy policy)
{
    if (!use_parallel(policy, n1 * n2)) {
        rotate_rows_left_serial(in, out, n1, n2, offsets);
        return;
    }
    check_sizes(in.size(), out.size(), static_cast<std::size_t>(n1 * n2), "rotate_rows_left");
#ifdef _OPENMP
    const std::uint8_t* src = in.data();
    std::uint8_t* dst = out.data();
    const std::int64_t* off = offsets.data();
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (std::int64_t j = 0; j < n2; ++j) {
        const std::int64_t o = off[j] % n1;
        const std::uint8_t* row = src + j * n1;
        std::uint8_t* d = dst + j * n1;
        for (std::int64_t i = 0; i < n1; ++i) {
            std::int64_t s = i + o;
            if (s >= n1)
                s -= n1;
            d[i] = row[s];
        }
    }
#endif
}

void rotate_cols_down_serial(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                             std::int64_t n1, std::int64_t n2,
                             std::span<const std::int64_t> offsets)
{
    check_sizes(in.size(), out.size(), static_cast<std::size_t>(n1 * n2), "rotate_cols_down");
    assert(static_cast<std::int64_t>(offsets.size()) == n1);
    // Row-wise traversal keeps the writes sequential.
    for (std::int64_t j = 0; j < n2; ++j) {
        std::uint8_t* dst = out.data() + j * n1;
        for (std::int64_t i = 0; i < n1; ++i) {
            std::int64_t s = j - offsets[static_cast<std::size_t>(i)] % n2;
            if (s < 0)
                s += n2;
            dst[i] = in[static_cast<std::size_t>(s * n1 + i)];
        }
    }
}

void rotate_cols_down(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                      std::int64_t n1, std::int64_t n2, std::span<const std::int64_t> offsets,
                      ExecPolicy policy)
{
    if (!use_parallel(policy, n1 * n2)) {
        rotate_cols_down_serial(in, out, n1, n2, offsets);
        return;
    }
    check_sizes(in.size(), out.size(), static_cast<std::size_t>(n1 * n2), "rotate_cols_down");
#ifdef _OPENMP
    const std::uint8_t* src = in.data();
    std::uint8_t* dst = out.data();
    const std::int64_t* off = offsets.data();
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (std::int64_t j = 0; j < n2; ++j) {
        std::uint8_t* d = dst + j * n1;
        for (std::int64_t i = 0; i < n1; ++i) {
            std::int64_t s = j - off[i] % n2;
            if (s < 0)
                s += n2;
            d[i] = src[s * n1 + i];
        }
    }
#endif
}

void map_values_serial(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                       std::span<const std::uint8_t> lut)
{
    check_sizes(in.size(), out.size(), in.size(), "map_values");
    assert(lut.size() == 256);
    for (std::size_t k = 0; k < in.size(); ++k)
        out[k] = lut[in[k]];
}

void map_values(std::span<const std::uint8_t> in, std::span<std::uint8_t> out,
                std::span<const std::uint8_t> lut, ExecPolicy policy)
{
    const auto n = static_cast<std::int64_t>(in.size());
    if (!use_parallel(policy, n)) {
        map_values_serial(in, out, lut);
        return;
    }
    check_sizes(in.size(), out.size(), in.size(), "map_values");
#ifdef _OPENMP
    const std::uint8_t* src = in.data();
    std::uint8_t* dst = out.data();
    const std::uint8_t* table = lut.data();
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (std::int64_t k = 0; k < n; ++k)
        dst[k] = table[src[k]];
#endif
}

} // namespace qcc::gridops
