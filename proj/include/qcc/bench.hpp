#pragma once

#include <string>
#include <vector>

#include "qcc/cipher.hpp"

namespace qcc {

/// One encryption timing: the serial reference kernels against the
/// dispatched (OpenMP when available) kernels, on the same grid and key.
struct BenchResult {
    Variant variant;
    std::int64_t width = 0;
    std::int64_t height = 0;
    double serial_seconds = 0.0;
    double dispatch_seconds = 0.0;
    double throughput_mb_per_s = 0.0; // from the dispatched path
};

BenchResult bench_variant(const Grid& grid, const CipherKey& base_key, Variant variant);
std::vector<BenchResult> run_bench(const Grid& grid, const CipherKey& base_key);
std::string format_bench(const std::vector<BenchResult>& results);

} // namespace qcc
