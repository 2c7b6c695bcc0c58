#include "qcc/bench.hpp"

#include <chrono>
#include <sstream>

#include "qcc/gridops.hpp"

namespace qcc {

namespace {

double time_encrypt(const Grid& grid, const CipherKey& key, gridops::ExecPolicy policy)
{
    const auto start = std::chrono::steady_clock::now();
    const Grid out = encrypt(grid, key, policy);
    const auto stop = std::chrono::steady_clock::now();
    // Keep the result alive so the call cannot be elided.
    volatile std::uint8_t sink = out.pixels.empty() ? 0 : out.pixels[0];
    (void)sink;
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

BenchResult bench_variant(const Grid& grid, const CipherKey& base_key, Variant variant)
{
    CipherKey key = base_key;
    key.variant = variant;
    key.iterations = 1;

    BenchResult r;
    r.variant = variant;
    r.width = grid.width;
    r.height = grid.height;
    r.serial_seconds = time_encrypt(grid, key, gridops::ExecPolicy::serial);
    r.dispatch_seconds = time_encrypt(grid, key, gridops::ExecPolicy::automatic);
    const double bytes = static_cast<double>(grid.pixels.size());
    r.throughput_mb_per_s = bytes / (1024.0 * 1024.0) / r.dispatch_seconds;
    return r;
}

std::vector<BenchResult> run_bench(const Grid& grid, const CipherKey& base_key)
{
    return {bench_variant(grid, base_key, Variant::main),
            bench_variant(grid, base_key, Variant::mod1),
            bench_variant(grid, base_key, Variant::mod2)};
}

std::string format_bench(const std::vector<BenchResult>& results)
{
    std::ostringstream os;
    os << "variant  size       serial_ms  parallel_ms  throughput_MBps  threads\n";
    for (const BenchResult& r : results) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-7s  %5lldx%-5lld  %9.3f  %11.3f  %15.1f  %7d\n",
                      variant_name(r.variant), static_cast<long long>(r.width),
                      static_cast<long long>(r.height), r.serial_seconds * 1e3,
                      r.dispatch_seconds * 1e3, r.throughput_mb_per_s,
                      gridops::effective_threads());
        os << line;
    }
    return os.str();
}

} // namespace qcc
