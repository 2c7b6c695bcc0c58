#include "qcc/cipher.hpp"

#include <string>
#include <utility>

namespace qcc {

const char* variant_name(Variant v) noexcept
{
    switch (v) {
    case Variant::main: return "main";
    case Variant::mod1: return "mod1";
    case Variant::mod2: return "mod2";
    }
    return "?";
}

void validate(const CipherKey& key)
{
    if (key.iterations < 1)
        raise(ErrorCode::invalid_key, "iterations must be >= 1");
    for (const KeySpec* spec : {&key.axis_x, &key.axis_y}) {
        try {
            validate_seed(spec->generator());
        } catch (const Error& e) {
            raise(ErrorCode::invalid_key, e.what());
        }
    }
    if (key.value_axis) {
        try {
            validate_seed(key.value_axis->generator());
        } catch (const Error& e) {
            raise(ErrorCode::invalid_key, e.what());
        }
    }
}

Grid Grid::make(std::int64_t width, std::int64_t height)
{
    if (width < 1 || height < 1)
        raise(ErrorCode::dimension_mismatch, "grid dimensions must be positive");
    if (width > (std::int64_t{1} << 31) / height)
        raise(ErrorCode::dimension_mismatch, "grid exceeds the supported pixel count");
    Grid g;
    g.width = width;
    g.height = height;
    g.pixels.assign(static_cast<std::size_t>(width * height), 0);
    return g;
}

Permutation axis_permutation(const KeySpec& spec, std::int64_t n)
{
    const std::vector<QCPoint> points = generate(spec.generator(), n);
    return Permutation::from_points(points, spec.field);
}

namespace {

using gridops::ExecPolicy;

void check_grid(const Grid& g)
{
    if (g.width < 1 || g.height < 1 ||
        g.pixels.size() != static_cast<std::size_t>(g.width * g.height))
        raise(ErrorCode::dimension_mismatch, "grid pixel buffer does not match its dimensions");
}

// Shared derived state for one (grid, key) pair; both directions use it.
struct Plan {
    Permutation perm_x;
    Permutation perm_y;
    std::vector<std::int64_t> row_offsets; // mod1: perm_y(j) mod n1
    std::vector<std::int64_t> col_offsets; // mod1: perm_x(i) mod n2
    std::vector<std::uint8_t> palette;     // 256-entry LUT, empty if unused
};

Plan build_plan(const Grid& grid, const CipherKey& key)
{
    Plan plan{Permutation::identity(0), Permutation::identity(0), {}, {}, {}};
    const std::int64_t n1 = grid.width, n2 = grid.height;

    switch (key.variant) {
    case Variant::main:
        plan.perm_x = axis_permutation(key.axis_x, n1);
        plan.perm_y = axis_permutation(key.axis_y, n2);
        break;
    case Variant::mod1:
        plan.perm_x = axis_permutation(key.axis_x, n1);
        plan.perm_y = axis_permutation(key.axis_y, n2);
        plan.row_offsets = cyclic_offsets(plan.perm_y, n1);
        plan.col_offsets = cyclic_offsets(plan.perm_x, n2);
        break;
    case Variant::mod2:
        plan.perm_x = axis_permutation(key.axis_x, n1 * n2);
        break;
    }

    if (key.value_axis) {
        const Permutation rho = axis_permutation(*key.value_axis, 256);
        plan.palette.resize(256);
        for (int v = 0; v < 256; ++v)
            plan.palette[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(rho[v]);
    }
    return plan;
}

std::vector<std::int64_t> complement_offsets(const std::vector<std::int64_t>& offsets,
                                             std::int64_t modulus)
{
    std::vector<std::int64_t> inv(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i)
        inv[i] = (modulus - offsets[i]) % modulus;
    return inv;
}

std::vector<std::uint8_t> invert_lut(const std::vector<std::uint8_t>& lut)
{
    std::vector<std::uint8_t> inv(256);
    for (int v = 0; v < 256; ++v)
        inv[lut[static_cast<std::size_t>(v)]] = static_cast<std::uint8_t>(v);
    return inv;
}

Grid transform(const Grid& grid, const CipherKey& key, ExecPolicy policy, bool forward)
{
    check_grid(grid);
    validate(key);
    const std::int64_t n1 = grid.width, n2 = grid.height;

    const Plan plan = build_plan(grid, key);
    const Permutation perm_x = forward ? plan.perm_x : plan.perm_x.inverted();
    const Permutation perm_y =
        key.variant == Variant::mod2 ? Permutation::identity(0)
                                     : (forward ? plan.perm_y : plan.perm_y.inverted());

    Grid cur = grid;
    Grid scratch = grid;
    auto step = [&](auto&& kernel) {
        kernel(cur, scratch);
        std::swap(cur, scratch);
    };

    auto scatter = [&](const Grid& src, Grid& dst) {
        gridops::scatter2d(src.pixels, dst.pixels, n1, n2, perm_x.map(), perm_y.map(), policy);
    };
    auto flat_permute = [&](const Grid& src, Grid& dst) {
        gridops::permute(src.pixels, dst.pixels, perm_x.map(), policy);
    };

    if (!forward && !plan.palette.empty()) {
        const std::vector<std::uint8_t> inv = invert_lut(plan.palette);
        step([&](const Grid& src, Grid& dst) {
            gridops::map_values(src.pixels, dst.pixels, inv, policy);
        });
    }

    for (std::int64_t round = 0; round < key.iterations; ++round) {
        switch (key.variant) {
        case Variant::main:
            step(scatter);
            break;
        case Variant::mod1:
            if (forward) {
                step(scatter);
                step([&](const Grid& src, Grid& dst) {
                    gridops::rotate_rows_left(src.pixels, dst.pixels, n1, n2, plan.row_offsets,
                                              policy);
                });
                step([&](const Grid& src, Grid& dst) {
                    gridops::rotate_cols_down(src.pixels, dst.pixels, n1, n2, plan.col_offsets,
                                              policy);
                });
            } else {
                const auto rows_back = complement_offsets(plan.row_offsets, n1);
                const auto cols_back = complement_offsets(plan.col_offsets, n2);
                step([&](const Grid& src, Grid& dst) {
                    gridops::rotate_cols_down(src.pixels, dst.pixels, n1, n2, cols_back, policy);
                });
                step([&](const Grid& src, Grid& dst) {
                    gridops::rotate_rows_left(src.pixels, dst.pixels, n1, n2, rows_back, policy);
                });
                step(scatter);
            }
            break;
        case Variant::mod2:
            step(flat_permute);
            break;
        }
    }

    if (forward && !plan.palette.empty())
        step([&](const Grid& src, Grid& dst) {
            gridops::map_values(src.pixels, dst.pixels, plan.palette, policy);
        });

    return cur;
}

} // namespace

Grid encrypt(const Grid& grid, const CipherKey& key, gridops::ExecPolicy policy)
{
    return transform(grid, key, policy, /*forward=*/true);
}

Grid decrypt(const Grid& grid, const CipherKey& key, gridops::ExecPolicy policy)
{
    return transform(grid, key, policy, /*forward=*/false);
}

} // namespace qcc
