#include "qcc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcc {

namespace {

void check_bijection(const std::vector<std::int64_t>& map)
{
    const auto n = static_cast<std::int64_t>(map.size());
    std::vector<bool> seen(map.size(), false);
    for (const std::int64_t v : map) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            raise(ErrorCode::invalid_argument,
                  "permutation map is not a bijection on {0.." + std::to_string(n - 1) + "}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

} // namespace

Permutation::Permutation(std::vector<std::int64_t> map)
    : map_(std::move(map))
{
    check_bijection(map_);
}

Permutation Permutation::identity(std::int64_t n)
{
    std::vector<std::int64_t> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), std::int64_t{0});
    return Permutation(std::move(map), unchecked_tag{});
}

Permutation Permutation::from_points(std::span<const QCPoint> points, const QuadraticField& f)
{
    std::vector<std::int64_t> order(points.size());
    std::iota(order.begin(), order.end(), std::int64_t{0});
    std::sort(order.begin(), order.end(), [&](std::int64_t i, std::int64_t j) {
        return compare(points[static_cast<std::size_t>(i)].star_value,
                       points[static_cast<std::size_t>(j)].star_value, f) < 0;
    });
    std::vector<std::int64_t> map(points.size());
    for (std::size_t rank = 0; rank < points.size(); ++rank)
        map[rank] = points[static_cast<std::size_t>(order[rank])].ns;
    // The counting check guards against duplicate input points.
    return Permutation(std::move(map));
}

Permutation Permutation::inverted() const
{
    std::vector<std::int64_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        inv[static_cast<std::size_t>(map_[i])] = static_cast<std::int64_t>(i);
    return Permutation(std::move(inv), unchecked_tag{});
}

Permutation compose(const Permutation& pi, const Permutation& sigma)
{
    if (pi.size() != sigma.size())
        raise(ErrorCode::length_mismatch,
              "compose: sizes " + std::to_string(pi.size()) + " and " +
                  std::to_string(sigma.size()) + " differ");
    std::vector<std::int64_t> map(static_cast<std::size_t>(pi.size()));
    for (std::int64_t i = 0; i < pi.size(); ++i)
        map[static_cast<std::size_t>(i)] = pi[sigma[i]];
    return Permutation(std::move(map));
}

std::vector<std::int64_t> cyclic_offsets(const Permutation& pi, std::int64_t modulus)
{
    if (modulus < 1)
        raise(ErrorCode::invalid_argument, "cyclic_offsets: modulus must be positive");
    std::vector<std::int64_t> offsets(static_cast<std::size_t>(pi.size()));
    for (std::int64_t i = 0; i < pi.size(); ++i)
        offsets[static_cast<std::size_t>(i)] = pi[i] % modulus;
    return offsets;
}

std::string format_permutation(const Permutation& pi)
{
    std::ostringstream os;
    for (std::int64_t i = 0; i < pi.size(); ++i)
        os << i << '\t' << pi[i] << '\n';
    return os.str();
}

} // namespace qcc
