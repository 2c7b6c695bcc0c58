#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcc/quasicrystal.hpp"

namespace qcc {

/**
 * A bijection on {0..n-1}, stored as the index array map where position i
 * of the permuted output reads position map[i] of the input.
 */
class Permutation {
public:
    explicit Permutation(std::vector<std::int64_t> map);
    static Permutation identity(std::int64_t n);

    /**
     * Ranks the points by their star values under the exact comparator and
     * returns pi with pi(i) = ns of the point at sorted rank i. Star values
     * of distinct points are distinct, so the order has no ties.
     */
    static Permutation from_points(std::span<const QCPoint> points, const QuadraticField& f);

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(map_.size()); }
    std::int64_t operator[](std::int64_t i) const { return map_[static_cast<std::size_t>(i)]; }
    std::span<const std::int64_t> map() const noexcept { return map_; }

    Permutation inverted() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    struct unchecked_tag {};
    Permutation(std::vector<std::int64_t> map, unchecked_tag)
        : map_(std::move(map))
    {
    }

    std::vector<std::int64_t> map_;
};

/// (pi o sigma)(i) = pi(sigma(i)); sizes must match.
Permutation compose(const Permutation& pi, const Permutation& sigma);

/// Offsets pi(i) mod modulus, one per index.
std::vector<std::int64_t> cyclic_offsets(const Permutation& pi, std::int64_t modulus);

/// out[i] = data[pi(i)]; data length must equal the permutation size.
template <typename T>
std::vector<T> apply(const Permutation& pi, std::span<const T> data)
{
    if (static_cast<std::int64_t>(data.size()) != pi.size())
        raise(ErrorCode::length_mismatch,
              "apply: data length " + std::to_string(data.size()) +
                  " does not match permutation size " + std::to_string(pi.size()));
    std::vector<T> out(data.size());
    for (std::int64_t i = 0; i < pi.size(); ++i)
        out[static_cast<std::size_t>(i)] = data[static_cast<std::size_t>(pi[i])];
    return out;
}

/// One line per entry: "i<TAB>map[i]\n".
std::string format_permutation(const Permutation& pi);

} // namespace qcc
