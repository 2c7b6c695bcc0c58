#include "qcc/imageio.hpp"

#include <string>

namespace qcc {

namespace {

constexpr std::int64_t kMaxPixels = std::int64_t{1} << 31;

bool is_pnm_space(std::uint8_t c) noexcept
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

class PnmReader {
public:
    explicit PnmReader(std::span<const std::uint8_t> bytes)
        : bytes_(bytes)
    {
    }

    // Skips whitespace and '#' comments running to end of line.
    void skip_separators()
    {
        while (pos_ < bytes_.size()) {
            if (is_pnm_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
                    ++pos_;
            } else {
                break;
            }
        }
    }

    std::int64_t read_number(const char* what)
    {
        skip_separators();
        if (pos_ >= bytes_.size() || bytes_[pos_] < '0' || bytes_[pos_] > '9')
            raise(ErrorCode::malformed_header, std::string("pgm: expected ") + what);
        std::int64_t value = 0;
        while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > kMaxPixels)
                raise(ErrorCode::malformed_header, std::string("pgm: ") + what + " out of range");
            ++pos_;
        }
        return value;
    }

    void expect_single_space()
    {
        if (pos_ >= bytes_.size() || !is_pnm_space(bytes_[pos_]))
            raise(ErrorCode::malformed_header, "pgm: expected whitespace after maxval");
        ++pos_;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

    bool at_end()
    {
        return pos_ >= bytes_.size();
    }

    std::size_t pos() const { return pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

// The two-byte magic has already been checked by the caller.
Grid read_pgm(std::span<const std::uint8_t> bytes, bool binary)
{
    PnmReader reader(bytes.subspan(2));
    const std::int64_t width = reader.read_number("width");
    const std::int64_t height = reader.read_number("height");
    const std::int64_t maxval = reader.read_number("maxval");
    if (width < 1 || height < 1 || width * height > kMaxPixels)
        raise(ErrorCode::malformed_header, "pgm: invalid dimensions");
    if (maxval != 255)
        raise(ErrorCode::unsupported_maxval,
              "pgm: maxval " + std::to_string(maxval) + " (only 255 is supported)");

    Grid grid = Grid::make(width, height);
    const auto expected = static_cast<std::size_t>(width * height);

    if (binary) {
        reader.expect_single_space();
        const auto payload = reader.rest();
        if (payload.size() < expected)
            raise(ErrorCode::truncated_payload,
                  "pgm: payload has " + std::to_string(payload.size()) + " of " +
                      std::to_string(expected) + " bytes");
        if (payload.size() > expected)
            raise(ErrorCode::malformed_header, "pgm: trailing data after payload");
        std::copy(payload.begin(), payload.end(), grid.pixels.begin());
    } else {
        for (std::size_t k = 0; k < expected; ++k) {
            reader.skip_separators();
            if (reader.at_end())
                raise(ErrorCode::truncated_payload,
                      "pgm: payload has " + std::to_string(k) + " of " +
                          std::to_string(expected) + " samples");
            const std::int64_t v = reader.read_number("sample");
            if (v > 255)
                raise(ErrorCode::malformed_header, "pgm: sample exceeds maxval");
            grid.pixels[k] = static_cast<std::uint8_t>(v);
        }
        reader.skip_separators();
        if (!reader.at_end())
            raise(ErrorCode::malformed_header, "pgm: trailing data after payload");
    }
    return grid;
}

Grid read_raw(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < 8)
        raise(ErrorCode::malformed_header, "raw: missing 8-byte dimension header");
    auto read_u32 = [&](std::size_t off) {
        return (static_cast<std::uint32_t>(bytes[off]) << 24) |
               (static_cast<std::uint32_t>(bytes[off + 1]) << 16) |
               (static_cast<std::uint32_t>(bytes[off + 2]) << 8) |
               static_cast<std::uint32_t>(bytes[off + 3]);
    };
    const std::int64_t width = read_u32(0);
    const std::int64_t height = read_u32(4);
    if (width < 1 || height < 1 || width * height > kMaxPixels)
        raise(ErrorCode::malformed_header, "raw: invalid dimensions");
    const auto expected = static_cast<std::size_t>(width * height);
    const auto payload = bytes.subspan(8);
    if (payload.size() < expected)
        raise(ErrorCode::truncated_payload,
              "raw: payload has " + std::to_string(payload.size()) + " of " +
                  std::to_string(expected) + " bytes");
    if (payload.size() > expected)
        raise(ErrorCode::malformed_header, "raw: trailing data after payload");
    Grid grid = Grid::make(width, height);
    std::copy(payload.begin(), payload.end(), grid.pixels.begin());
    return grid;
}

} // namespace

ImageFormat detect_format(std::span<const std::uint8_t> bytes) noexcept
{
    if (bytes.size() >= 2 && bytes[0] == 'P') {
        if (bytes[1] == '5')
            return ImageFormat::pgm_p5;
        if (bytes[1] == '2')
            return ImageFormat::pgm_p2;
    }
    return ImageFormat::raw;
}

Grid read_image(std::span<const std::uint8_t> bytes, ImageFormat format)
{
    switch (format) {
    case ImageFormat::pgm_p5:
        if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
            raise(ErrorCode::malformed_header, "pgm: missing P5 magic");
        return read_pgm(bytes, /*binary=*/true);
    case ImageFormat::pgm_p2:
        if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '2')
            raise(ErrorCode::malformed_header, "pgm: missing P2 magic");
        return read_pgm(bytes, /*binary=*/false);
    case ImageFormat::raw:
        return read_raw(bytes);
    }
    raise(ErrorCode::invalid_argument, "unknown image format");
}

Grid read_image(std::span<const std::uint8_t> bytes)
{
    return read_image(bytes, detect_format(bytes));
}

std::vector<std::uint8_t> write_image(const Grid& grid, ImageFormat format)
{
    if (grid.width < 1 || grid.height < 1 ||
        grid.pixels.size() != static_cast<std::size_t>(grid.width * grid.height))
        raise(ErrorCode::dimension_mismatch, "write_image: grid buffer does not match dimensions");

    std::vector<std::uint8_t> out;
    switch (format) {
    case ImageFormat::pgm_p5: {
        const std::string header = "P5\n" + std::to_string(grid.width) + " " +
                                   std::to_string(grid.height) + "\n255\n";
        out.assign(header.begin(), header.end());
        out.insert(out.end(), grid.pixels.begin(), grid.pixels.end());
        break;
    }
    case ImageFormat::pgm_p2: {
        std::string text = "P2\n" + std::to_string(grid.width) + " " +
                           std::to_string(grid.height) + "\n255\n";
        for (std::int64_t j = 0; j < grid.height; ++j) {
            for (std::int64_t i = 0; i < grid.width; ++i) {
                if (i > 0)
                    text.push_back(' ');
                text += std::to_string(grid.at(i, j));
            }
            text.push_back('\n');
        }
        out.assign(text.begin(), text.end());
        break;
    }
    case ImageFormat::raw: {
        out.reserve(8 + grid.pixels.size());
        auto push_u32 = [&](std::uint32_t v) {
            out.push_back(static_cast<std::uint8_t>(v >> 24));
            out.push_back(static_cast<std::uint8_t>(v >> 16));
            out.push_back(static_cast<std::uint8_t>(v >> 8));
            out.push_back(static_cast<std::uint8_t>(v));
        };
        push_u32(static_cast<std::uint32_t>(grid.width));
        push_u32(static_cast<std::uint32_t>(grid.height));
        out.insert(out.end(), grid.pixels.begin(), grid.pixels.end());
        break;
    }
    }
    return out;
}

} // namespace qcc
