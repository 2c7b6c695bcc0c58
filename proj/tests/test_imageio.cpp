#include <random>
#include <string>

#include "doctest.h"
#include "qcc/imageio.hpp"

using namespace qcc;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s)
{
    return {s.begin(), s.end()};
}

Grid random_grid(std::mt19937_64& rng, std::int64_t w, std::int64_t h)
{
    Grid g = Grid::make(w, h);
    for (auto& p : g.pixels)
        p = static_cast<std::uint8_t>(rng());
    return g;
}

} // namespace

TEST_CASE("p5 header example")
{
    const auto data = bytes_of("P5\n2 2\n255\n\x01\x02\x03\x04");
    const Grid g = read_image(data);
    CHECK(g.width == 2);
    CHECK(g.height == 2);
    CHECK(g.pixels == std::vector<std::uint8_t>{1, 2, 3, 4});
}

TEST_CASE("p2 with comments and irregular whitespace")
{
    const auto data = bytes_of("P2\n# a comment\n3  1\n255\n  0 128\t255\n");
    const Grid g = read_image(data);
    CHECK(g.width == 3);
    CHECK(g.pixels == std::vector<std::uint8_t>{0, 128, 255});
}

TEST_CASE("format detection")
{
    CHECK(detect_format(bytes_of("P5\n1 1\n255\n ")) == ImageFormat::pgm_p5);
    CHECK(detect_format(bytes_of("P2\n1 1\n255\n0")) == ImageFormat::pgm_p2);
    CHECK(detect_format(bytes_of("\x00\x00\x00\x01\x00\x00\x00\x01x")) == ImageFormat::raw);
}

TEST_CASE("round trips are byte exact")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        const Grid g = random_grid(rng, 1 + static_cast<std::int64_t>(rng() % 40),
                                   1 + static_cast<std::int64_t>(rng() % 40));
        for (const ImageFormat fmt :
             {ImageFormat::pgm_p5, ImageFormat::pgm_p2, ImageFormat::raw}) {
            const auto bytes = write_image(g, fmt);
            CHECK(read_image(bytes, fmt) == g);
            CHECK(read_image(bytes) == g); // autodetect
            CHECK(write_image(read_image(bytes), fmt) == bytes);
        }
    }
}

TEST_CASE("a 512x512 grid round trips")
{
    std::mt19937_64 rng(22);
    const Grid g = random_grid(rng, 512, 512);
    CHECK(read_image(write_image(g, ImageFormat::pgm_p5)) == g);
}

TEST_CASE("error cases")
{
    auto code_of = [](const std::vector<std::uint8_t>& data) {
        try {
            read_image(data);
            return ErrorCode::io_error; // unreachable marker
        } catch (const Error& e) {
            return e.code();
        }
    };

    CHECK(code_of(bytes_of("P5\n2 2\n255\n\x01\x02")) == ErrorCode::truncated_payload);
    CHECK(code_of(bytes_of("P5\n2 2\n255\n\x01\x02\x03\x04\x05")) == ErrorCode::malformed_header);
    CHECK(code_of(bytes_of("P5\n2 2\n65535\n...")) == ErrorCode::unsupported_maxval);
    CHECK(code_of(bytes_of("P5\nx 2\n255\n..")) == ErrorCode::malformed_header);
    CHECK(code_of(bytes_of("P2\n2 1\n255\n7")) == ErrorCode::truncated_payload);
    CHECK(code_of(bytes_of("P2\n1 1\n255\n300")) == ErrorCode::malformed_header);
    CHECK(code_of(bytes_of("raw?")) == ErrorCode::malformed_header);

    // 2x2 raw image with only 2 of 4 payload bytes.
    const std::vector<std::uint8_t> short_raw{0, 0, 0, 2, 0, 0, 0, 2, 'x', 'y'};
    CHECK(code_of(short_raw) == ErrorCode::truncated_payload);

    // Zero dimension in a raw header.
    const std::vector<std::uint8_t> zero{0, 0, 0, 0, 0, 0, 0, 1};
    CHECK(code_of(zero) == ErrorCode::malformed_header);
}
