// Command-line front end for the quasicrystal permutation cipher.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"

#include "qcc/bench.hpp"
#include "qcc/cipher.hpp"
#include "qcc/imageio.hpp"
#include "qcc/keyfile.hpp"
#include "qcc/keygen.hpp"

namespace fs = std::filesystem;
using namespace qcc;

namespace {

int exit_code_for(ErrorCode code)
{
    return 10 + static_cast<int>(code);
}

std::vector<std::uint8_t> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(ErrorCode::io_error, "cannot open " + path + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        raise(ErrorCode::io_error, "read failure on " + path);
    return bytes;
}

// Writes to a temp file in the destination directory, then renames, so a
// failed run never leaves a partial output behind.
void write_file_atomic(const std::string& path, std::span<const std::uint8_t> bytes)
{
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            raise(ErrorCode::io_error, "cannot open " + tmp.string() + " for writing");
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out)
            raise(ErrorCode::io_error, "write failure on " + tmp.string());
    }
    std::error_code rename_error;
    fs::rename(tmp, target, rename_error);
    if (rename_error) {
        fs::remove(tmp);
        raise(ErrorCode::io_error, "cannot rename " + tmp.string() + " to " + path);
    }
}

void write_file_atomic(const std::string& path, const std::string& text)
{
    write_file_atomic(
        path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::uint64_t seed_from_hex(const std::string& hex)
{
    if (hex.empty())
        raise(ErrorCode::invalid_argument, "--entropy-seed must not be empty");
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a over the nibbles
    for (char c : hex) {
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = 10 + (c - 'a');
        else if (c >= 'A' && c <= 'F')
            v = 10 + (c - 'A');
        else
            raise(ErrorCode::invalid_argument, "--entropy-seed must be hexadecimal");
        h = (h ^ static_cast<std::uint64_t>(v)) * 0x100000001b3ULL;
    }
    return h;
}

CipherKey load_key(const std::string& path)
{
    const auto bytes = read_file(path);
    return parse_key(
        std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

Variant variant_from_name(const std::string& name)
{
    if (name == "main")
        return Variant::main;
    if (name == "mod1")
        return Variant::mod1;
    if (name == "mod2")
        return Variant::mod2;
    raise(ErrorCode::invalid_argument, "variant must be main, mod1 or mod2");
}

const KeySpec& pick_axis(const CipherKey& key, const std::string& axis)
{
    if (axis == "x")
        return key.axis_x;
    if (axis == "y")
        return key.axis_y;
    if (axis == "v") {
        if (!key.value_axis)
            raise(ErrorCode::invalid_key, "key has no value axis");
        return *key.value_axis;
    }
    raise(ErrorCode::invalid_argument, "--axis must be x, y or v");
}

struct CodecOptions {
    std::string key_path;
    std::string input;
    std::string output;
    std::string variant_override;
    std::int64_t iterations_override = 0;
    bool palette = false;
    bool raw = false;
};

void add_codec_options(CLI::App* cmd, CodecOptions& opt)
{
    cmd->add_option("--key", opt.key_path, "Key file")->required();
    cmd->add_option("input", opt.input, "Input file")->required();
    cmd->add_option("output", opt.output, "Output file")->required();
    cmd->add_option("--variant", opt.variant_override, "Override the key's variant");
    cmd->add_option("--iterations", opt.iterations_override, "Override the key's iterations");
    cmd->add_flag("--palette", opt.palette, "Require the key's palette layer");
    cmd->add_flag("--raw", opt.raw, "Treat input and output as headered raw streams");
}

void run_codec(const CodecOptions& opt, bool encrypting)
{
    CipherKey key = load_key(opt.key_path);
    if (!opt.variant_override.empty())
        key.variant = variant_from_name(opt.variant_override);
    if (opt.iterations_override > 0)
        key.iterations = opt.iterations_override;
    if (opt.palette && !key.value_axis)
        raise(ErrorCode::invalid_key, "--palette requires a key with a value axis");

    const auto bytes = read_file(opt.input);
    const ImageFormat format = opt.raw ? ImageFormat::raw : detect_format(bytes);
    const Grid in = read_image(bytes, format);
    const Grid out = encrypting ? encrypt(in, key) : decrypt(in, key);
    write_file_atomic(opt.output, write_image(out, format));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"aperiodic-cipher: quasicrystal permutation cipher"};
    app.require_subcommand(1);

    std::string kg_out, kg_variant = "main", kg_entropy;
    std::int64_t kg_iterations = 1;
    bool kg_palette = false;
    auto* kg = app.add_subcommand("keygen", "Generate a key file");
    kg->add_option("output", kg_out, "Key file to write")->required();
    kg->add_option("--variant", kg_variant, "Cipher variant (main|mod1|mod2)");
    kg->add_option("--iterations", kg_iterations, "Number of iterations I");
    kg->add_flag("--palette", kg_palette, "Add a value axis for the pixel-value permutation");
    kg->add_option("--entropy-seed", kg_entropy, "Hex seed for reproducible key generation");

    CodecOptions enc, dec;
    auto* ec = app.add_subcommand("encrypt", "Encrypt an image or raw stream");
    add_codec_options(ec, enc);
    auto* dc = app.add_subcommand("decrypt", "Decrypt an image or raw stream");
    add_codec_options(dc, dec);

    std::string pt_key, pt_axis = "x";
    std::int64_t pt_n = 0;
    auto* pt = app.add_subcommand("points", "Dump generated quasicrystal points");
    pt->add_option("--key", pt_key, "Key file")->required();
    pt->add_option("-n", pt_n, "Number of points")->required();
    pt->add_option("--axis", pt_axis, "Axis to inspect (x|y|v)");

    std::string gp_key, gp_axis = "x";
    std::int64_t gp_n = 2;
    auto* gp = app.add_subcommand("gaps", "Print the gap table of an axis");
    gp->add_option("--key", gp_key, "Key file")->required();
    gp->add_option("-n", gp_n, "Intended generation length (sizes the discovery bound)");
    gp->add_option("--axis", gp_axis, "Axis to inspect (x|y|v)");

    std::string in_key, in_axis = "x";
    std::int64_t in_n = 0;
    auto* is = app.add_subcommand("inspect", "Dump the derived permutation of an axis");
    is->add_option("--key", in_key, "Key file")->required();
    is->add_option("-n", in_n, "Permutation length")->required();
    is->add_option("--axis", in_axis, "Axis to inspect (x|y|v)");

    std::string bn_image, bn_key;
    auto* bn = app.add_subcommand("bench", "Time each variant on an image");
    bn->add_option("--image", bn_image, "Image to encrypt")->required();
    bn->add_option("--key", bn_key, "Key file (default: a fixed built-in key)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (kg->parsed()) {
            std::uint64_t seed;
            if (!kg_entropy.empty()) {
                seed = seed_from_hex(kg_entropy);
            } else {
                std::random_device rd;
                seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
            }
            SeededEntropy entropy(seed);
            KeygenOptions options;
            options.variant = variant_from_name(kg_variant);
            options.iterations = kg_iterations;
            options.palette = kg_palette;
            write_file_atomic(kg_out, serialize_key(keygen(entropy, options)));
        } else if (ec->parsed()) {
            run_codec(enc, /*encrypting=*/true);
        } else if (dc->parsed()) {
            run_codec(dec, /*encrypting=*/false);
        } else if (pt->parsed()) {
            if (pt_n < 1)
                raise(ErrorCode::invalid_argument, "-n must be >= 1");
            const CipherKey key = load_key(pt_key);
            const KeySpec& spec = pick_axis(key, pt_axis);
            std::cout << format_points(generate(spec.generator(), pt_n));
        } else if (gp->parsed()) {
            const CipherKey key = load_key(gp_key);
            const KeySpec& spec = pick_axis(key, gp_axis);
            const GapTable gaps =
                gap_table_for(spec.field, spec.window, std::max<std::int64_t>(gp_n, 2));
            std::cout << "s\t" << gaps.d1.a << '\t' << gaps.d1.b << '\n'
                      << "m\t" << gaps.d2.a << '\t' << gaps.d2.b << '\n'
                      << "l\t" << gaps.d3.a << '\t' << gaps.d3.b << '\n';
        } else if (is->parsed()) {
            if (in_n < 1)
                raise(ErrorCode::invalid_argument, "-n must be >= 1");
            const CipherKey key = load_key(in_key);
            const KeySpec& spec = pick_axis(key, in_axis);
            std::cout << format_permutation(axis_permutation(spec, in_n));
        } else if (bn->parsed()) {
            const auto bytes = read_file(bn_image);
            const Grid grid = read_image(bytes);
            CipherKey key = [&] {
                if (!bn_key.empty())
                    return load_key(bn_key);
                SeededEntropy entropy(0xbe9c4a11ULL);
                return keygen(entropy);
            }();
            std::cout << format_bench(run_bench(grid, key));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 70;
    }
    return 0;
}
