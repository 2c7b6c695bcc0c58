#include "qcc/keyfile.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>

namespace qcc {

namespace {

void emit_fraction(std::ostream& os, std::int64_t num, std::int64_t den)
{
    const std::uint64_t mag = num < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(num)
                                      : static_cast<std::uint64_t>(num);
    const auto g = static_cast<std::int64_t>(std::gcd(mag, static_cast<std::uint64_t>(den)));
    if (g > 1) {
        num /= g;
        den /= g;
    }
    os << num << '/' << den;
}

void emit_field_element(std::ostream& os, const FieldElement& x)
{
    emit_fraction(os, x.p, x.r);
    os << '+';
    emit_fraction(os, x.q, x.r);
    os << 't';
}

void emit_axis(std::ostream& os, char tag, const KeySpec& spec)
{
    os << tag << ":m=" << spec.field.m() << ";e=" << (spec.field.e() > 0 ? "+1" : "-1")
       << ";a=" << spec.seed.a << ";b=" << spec.seed.b << ";c=";
    emit_field_element(os, spec.window.c());
    os << ";d=";
    emit_field_element(os, spec.window.d());
    os << ";sml=" << spec.trial_order.str()
       << ";X=" << static_cast<char>(spec.direction) << ";eps=";
    emit_field_element(os, spec.window.epsilon());
    os << '\n';
}

class Parser {
public:
    explicit Parser(std::string_view text)
        : text_(text)
    {
    }

    CipherKey parse()
    {
        expect("variant=");
        Variant variant;
        if (try_consume("main"))
            variant = Variant::main;
        else if (try_consume("mod1"))
            variant = Variant::mod1;
        else if (try_consume("mod2"))
            variant = Variant::mod2;
        else
            fail("variant must be main, mod1 or mod2");
        expect(";I=");
        const std::int64_t iterations = parse_int();
        expect(";palette=");
        bool palette;
        if (try_consume("0"))
            palette = false;
        else if (try_consume("1"))
            palette = true;
        else
            fail("palette must be 0 or 1");
        end_of_line();

        KeySpec axis_x = parse_axis('X');
        KeySpec axis_y = parse_axis('Y');
        std::optional<KeySpec> value_axis;
        if (palette) {
            if (at_end())
                fail("expected value axis line V: (palette=1)");
            value_axis = parse_axis('V');
        }
        if (!at_end())
            fail("expected end of file");

        if (iterations < 1)
            raise(ErrorCode::invalid_key, "iterations must be >= 1");
        CipherKey key{std::move(axis_x), std::move(axis_y), std::move(value_axis), variant,
                      iterations};
        validate(key);
        return key;
    }

private:
    [[noreturn]] void fail(const std::string& expected) const
    {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        raise(ErrorCode::syntax_error,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                  expected);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    bool try_consume(std::string_view lit)
    {
        if (text_.substr(pos_, lit.size()) != lit)
            return false;
        pos_ += lit.size();
        return true;
    }

    void expect(std::string_view lit)
    {
        if (!try_consume(lit))
            fail("expected \"" + std::string(lit) + "\"");
    }

    void end_of_line()
    {
        if (peek() == '\r')
            fail("carriage return not allowed; key files use LF line endings");
        if (at_end())
            return;
        expect("\n");
    }

    std::int64_t parse_int()
    {
        const std::size_t start = pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        if (peek() < '0' || peek() > '9') {
            pos_ = start;
            fail("expected an integer");
        }
        std::uint64_t acc = 0;
        while (peek() >= '0' && peek() <= '9') {
            acc = acc * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (acc > (std::uint64_t{1} << 63)) {
                pos_ = start;
                fail("integer out of the 64-bit range");
            }
            ++pos_;
        }
        if (!negative && acc > static_cast<std::uint64_t>(INT64_MAX)) {
            pos_ = start;
            fail("integer out of the 64-bit range");
        }
        return negative ? -static_cast<std::int64_t>(acc) : static_cast<std::int64_t>(acc);
    }

    // <int>/<posint>
    std::pair<std::int64_t, std::int64_t> parse_fraction()
    {
        const std::int64_t num = parse_int();
        expect("/");
        const std::size_t den_pos = pos_;
        const std::int64_t den = parse_int();
        if (den <= 0) {
            pos_ = den_pos;
            fail("fraction denominator must be positive");
        }
        return {num, den};
    }

    // <frac>+<frac>t
    FieldElement parse_field_element()
    {
        const auto [pn, pd] = parse_fraction();
        expect("+");
        const auto [qn, qd] = parse_fraction();
        expect("t");
        return FieldElement::from_fractions(pn, pd, qn, qd);
    }

    KeySpec parse_axis(char tag)
    {
        expect(std::string(1, tag) + ":");
        expect("m=");
        const std::int64_t m = parse_int();
        expect(";e=");
        int e;
        if (try_consume("+1"))
            e = 1;
        else if (try_consume("-1"))
            e = -1;
        else
            fail("e must be +1 or -1");
        expect(";a=");
        const std::int64_t a = parse_int();
        expect(";b=");
        const std::int64_t b = parse_int();
        expect(";c=");
        const FieldElement c = parse_field_element();
        expect(";d=");
        const FieldElement d = parse_field_element();
        expect(";sml=");
        std::string order;
        while (peek() == 's' || peek() == 'm' || peek() == 'l')
            order.push_back(text_[pos_++]);
        expect(";X=");
        Direction direction;
        if (try_consume("+"))
            direction = Direction::plus;
        else if (try_consume("-"))
            direction = Direction::minus;
        else
            fail("X must be + or -");
        expect(";eps=");
        const FieldElement eps = parse_field_element();
        end_of_line();

        const QuadraticField field(m, e);
        const Window window(c, d, eps, field);
        return KeySpec{field, RingElement{a, b}, window, TrialOrder::parse(order), direction};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string serialize_key(const CipherKey& key)
{
    std::ostringstream os;
    os << "variant=" << variant_name(key.variant) << ";I=" << key.iterations
       << ";palette=" << (key.value_axis ? 1 : 0) << '\n';
    emit_axis(os, 'X', key.axis_x);
    emit_axis(os, 'Y', key.axis_y);
    if (key.value_axis)
        emit_axis(os, 'V', *key.value_axis);
    return os.str();
}

CipherKey parse_key(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace qcc
