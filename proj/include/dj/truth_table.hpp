#pragma once

#include <cstdint>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dj/bitstring.hpp"

namespace dj {

/// Raised on malformed or unreadable truth-table files.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Explicit indicator function f over {0,1}^n: entry x (ascending from 0)
/// holds f(x). Immutable in spirit; set() exists for constructors.
class TruthTable {
public:
    explicit TruthTable(unsigned width) : n_(width) {
        check_width(width);
        bits_.assign(std::size_t{1} << width, 0);
    }

    TruthTable(unsigned width, std::vector<std::uint8_t> bits) : n_(width), bits_(std::move(bits)) {
        check_width(width);
        if (bits_.size() != (std::size_t{1} << width))
            throw std::invalid_argument("truth table for width " + std::to_string(width) +
                                        " needs " + std::to_string(std::size_t{1} << width) +
                                        " entries, got " + std::to_string(bits_.size()));
        for (auto b : bits_)
            if (b > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
    }

    unsigned width() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }

    int operator()(std::uint64_t x) const { return bits_[x]; }

    void set(std::uint64_t x, int v) { bits_[x] = static_cast<std::uint8_t>(v ? 1 : 0); }

    std::uint64_t ones_count() const {
        return std::accumulate(bits_.begin(), bits_.end(), std::uint64_t{0});
    }

    bool is_constant() const { auto c = ones_count(); return c == 0 || c == size(); }
    bool is_balanced() const { return ones_count() == size() / 2; }

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    unsigned n_;
    std::vector<std::uint8_t> bits_;
};

inline void check_same_width(const TruthTable& a, const TruthTable& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("truth tables have different widths: " +
                                    std::to_string(a.width()) + " vs " + std::to_string(b.width()));
}

inline TruthTable operator~(const TruthTable& a) {
    TruthTable r(a.width());
    for (std::uint64_t x = 0; x < a.size(); ++x) r.set(x, 1 - a(x));
    return r;
}

inline TruthTable operator&(const TruthTable& a, const TruthTable& b) {
    check_same_width(a, b);
    TruthTable r(a.width());
    for (std::uint64_t x = 0; x < a.size(); ++x) r.set(x, a(x) & b(x));
    return r;
}

/// Pointwise max, the indicator of the set union.
inline TruthTable operator|(const TruthTable& a, const TruthTable& b) {
    check_same_width(a, b);
    TruthTable r(a.width());
    for (std::uint64_t x = 0; x < a.size(); ++x) r.set(x, a(x) | b(x));
    return r;
}

/// Pointwise f_a xor f_b, the indicator of the exclusive union.
inline TruthTable operator^(const TruthTable& a, const TruthTable& b) {
    check_same_width(a, b);
    TruthTable r(a.width());
    for (std::uint64_t x = 0; x < a.size(); ++x) r.set(x, a(x) ^ b(x));
    return r;
}

enum class BoolOp { And, Or, Xor, Not };

inline TruthTable combine(BoolOp op, const TruthTable& a, const TruthTable& b) {
    switch (op) {
        case BoolOp::And: return a & b;
        case BoolOp::Or: return a | b;
        case BoolOp::Xor: return a ^ b;
        case BoolOp::Not: throw std::invalid_argument("NOT takes a single operand");
    }
    throw std::invalid_argument("unknown boolean operation");
}

inline TruthTable combine(BoolOp op, const TruthTable& a) {
    if (op != BoolOp::Not) throw std::invalid_argument("binary operation needs two operands");
    return ~a;
}

// Truth-table text format, bit-exact:
//   line 1: n=<decimal>
//   line 2: exactly 2^n characters from {0,1}, position x holding f(x)
//   trailing newline, no other whitespace.

inline std::string to_text(const TruthTable& t) {
    std::string out = "n=" + std::to_string(t.width()) + "\n";
    out.reserve(out.size() + t.size() + 1);
    for (std::uint64_t x = 0; x < t.size(); ++x) out.push_back(t(x) ? '1' : '0');
    out.push_back('\n');
    return out;
}

inline TruthTable parse_truth_table(const std::string& text, const std::string& origin = "<string>") {
    auto fail = [&](const std::string& why) -> TruthTable {
        throw io_error(origin + ": " + why);
    };
    std::size_t eol = text.find('\n');
    if (eol == std::string::npos) return fail("missing header line");
    std::string header = text.substr(0, eol);
    if (header.rfind("n=", 0) != 0) return fail("header must be 'n=<decimal>'");
    unsigned n = 0;
    try {
        std::size_t used = 0;
        int parsed = std::stoi(header.substr(2), &used);
        if (used != header.size() - 2 || parsed < 1) return fail("bad width in header");
        n = static_cast<unsigned>(parsed);
    } catch (const std::exception&) {
        return fail("bad width in header");
    }
    if (n > kMaxWidth) return fail("width " + std::to_string(n) + " exceeds supported maximum");

    std::size_t body_begin = eol + 1;
    std::size_t body_end = text.find('\n', body_begin);
    if (body_end == std::string::npos) return fail("missing trailing newline");
    if (body_end + 1 != text.size()) return fail("unexpected content after bit line");

    std::uint64_t expect = std::uint64_t{1} << n;
    if (body_end - body_begin != expect)
        return fail("wrong bit count: expected " + std::to_string(expect) + ", got " +
                    std::to_string(body_end - body_begin));
    std::vector<std::uint8_t> bits(expect);
    for (std::uint64_t x = 0; x < expect; ++x) {
        char ch = text[body_begin + x];
        if (ch != '0' && ch != '1') return fail("characters outside {0,1} in bit line");
        bits[x] = static_cast<std::uint8_t>(ch - '0');
    }
    return TruthTable(n, std::move(bits));
}

inline TruthTable load_truth_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error(path + ": cannot open for reading");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_truth_table(text, path);
}

inline void save_truth_table(const TruthTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error(path + ": cannot open for writing");
    out << to_text(t);
    if (!out) throw io_error(path + ": write failed");
}

}  // namespace dj
