#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "dj/bitstring.hpp"
#include "dj/rng.hpp"
#include "dj/truth_table.hpp"

namespace dj {

inline void check_bit(int c) {
    if (c != 0 && c != 1)
        throw std::invalid_argument("bit constant must be 0 or 1, got " + std::to_string(c));
}

/// Constant indicator: f(x) = c everywhere (the empty or saturated layer).
inline TruthTable make_constant(unsigned n, int c) {
    check_width(n);
    check_bit(c);
    TruthTable t(n);
    if (c)
        for (std::uint64_t x = 0; x < t.size(); ++x) t.set(x, 1);
    return t;
}

/// Binary periodic indicator: f(x) = c xor x_m, period 2^{m+1} over ascending x.
/// Note c is the literal xor constant; the layer of strings whose bit m equals b
/// is obtained with c = 1 xor b.
inline TruthTable make_binary_periodic(unsigned n, unsigned m, int c) {
    check_width(n);
    check_bit(c);
    if (m >= n)
        throw std::out_of_range("bit address " + std::to_string(m) + " out of range for width " +
                                std::to_string(n));
    TruthTable t(n);
    for (std::uint64_t x = 0; x < t.size(); ++x)
        t.set(x, (c ^ static_cast<int>((x >> m) & 1)) & 1);
    return t;
}

/// Affine indicator f(x) = k.x xor c, the xor-combination of the binary
/// periodic tables selected by the set bits of k.
inline TruthTable make_monochromatic(unsigned n, const BitString& k, int c) {
    check_width(n);
    check_bit(c);
    if (k.width() != n)
        throw std::invalid_argument("selector width " + std::to_string(k.width()) +
                                    " does not match table width " + std::to_string(n));
    TruthTable t(n);
    for (std::uint64_t x = 0; x < t.size(); ++x) t.set(x, dot_raw(k.value(), x) ^ c);
    return t;
}

inline TruthTable make_monochromatic(unsigned n, std::uint64_t k, int c) {
    return make_monochromatic(n, BitString(n, k), c);
}

/// Exactly 2^{n-1} ones placed by a seeded Fisher-Yates shuffle of [0, 2^n-1];
/// the first half of the shuffled domain becomes the f=1 part of the partition.
/// Same seed, same table.
inline TruthTable make_random_balanced(unsigned n, std::uint64_t seed) {
    check_width(n);
    std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::uint32_t> perm(size);
    std::iota(perm.begin(), perm.end(), 0u);
    SplitMix64 rng(seed);
    for (std::uint64_t i = size - 1; i > 0; --i) {
        std::uint64_t j = rng.next_below(i + 1);
        std::swap(perm[i], perm[j]);
    }
    TruthTable t(n);
    for (std::uint64_t i = 0; i < size / 2; ++i) t.set(perm[i], 1);
    return t;
}

/// Layer of the perfect-squares language at width n: constant 1 when n is a
/// perfect square, constant 0 otherwise.
inline TruthTable perfect_square_layer(unsigned n) {
    check_width(n);
    unsigned r = 1;
    while (r * r < n) ++r;
    return make_constant(n, r * r == n ? 1 : 0);
}

enum class OracleKind {
    Constant,
    BinaryPeriodic,
    Monochromatic,
    RandomBalanced,
    FromFile,
    Combine,
    PerfectSquareLayer,
};

/// Symbolic recipe for a truth table. The table itself is built on demand;
/// the recipe sticks around for reports and figure headers.
struct OracleSpec {
    OracleKind kind = OracleKind::Constant;
    unsigned n = 1;
    int c = 0;                // Constant, BinaryPeriodic, Monochromatic
    unsigned m = 0;           // BinaryPeriodic
    std::uint64_t k = 0;      // Monochromatic
    std::uint64_t seed = 0;   // RandomBalanced
    std::string path;         // FromFile
    BoolOp op = BoolOp::Xor;  // Combine
    std::shared_ptr<const OracleSpec> left, right;  // Combine operands (right empty for NOT)

    static OracleSpec constant(unsigned n, int c) {
        check_width(n);
        OracleSpec s;
        s.kind = OracleKind::Constant;
        s.n = n;
        s.c = c;
        return s;
    }
    static OracleSpec binary_periodic(unsigned n, unsigned m, int c) {
        check_width(n);
        if (m >= n) throw std::out_of_range("bit address out of range");
        OracleSpec s = constant(n, c);
        s.kind = OracleKind::BinaryPeriodic;
        s.m = m;
        return s;
    }
    static OracleSpec monochromatic(unsigned n, std::uint64_t k, int c) {
        OracleSpec s = constant(n, c);
        s.kind = OracleKind::Monochromatic;
        s.k = BitString(n, k).value();  // validates the selector width
        return s;
    }
    static OracleSpec random_balanced(unsigned n, std::uint64_t seed) {
        OracleSpec s = constant(n, 0);
        s.kind = OracleKind::RandomBalanced;
        s.seed = seed;
        return s;
    }
    static OracleSpec from_file(std::string path, unsigned n) {
        OracleSpec s = constant(n, 0);
        s.kind = OracleKind::FromFile;
        s.path = std::move(path);
        return s;
    }
    static OracleSpec perfect_square(unsigned n) {
        OracleSpec s = constant(n, 0);
        s.kind = OracleKind::PerfectSquareLayer;
        return s;
    }
    static OracleSpec combined(BoolOp op, OracleSpec a, OracleSpec b) {
        if (a.n != b.n) throw std::invalid_argument("combined operands must share a width");
        OracleSpec s = constant(a.n, 0);
        s.kind = OracleKind::Combine;
        s.op = op;
        s.left = std::make_shared<OracleSpec>(std::move(a));
        s.right = std::make_shared<OracleSpec>(std::move(b));
        return s;
    }

    /// Sampling period of a binary periodic table, T = 2^{m+1}.
    std::uint64_t period() const {
        if (kind != OracleKind::BinaryPeriodic)
            throw std::logic_error("period is defined for binary periodic oracles only");
        return std::uint64_t{1} << (m + 1);
    }

    TruthTable build() const {
        switch (kind) {
            case OracleKind::Constant: return make_constant(n, c);
            case OracleKind::BinaryPeriodic: return make_binary_periodic(n, m, c);
            case OracleKind::Monochromatic: return make_monochromatic(n, k, c);
            case OracleKind::RandomBalanced: return make_random_balanced(n, seed);
            case OracleKind::FromFile: return load_truth_table(path);
            case OracleKind::PerfectSquareLayer: return perfect_square_layer(n);
            case OracleKind::Combine: {
                TruthTable a = left->build();
                if (op == BoolOp::Not) return ~a;
                return combine(op, a, right->build());
            }
        }
        throw std::logic_error("unknown oracle kind");
    }

    /// One-line description used in figure-file headers.
    std::string describe() const {
        switch (kind) {
            case OracleKind::Constant:
                return "oracle=constant c=" + std::to_string(c);
            case OracleKind::BinaryPeriodic:
                return "oracle=binary-periodic m=" + std::to_string(m) + " c=" + std::to_string(c);
            case OracleKind::Monochromatic:
                return "oracle=monochromatic k=" + std::to_string(k) + " c=" + std::to_string(c);
            case OracleKind::RandomBalanced:
                return "oracle=random-balanced seed=" + std::to_string(seed);
            case OracleKind::FromFile:
                return "oracle=file path=" + path;
            case OracleKind::PerfectSquareLayer:
                return "oracle=perfect-square-layer";
            case OracleKind::Combine: {
                const char* name = op == BoolOp::And   ? "and"
                                   : op == BoolOp::Or  ? "or"
                                   : op == BoolOp::Xor ? "xor"
                                                       : "not";
                std::string out = std::string("oracle=combine op=") + name + " [" + left->describe() + "]";
                if (right) out += " [" + right->describe() + "]";
                return out;
            }
        }
        return "oracle=unknown";
    }
};

}  // namespace dj
