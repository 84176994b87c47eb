#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dj/bigint.hpp"
#include "dj/bitstring.hpp"
#include "dj/format.hpp"
#include "dj/oracle.hpp"
#include "dj/simulator.hpp"
#include "dj/truth_table.hpp"

namespace dj {

/// Default cutoff below which a spectral line counts as dark. Three orders
/// above the engine tolerance to absorb accumulated rounding at width 24.
inline constexpr double kDarkLineEps = 1e-9;

enum class Verdict { Constant, Monochromatic, BalancedNonAffine, Unbalanced };

/// The affine decomposition f(x) = k.x xor c.
struct AffineForm {
    BitString k;
    int c = 0;
};

struct Classification {
    Verdict verdict = Verdict::Unbalanced;
    std::optional<AffineForm> affine;  // set for Constant (k = 0) and Monochromatic
    std::uint64_t ones_count = 0;
    std::vector<std::pair<std::uint64_t, double>> lines;  // nonzero (z, probability), ascending
};

/// Returns (k, c) iff f(x) = k.x xor c for all x. The spectrum points at the
/// candidate (the bright line carries k, its sign carries c); an exact table
/// comparison confirms it, so near-affine tables cannot slip through on
/// floating-point noise.
inline std::optional<AffineForm> detect_monochromatic(const TruthTable& f) {
    Spectrum s = amplitudes_fwht(f);
    for (std::uint64_t z = 0; z < s.size(); ++z) {
        double a = s.amplitudes[z];
        if (std::fabs(std::fabs(a) - 1.0) > 1e-9) continue;
        AffineForm form{BitString(f.width(), z), a > 0.0 ? 0 : 1};
        if (f == make_monochromatic(f.width(), form.k, form.c)) return form;
        return std::nullopt;  // a full-height line admits no other candidate
    }
    return std::nullopt;
}

/// Sorts f into the promise taxonomy. Unbalanced is a legitimate verdict for
/// arbitrary user tables, not an error: the promise is an assumption about
/// inputs, not a property of this machine.
inline Classification classify(const TruthTable& f) {
    Classification out;
    out.ones_count = f.ones_count();

    Spectrum s = amplitudes_fwht(f);
    for (std::uint64_t z = 0; z < s.size(); ++z)
        if (std::fabs(s.amplitudes[z]) >= kDarkLineEps)
            out.lines.emplace_back(z, s.probability(z));

    if (out.ones_count == 0 || out.ones_count == f.size()) {
        out.verdict = Verdict::Constant;
        out.affine = AffineForm{BitString(f.width(), 0), out.ones_count == 0 ? 0 : 1};
    } else if (out.ones_count == f.size() / 2) {
        if (auto form = detect_monochromatic(f)) {
            out.verdict = Verdict::Monochromatic;
            out.affine = form;
        } else {
            out.verdict = Verdict::BalancedNonAffine;
        }
    } else {
        out.verdict = Verdict::Unbalanced;
    }
    return out;
}

/// Ascending list of extinguished outcomes, |psi(z)| < eps.
inline std::vector<std::uint64_t> dark_lines(const Spectrum& s, double eps = kDarkLineEps) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t z = 0; z < s.size(); ++z)
        if (std::fabs(s.amplitudes[z]) < eps) out.push_back(z);
    return out;
}

/// Raised when a counting result would be too large to render.
struct size_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Number of balanced indicator functions on {0,1}^n: the central binomial
/// coefficient C(2^n, 2^{n-1}), computed exactly from the prime factorization
/// of the factorials. Widths whose result would render beyond 1 MiB of
/// decimal digits are refused up front.
inline BigUInt count_balanced(unsigned n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("count_balanced supports widths 1..64, got " +
                                    std::to_string(n));
    double big_n = std::ldexp(1.0, static_cast<int>(n));
    double big_h = std::ldexp(1.0, static_cast<int>(n) - 1);
    double digits =
        (std::lgamma(big_n + 1.0) - 2.0 * std::lgamma(big_h + 1.0)) / std::log(10.0) + 1.0;
    if (digits > static_cast<double>(std::size_t{1} << 20))
        throw size_cap_error("count_balanced(" + std::to_string(n) + ") needs about " +
                             std::to_string(static_cast<std::uint64_t>(digits)) +
                             " decimal digits; the 1 MiB rendering cap is exceeded");

    const std::uint64_t domain = std::uint64_t{1} << n;
    const std::uint64_t half = domain / 2;

    std::vector<BigUInt> factors;
    std::uint64_t chunk = 1;
    auto push_power = [&](std::uint64_t p, unsigned e) {
        for (unsigned i = 0; i < e; ++i) {
            if (chunk > std::numeric_limits<std::uint64_t>::max() / p) {
                factors.emplace_back(chunk);
                chunk = p;
            } else {
                chunk *= p;
            }
        }
    };

    std::vector<std::uint8_t> composite(domain + 1, 0);
    for (std::uint64_t p = 2; p <= domain; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= domain; q += p) composite[q] = 1;
        unsigned e = 0;
        for (std::uint64_t pk = p;;) {
            e += static_cast<unsigned>(domain / pk - 2 * (half / pk));
            if (pk > domain / p) break;
            pk *= p;
        }
        if (e) push_power(p, e);
    }
    factors.emplace_back(chunk);

    while (factors.size() > 1) {
        std::vector<BigUInt> next;
        next.reserve(factors.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2)
            next.push_back(factors[i] * factors[i + 1]);
        if (factors.size() % 2) next.push_back(factors.back());
        factors = std::move(next);
    }
    return factors.front();
}

/// The balanced monochromatic languages at width n: 2^n - 1 (nonzero k at
/// fixed c). The constant cases are excluded from this count; tallying (k, c)
/// pairs with k != 0 instead would give twice this number.
inline std::uint64_t count_monochromatic(unsigned n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("count_monochromatic supports widths 1..64, got " +
                                    std::to_string(n));
    if (n == 64) return std::numeric_limits<std::uint64_t>::max();
    return (std::uint64_t{1} << n) - 1;
}

/// Stable text report: verdict, ones count, then every nonzero spectral line.
inline std::string classification_report(const Classification& c) {
    std::string out = "verdict=";
    switch (c.verdict) {
        case Verdict::Constant:
            out += "Constant(" + std::to_string(c.affine->c) + ")";
            break;
        case Verdict::Monochromatic:
            out += "Monochromatic k=" + std::to_string(c.affine->k.value()) +
                   " c=" + std::to_string(c.affine->c);
            break;
        case Verdict::BalancedNonAffine:
            out += "BalancedNonAffine";
            break;
        case Verdict::Unbalanced:
            out += "Unbalanced";
            break;
    }
    out += "\nones_count=" + std::to_string(c.ones_count) + "\n";
    for (const auto& [z, p] : c.lines)
        out += "line z=" + std::to_string(z) + " p=" + format_double(p) + "\n";
    return out;
}

}  // namespace dj
