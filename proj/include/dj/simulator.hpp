#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dj/rng.hpp"
#include "dj/spectrum.hpp"
#include "dj/truth_table.hpp"

namespace dj {

/// Engine agreement / normalization tolerance. Sums of at most 2^24 terms of
/// magnitude 2^-n in double precision stay far below this.
inline constexpr double kEngineTol = 1e-12;

inline constexpr unsigned kMaxDirectWidth = 14;       // O(4^n) engine
inline constexpr unsigned kMaxStatevectorWidth = 12;  // 2^{n+1} reals

/// Reference engine: psi(z) = 2^-n sum_x (-1)^{f(x) + x.z}, evaluated by the
/// double summation with integer accumulation per z, so cancellation is exact.
inline Spectrum amplitudes_direct(const TruthTable& f) {
    if (f.width() > kMaxDirectWidth)
        throw std::invalid_argument("direct engine is quadratic; width " +
                                    std::to_string(f.width()) + " exceeds " +
                                    std::to_string(kMaxDirectWidth));
    std::uint64_t size = f.size();
    double scale = std::ldexp(1.0, -static_cast<int>(f.width()));
    Spectrum s{f.width(), std::vector<double>(size)};
    for (std::uint64_t z = 0; z < size; ++z) {
        std::int64_t acc = 0;
        for (std::uint64_t x = 0; x < size; ++x)
            acc += ((f(x) ^ dot_raw(x, z)) & 1) ? -1 : 1;
        s.amplitudes[z] = static_cast<double>(acc) * scale;
    }
    return s;
}

/// Same spectrum as a Walsh-Hadamard transform of the sign vector (-1)^{f(x)},
/// O(n 2^n) via the in-place butterfly, final scale 2^-n. Every intermediate
/// value is an integer below 2^53, so the result matches the direct engine
/// bit for bit.
inline Spectrum amplitudes_fwht(const TruthTable& f) {
    std::uint64_t size = f.size();
    Spectrum s{f.width(), std::vector<double>(size)};
    for (std::uint64_t x = 0; x < size; ++x) s.amplitudes[x] = f(x) ? -1.0 : 1.0;
    for (std::uint64_t len = 1; len < size; len <<= 1) {
        for (std::uint64_t base = 0; base < size; base += 2 * len) {
            for (std::uint64_t i = base; i < base + len; ++i) {
                double a = s.amplitudes[i];
                double b = s.amplitudes[i + len];
                s.amplitudes[i] = a + b;
                s.amplitudes[i + len] = a - b;
            }
        }
    }
    double scale = std::ldexp(1.0, -static_cast<int>(f.width()));
    for (auto& a : s.amplitudes) a *= scale;
    return s;
}

/// Full (n+1)-qubit run. Basis label convention: bit 0 is the answer qubit,
/// bit j+1 carries query bit x_j, which makes the answer-qubit factorization
/// check a stride-2 scan.
struct StatevectorRun {
    Spectrum spectrum;          // top-register amplitudes psi_out
    std::vector<double> state;  // final 2^{n+1} real amplitudes
    double oracle_factor_error = 0.0;  // max |state[x,0] + state[x,1]| after the oracle
    double final_factor_error = 0.0;   // same check after the closing Hadamards
};

namespace detail {

inline void hadamard_on_qubit(std::vector<double>& amps, unsigned q) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::uint64_t half = std::uint64_t{1} << q;
    const std::uint64_t stride = half << 1;
    for (std::uint64_t base = 0; base < amps.size(); base += stride) {
        for (std::uint64_t i = base; i < base + half; ++i) {
            double a = amps[i];
            double b = amps[i + half];
            amps[i] = (a + b) * inv_sqrt2;
            amps[i + half] = (a - b) * inv_sqrt2;
        }
    }
}

inline void check_unit_norm(const std::vector<double>& amps, const char* where) {
    double total = 0.0;
    for (double a : amps) total += a * a;
    if (std::fabs(total - 1.0) > kEngineTol)
        throw std::logic_error(std::string("statevector norm drifted after ") + where);
}

inline double answer_factor_error(const std::vector<double>& amps) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); i += 2)
        worst = std::max(worst, std::fabs(amps[i] + amps[i + 1]));
    return worst;
}

}  // namespace detail

/// Executes the circuit gate by gate: prepare |0...0>|1>, Hadamard everything,
/// apply the oracle as the basis permutation |x>|y> -> |x>|y xor f(x)>, then
/// Hadamard the query register only. Returns the top-register spectrum and
/// verifies the answer qubit stayed factored out as (|0> - |1>)/sqrt(2).
inline StatevectorRun statevector_run(const TruthTable& f) {
    unsigned n = f.width();
    if (n > kMaxStatevectorWidth)
        throw std::invalid_argument("statevector engine holds 2^{n+1} reals; width " +
                                    std::to_string(n) + " exceeds " +
                                    std::to_string(kMaxStatevectorWidth));

    std::vector<double> amps(std::uint64_t{1} << (n + 1), 0.0);
    amps[1] = 1.0;  // |0>^n on the query bus, |1> on the answer qubit

    for (unsigned q = 0; q <= n; ++q) {
        detail::hadamard_on_qubit(amps, q);
        detail::check_unit_norm(amps, "Hadamard");
    }

    // Oracle: swap the answer pair wherever f(x) = 1.
    for (std::uint64_t x = 0; x < f.size(); ++x)
        if (f(x)) std::swap(amps[x << 1], amps[(x << 1) | 1]);
    detail::check_unit_norm(amps, "oracle");
    StatevectorRun run;
    run.oracle_factor_error = detail::answer_factor_error(amps);

    for (unsigned q = 1; q <= n; ++q) {
        detail::hadamard_on_qubit(amps, q);
        detail::check_unit_norm(amps, "Hadamard");
    }
    run.final_factor_error = detail::answer_factor_error(amps);
    if (run.oracle_factor_error > kEngineTol || run.final_factor_error > kEngineTol)
        throw std::logic_error("answer qubit failed to factor out; gate implementation bug");

    const double sqrt2 = std::sqrt(2.0);
    run.spectrum = Spectrum{n, std::vector<double>(f.size())};
    for (std::uint64_t x = 0; x < f.size(); ++x)
        run.spectrum.amplitudes[x] = (amps[x << 1] - amps[(x << 1) | 1]) / sqrt2;
    run.state = std::move(amps);
    return run;
}

/// Draws shots outcomes from |psi(z)|^2 by inverse-CDF over ascending z with
/// a seeded SplitMix64. Only outcomes that occurred appear in the histogram.
inline std::map<std::uint64_t, std::uint64_t> sample_outcomes(const Spectrum& s,
                                                              std::uint64_t shots,
                                                              std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be at least 1");
    if (s.normalization_error() > 1e-9)
        throw std::invalid_argument("spectrum is not normalized; refusing to sample");
    std::vector<double> cdf(s.size());
    double cum = 0.0;
    std::uint64_t fallback = 0;  // largest outcome with nonzero probability
    for (std::uint64_t z = 0; z < s.size(); ++z) {
        double p = s.probability(z);
        if (p > 0.0) fallback = z;
        cum += p;
        cdf[z] = cum;
    }
    SplitMix64 rng(seed);
    std::map<std::uint64_t, std::uint64_t> histogram;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        double u = rng.next_double();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::uint64_t drawn =
            it == cdf.end() ? fallback : static_cast<std::uint64_t>(it - cdf.begin());
        ++histogram[drawn];
    }
    return histogram;
}

}  // namespace dj
