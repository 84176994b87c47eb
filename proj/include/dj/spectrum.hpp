#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dj/format.hpp"
#include "dj/truth_table.hpp"

namespace dj {

/// The 2^n signed output amplitudes psi(z); probabilities are |psi(z)|^2.
/// All engines produce real amplitudes, so a signed double per entry is the
/// full state of the output register.
struct Spectrum {
    unsigned n = 1;
    std::vector<double> amplitudes;  // entry z holds psi(z)

    std::uint64_t size() const { return std::uint64_t{1} << n; }

    double amplitude(std::uint64_t z) const { return amplitudes[z]; }
    double probability(std::uint64_t z) const { return amplitudes[z] * amplitudes[z]; }

    std::vector<double> probabilities() const {
        std::vector<double> p(amplitudes.size());
        for (std::size_t z = 0; z < amplitudes.size(); ++z) p[z] = amplitudes[z] * amplitudes[z];
        return p;
    }

    /// | sum_z psi(z)^2 - 1 |, the Parseval defect.
    double normalization_error() const {
        double total = 0.0;
        for (double a : amplitudes) total += a * a;
        return std::fabs(total - 1.0);
    }
};

/// Spectrum CSV, bit-exact layout: header line, then one row per z ascending
/// with round-trip formatted amplitude and probability.
inline std::string spectrum_csv(const Spectrum& s) {
    std::string out = "z,amplitude,probability\n";
    for (std::uint64_t z = 0; z < s.size(); ++z) {
        out += std::to_string(z);
        out += ',';
        out += format_double(s.amplitude(z));
        out += ',';
        out += format_double(s.probability(z));
        out += '\n';
    }
    return out;
}

inline void save_spectrum_csv(const Spectrum& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error(path + ": cannot open for writing");
    out << spectrum_csv(s);
    if (!out) throw io_error(path + ": write failed");
}

}  // namespace dj
