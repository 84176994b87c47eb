#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "dj/oracle.hpp"
#include "dj/simulator.hpp"
#include "test_util.hpp"

using dj::Spectrum;
using dj::TruthTable;
using dj_test::max_abs_diff;
using dj_test::random_table;

TEST_CASE("direct engine: constant oracle collapses to the solo state z=0") {
    Spectrum s = dj::amplitudes_direct(dj::make_constant(4, 0));
    CHECK(s.amplitudes[0] == 1.0);
    for (std::uint64_t z = 1; z < 16; ++z) CHECK(s.amplitudes[z] == 0.0);
}

TEST_CASE("direct engine: monochromatic oracle lights a single line at k") {
    Spectrum s = dj::amplitudes_direct(dj::make_monochromatic(4, 14, 0));
    for (std::uint64_t z = 0; z < 16; ++z) CHECK(s.amplitudes[z] == (z == 14 ? 1.0 : 0.0));
}

TEST_CASE("direct engine: balanced oracles cancel exactly at z=0") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Spectrum s = dj::amplitudes_direct(dj::make_random_balanced(4, seed));
        CHECK(s.amplitudes[0] == 0.0);
    }
}

TEST_CASE("fwht engine matches the direct engine on random tables") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        TruthTable f = random_table(8, seed);
        CHECK(max_abs_diff(dj::amplitudes_direct(f), dj::amplitudes_fwht(f)) < 1e-12);
    }
}

TEST_CASE("fwht engine: binary periodic m=1 puts all probability at z=2") {
    Spectrum s = dj::amplitudes_fwht(dj::make_binary_periodic(4, 1, 1));
    CHECK(s.probability(2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.amplitudes[2] == -1.0);  // c=1 flips the global sign
    for (std::uint64_t z = 0; z < 16; ++z)
        if (z != 2) CHECK(s.amplitudes[z] == 0.0);
}

TEST_CASE("fwht engine: two-point butterfly by hand") {
    TruthTable f(1);
    f.set(1, 1);  // f = (0,1)
    Spectrum s = dj::amplitudes_fwht(f);
    CHECK(s.amplitudes[0] == 0.0);
    CHECK(s.amplitudes[1] == 1.0);
}

TEST_CASE("affine tables give a delta spectrum with sign (-1)^c, exhaustively to width 6") {
    for (unsigned n = 1; n <= 6; ++n)
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k)
            for (int c : {0, 1}) {
                Spectrum s = dj::amplitudes_fwht(dj::make_monochromatic(n, k, c));
                for (std::uint64_t z = 0; z < s.size(); ++z)
                    CHECK(s.amplitudes[z] == (z == k ? (c ? -1.0 : 1.0) : 0.0));
            }
}

TEST_CASE("psi(0) counts the table imbalance, exhaustively at small widths") {
    auto expect_psi0 = [](const TruthTable& f) {
        return (static_cast<double>(f.size() - f.ones_count()) -
                static_cast<double>(f.ones_count())) /
               static_cast<double>(f.size());
    };
    for (unsigned n = 1; n <= 3; ++n) {
        std::uint64_t size = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
            TruthTable f(n);
            for (std::uint64_t x = 0; x < size; ++x) f.set(x, static_cast<int>((mask >> x) & 1));
            CHECK(dj::amplitudes_fwht(f).amplitudes[0] == expect_psi0(f));
        }
    }
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {  // representative tables at n=4
        TruthTable f = random_table(4, seed);
        CHECK(dj::amplitudes_fwht(f).amplitudes[0] == expect_psi0(f));
        CHECK(dj::amplitudes_direct(f).amplitudes[0] == expect_psi0(f));
    }
}

TEST_CASE("no amplitude ever exceeds 1 in magnitude") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Spectrum s = dj::amplitudes_fwht(random_table(7, seed));
        for (double a : s.amplitudes) CHECK(std::fabs(a) <= 1.0 + 1e-12);
    }
}

TEST_CASE("parseval holds for every engine on arbitrary tables") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        TruthTable f = random_table(6, seed);  // not balanced in general
        CHECK(dj::amplitudes_direct(f).normalization_error() < 1e-12);
        CHECK(dj::amplitudes_fwht(f).normalization_error() < 1e-12);
        CHECK(dj::statevector_run(f).spectrum.normalization_error() < 1e-12);
    }
}

TEST_CASE("statevector run: n=1 identity oracle measures z=1 with certainty") {
    TruthTable f(1);
    f.set(1, 1);  // f(x) = x
    auto run = dj::statevector_run(f);
    CHECK(run.spectrum.probability(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(run.spectrum.amplitudes[0]) < 1e-12);
}

TEST_CASE("statevector run: constant oracle leaves the bus at |0> and the answer at H|1>") {
    auto run = dj::statevector_run(dj::make_constant(1, 0));
    CHECK(run.spectrum.amplitudes[0] == doctest::Approx(1.0).epsilon(1e-12));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(run.state[0] == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(run.state[1] == doctest::Approx(-inv_sqrt2).epsilon(1e-15));
    CHECK(std::fabs(run.state[2]) < 1e-15);
    CHECK(std::fabs(run.state[3]) < 1e-15);
}

TEST_CASE("statevector run matches the direct engine on balanced tables") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        TruthTable f = dj::make_random_balanced(4, seed);
        CHECK(max_abs_diff(dj::amplitudes_direct(f), dj::statevector_run(f).spectrum) < 1e-12);
    }
}

TEST_CASE("the answer qubit stays factored out through the oracle and the closing gates") {
    for (unsigned n = 1; n <= 8; ++n) {
        auto run = dj::statevector_run(random_table(n, 1000 + n));
        CHECK(run.oracle_factor_error <= 1e-12);
        CHECK(run.final_factor_error <= 1e-12);
    }
}

TEST_CASE("three engines agree entrywise on random tables across widths") {
    for (unsigned n = 1; n <= 8; ++n) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            TruthTable f = random_table(n, seed * 131 + n);
            Spectrum direct = dj::amplitudes_direct(f);
            CHECK(max_abs_diff(direct, dj::amplitudes_fwht(f)) < 1e-12);
            CHECK(max_abs_diff(direct, dj::statevector_run(f).spectrum) < 1e-12);
        }
    }
}

TEST_CASE("width guards on the engines") {
    CHECK_THROWS_AS(dj::amplitudes_direct(dj::make_constant(15, 0)), std::invalid_argument);
    CHECK_THROWS_AS(dj::statevector_run(dj::make_constant(13, 0)), std::invalid_argument);
    CHECK_NOTHROW(dj::amplitudes_fwht(dj::make_constant(15, 0)));
}

TEST_CASE("sampling a degenerate spectrum always returns its line") {
    Spectrum mono = dj::amplitudes_fwht(dj::make_monochromatic(4, 14, 0));
    auto hist = dj::sample_outcomes(mono, 1000, 7);
    REQUIRE(hist.size() == 1);
    CHECK(hist.at(14) == 1000);

    Spectrum solo = dj::amplitudes_fwht(dj::make_constant(3, 1));
    auto hist0 = dj::sample_outcomes(solo, 5, 1);
    REQUIRE(hist0.size() == 1);
    CHECK(hist0.at(0) == 5);
}

TEST_CASE("sampling matches the distribution within four standard deviations") {
    TruthTable f = dj::make_random_balanced(4, 2024);
    Spectrum s = dj::amplitudes_fwht(f);
    const std::uint64_t shots = 100000;
    auto hist = dj::sample_outcomes(s, shots, 99);
    std::uint64_t total = 0;
    for (std::uint64_t z = 0; z < 16; ++z) {
        double p = s.probability(z);
        double count = hist.count(z) ? static_cast<double>(hist.at(z)) : 0.0;
        total += hist.count(z) ? hist.at(z) : 0;
        double sigma = std::sqrt(static_cast<double>(shots) * p * (1.0 - p));
        CHECK(std::fabs(count - static_cast<double>(shots) * p) <= 4.0 * sigma);
    }
    CHECK(total == shots);
}

TEST_CASE("sampling is deterministic per seed") {
    Spectrum s = dj::amplitudes_fwht(dj::make_random_balanced(4, 5));
    CHECK(dj::sample_outcomes(s, 5000, 11) == dj::sample_outcomes(s, 5000, 11));
}

TEST_CASE("sampling rejects unnormalized spectra and zero shots") {
    Spectrum bogus{2, {0.5, 0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(dj::sample_outcomes(bogus, 10, 1), std::invalid_argument);
    Spectrum fine = dj::amplitudes_fwht(dj::make_constant(2, 0));
    CHECK_THROWS_AS(dj::sample_outcomes(fine, 0, 1), std::invalid_argument);
}
