// dj: build Deutsch-Jozsa oracles, compute their output spectra, classify
// them, count the language universes, sample measurement ensembles, and emit
// figure-ready data files. Exit codes: 0 ok, 2 usage, 3 I/O, 4 engine
// disagreement, 5 size cap.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "dj/dj.hpp"

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    unsigned n = 0;
    bool constant = false;
    bool periodic = false;
    bool mono = false;
    bool random_balanced = false;
    bool perfect_square = false;
    int c = 0;
    unsigned m = 0;
    std::uint64_t k = 0;
    std::uint64_t seed = 1;
    std::string input;
};

void add_oracle_flags(CLI::App* cmd, OracleOptions& o) {
    cmd->add_option("--n", o.n, "query bus width")->check(CLI::Range(1u, dj::kMaxWidth));
    cmd->add_flag("--constant", o.constant, "constant oracle f(x) = c");
    cmd->add_flag("--periodic", o.periodic, "binary periodic oracle f(x) = c XOR x_m");
    cmd->add_flag("--mono", o.mono, "monochromatic oracle f(x) = k.x XOR c");
    cmd->add_flag("--random-balanced", o.random_balanced, "seeded random balanced oracle");
    cmd->add_flag("--perfect-square", o.perfect_square, "perfect-squares language layer");
    cmd->add_option("--c", o.c, "XOR constant")->check(CLI::Range(0, 1));
    cmd->add_option("--m", o.m, "constant bit address (with --periodic)");
    cmd->add_option("--k", o.k, "selector value (with --mono)");
    cmd->add_option("--seed", o.seed, "seed for --random-balanced and for sampling");
    cmd->add_option("--input", o.input, "truth-table file: 'n=<w>' header plus 2^w bits");
}

/// Exactly one oracle source, kind flags XOR input file.
dj::OracleSpec resolve_oracle(const OracleOptions& o) {
    int sources = int(o.constant) + int(o.periodic) + int(o.mono) + int(o.random_balanced) +
                  int(o.perfect_square) + int(!o.input.empty());
    if (sources != 1)
        throw usage_error("give exactly one oracle source "
                          "(--constant | --periodic | --mono | --random-balanced | "
                          "--perfect-square | --input FILE)");
    if (!o.input.empty()) {
        dj::TruthTable t = dj::load_truth_table(o.input);
        if (o.n != 0 && o.n != t.width())
            throw usage_error("--n " + std::to_string(o.n) + " contradicts the file width " +
                              std::to_string(t.width()));
        return dj::OracleSpec::from_file(o.input, t.width());
    }
    if (o.n == 0) throw usage_error("--n is required with oracle kind flags");
    if (o.constant) return dj::OracleSpec::constant(o.n, o.c);
    if (o.periodic) {
        if (o.m >= o.n)
            throw usage_error("--m " + std::to_string(o.m) + " out of range for width " +
                              std::to_string(o.n));
        return dj::OracleSpec::binary_periodic(o.n, o.m, o.c);
    }
    if (o.mono) {
        if (o.k >> o.n)
            throw usage_error("--k " + std::to_string(o.k) + " does not fit in " +
                              std::to_string(o.n) + " bits");
        return dj::OracleSpec::monochromatic(o.n, o.k, o.c);
    }
    if (o.random_balanced) return dj::OracleSpec::random_balanced(o.n, o.seed);
    return dj::OracleSpec::perfect_square(o.n);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dj::io_error(path + ": cannot open for writing");
    out << text;
    if (!out) throw dj::io_error(path + ": write failed");
}

int cmd_spectrum(const OracleOptions& opts, const std::string& engine, const std::string& output) {
    dj::TruthTable f = resolve_oracle(opts).build();
    unsigned n = f.width();

    if ((engine == "direct" || engine == "all") && n > dj::kMaxDirectWidth)
        throw usage_error("the direct engine supports widths up to " +
                          std::to_string(dj::kMaxDirectWidth));
    if ((engine == "statevector" || engine == "all") && n > dj::kMaxStatevectorWidth)
        throw usage_error("the statevector engine supports widths up to " +
                          std::to_string(dj::kMaxStatevectorWidth));

    dj::Spectrum result;
    if (engine == "direct") {
        result = dj::amplitudes_direct(f);
    } else if (engine == "statevector") {
        result = dj::statevector_run(f).spectrum;
    } else if (engine == "fwht") {
        result = dj::amplitudes_fwht(f);
    } else {  // all: cross-check the three engines entrywise
        dj::Spectrum direct = dj::amplitudes_direct(f);
        dj::Spectrum fwht = dj::amplitudes_fwht(f);
        dj::Spectrum sv = dj::statevector_run(f).spectrum;
        double worst = 0.0;
        for (std::uint64_t z = 0; z < direct.size(); ++z) {
            worst = std::max(worst, std::fabs(direct.amplitudes[z] - fwht.amplitudes[z]));
            worst = std::max(worst, std::fabs(direct.amplitudes[z] - sv.amplitudes[z]));
        }
        if (worst > dj::kEngineTol) {
            std::cerr << "engines disagree: max deviation " << dj::format_double(worst) << "\n";
            return 4;
        }
        result = fwht;
    }

    std::string csv = dj::spectrum_csv(result);
    if (output.empty())
        std::cout << csv;
    else
        write_text(output, csv);
    return 0;
}

int cmd_classify(const OracleOptions& opts) {
    dj::TruthTable f = resolve_oracle(opts).build();
    std::cout << dj::classification_report(dj::classify(f));
    return 0;
}

int cmd_count(unsigned n) {
    std::string balanced = dj::count_balanced(n).to_string();  // may hit the size cap
    std::uint64_t mono = dj::count_monochromatic(n);
    std::cout << "balanced=" << balanced << "\n";
    std::cout << "monochromatic=" << mono << "\n";
    return 0;
}

int cmd_sample(const OracleOptions& opts, std::uint64_t shots) {
    dj::TruthTable f = resolve_oracle(opts).build();
    dj::Spectrum s = dj::amplitudes_fwht(f);
    for (const auto& [z, count] : dj::sample_outcomes(s, shots, opts.seed))
        std::cout << z << " " << count << "\n";
    return 0;
}

int cmd_emit_figure(const OracleOptions& opts, const std::string& out_dir) {
    dj::OracleSpec spec = resolve_oracle(opts);
    dj::TruthTable f = spec.build();
    std::string header = "# n=" + std::to_string(f.width()) + " " + spec.describe() + "\n";

    std::string fdat = header;
    for (std::uint64_t x = 0; x < f.size(); ++x)
        fdat += std::to_string(x) + " " + std::to_string(f(x)) + "\n";

    dj::Spectrum s = dj::amplitudes_fwht(f);
    std::string psidat = header;
    for (std::uint64_t z = 0; z < s.size(); ++z)
        psidat += std::to_string(z) + " " + dj::format_double(s.probability(z)) + "\n";

    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    write_text((dir / "f.dat").string(), fdat);
    write_text((dir / "psi.dat").string(), psidat);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deutsch-Jozsa oracles, output spectra, and language classification"};
    app.require_subcommand(1);

    OracleOptions spectrum_opts;
    std::string engine = "fwht";
    std::string output;
    CLI::App* spectrum = app.add_subcommand("spectrum", "compute the output amplitudes as CSV");
    add_oracle_flags(spectrum, spectrum_opts);
    spectrum->add_option("--engine", engine, "direct | fwht | statevector | all")
        ->check(CLI::IsMember({"direct", "fwht", "statevector", "all"}));
    spectrum->add_option("--output", output, "CSV path (default: stdout)");

    OracleOptions classify_opts;
    CLI::App* classify = app.add_subcommand("classify", "classify an oracle against the promise");
    add_oracle_flags(classify, classify_opts);

    unsigned count_n = 0;
    CLI::App* count = app.add_subcommand("count", "count balanced and monochromatic languages");
    count->add_option("--n", count_n, "width")->required()->check(CLI::Range(1u, 64u));

    OracleOptions sample_opts;
    std::uint64_t shots = 0;
    CLI::App* sample = app.add_subcommand("sample", "draw measurement outcomes");
    add_oracle_flags(sample, sample_opts);
    sample->add_option("--shots", shots, "number of measurements")
        ->required()
        ->check(CLI::PositiveNumber);

    OracleOptions figure_opts;
    std::string out_dir = ".";
    CLI::App* figure =
        app.add_subcommand("emit-figure", "write f.dat and psi.dat for impulse plots");
    add_oracle_flags(figure, figure_opts);
    figure->add_option("--out-dir", out_dir, "output directory (default: .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*spectrum) return cmd_spectrum(spectrum_opts, engine, output);
        if (*classify) return cmd_classify(classify_opts);
        if (*count) return cmd_count(count_n);
        if (*sample) return cmd_sample(sample_opts, shots);
        if (*figure) return cmd_emit_figure(figure_opts, out_dir);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dj::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dj::size_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
