#include "commands.hpp"

#include <cstdint>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "file_io.hpp"
#include "layered/errors.hpp"
#include "layered/forward.hpp"
#include "layered/invert_medium.hpp"
#include "layered/oracle.hpp"

namespace layered::cli {

namespace {

constexpr double kOracleTolerance = 1e-10;
constexpr std::size_t kOracleMaxInterface = 3;

struct ForwardArgs {
    std::string medium;
    double cutoff = 0.0;
    bool transmission = false;
    std::string out;
    std::size_t max_points = EnumerationLimits{}.max_points;
};

struct SpectrumArgs {
    std::string medium;
    double omega_max = 0.0;
    std::size_t samples = 0;
    std::string method = "recurrence";
    double cutoff = 0.0;
    std::string out;
};

struct InvertArgs {
    std::string train;
    std::string out;
    double tolerance = InversionOptions{}.discrepancy_tolerance;
};

struct ValidateArgs {
    std::string medium;
    double cutoff = 0.0;
    double omega_max = 2000.0;
    std::size_t samples = 8192;
    double jitter = 0.0;
    std::uint64_t seed = 0;
};

struct OracleArgs {
    std::string medium;
    double cutoff = 0.0;
    bool transmission = false;
    std::string out;
    std::size_t max_paths = OracleLimits{}.max_paths;
};

std::string train_text(const DeltaTrain& train) {
    std::ostringstream s;
    write_train(s, train);
    return s.str();
}

void require_positive(double value, const std::string& flag) {
    if (!(value > 0.0)) {
        throw ValidationError(flag + " must be positive");
    }
}

void cmd_forward(const ForwardArgs& args, std::ostream& out) {
    const Medium medium = read_medium_file(args.medium);
    require_positive(args.cutoff, "--cutoff");
    const EnumerationLimits limits{args.max_points};
    const DeltaTrain train = args.transmission ? transmission_response(medium, args.cutoff, limits)
                                               : reflection_response(medium, args.cutoff, limits);
    emit(args.out, train_text(train), out);
}

void cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
    const Medium medium = read_medium_file(args.medium);
    require_positive(args.omega_max, "--omega-max");
    if (args.samples == 0) {
        throw ValidationError("--samples must be at least 1");
    }
    const auto grid = uniform_grid(0.0, args.omega_max, args.samples);
    FrequencyResponse response;
    if (args.method == "series") {
        const double total = std::accumulate(medium.travel_times.begin(), medium.travel_times.end(), 0.0);
        const double cutoff = args.cutoff > 0.0 ? args.cutoff : 10.0 * total;
        response = frequency_response(medium, grid, SpectrumMethod::Series, cutoff);
    } else {
        response = frequency_response(medium, grid, SpectrumMethod::Recurrence);
    }
    std::ostringstream s;
    write_spectrum(s, response);
    emit(args.out, s.str(), out);
}

std::string join(const std::vector<double>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        s += (i ? ", " : "") + format_double(values[i]);
    }
    return s;
}

void cmd_invert(const InvertArgs& args, std::ostream& out) {
    const DeltaTrain train = read_train_file(args.train);
    InversionOptions options;
    options.discrepancy_tolerance = args.tolerance;
    const auto report = invert_medium(train, options);

    out << "interfaces: " << report.medium.reflection.size() << '\n';
    out << "tau: " << join(report.medium.travel_times) << '\n';
    out << "R: " << join(report.medium.reflection) << '\n';
    std::string flagged;
    for (const auto& c : report.checks) {
        out << "interface " << c.interface << ": recursive " << format_double(c.recursive) << ", seven-points "
            << (c.seven_points ? format_double(*c.seven_points) : std::string("n/a"));
        if (c.discrepancy) {
            out << ", DISCREPANCY, kept " << (c.choice == Choice::SevenPoints ? "seven-points" : "recursive");
            flagged += (flagged.empty() ? "" : ", ") + std::to_string(c.interface);
        }
        if (!c.note.empty()) {
            out << " (" << c.note << ')';
        }
        out << '\n';
    }
    if (!report.matched.unmatched.empty() || !report.matched.ambiguous.empty()) {
        out << "unmatched events: " << report.matched.unmatched.size()
            << ", ambiguous events: " << report.matched.ambiguous.size() << '\n';
    }
    out << "status: " << (report.consistent ? "consistent" : "discrepancy at interface " + flagged) << '\n';
    if (!args.out.empty()) {
        emit(args.out, medium_to_json(report.medium), out);
    } else {
        out << medium_to_json(report.medium);
    }
}

void oracle_section(const Medium& medium, double cutoff, std::ostream& out) {
    if (medium.last_interface() > kOracleMaxInterface) {
        out << "oracle: skipped (n>3)\n";
        return;
    }
    try {
        double mismatch = max_amplitude_mismatch(reflection_response(medium, cutoff),
                                                 ray_reflection_train(medium, cutoff));
        if (medium.exit_travel_time) {
            mismatch = std::max(mismatch, max_amplitude_mismatch(transmission_response(medium, cutoff),
                                                                 ray_transmission_train(medium, cutoff)));
        }
        out << "oracle: " << (mismatch <= kOracleTolerance ? "PASS" : "FAIL") << " (max amplitude mismatch "
            << format_double(mismatch) << ")\n";
    } catch (const ResourceError&) {
        out << "oracle: skipped (path cap reached; lower --cutoff)\n";
    }
}

void cmd_validate(const ValidateArgs& args, std::ostream& out) {
    const Medium medium = read_medium_file(args.medium);
    require_positive(args.cutoff, "--cutoff");
    out << "interfaces: " << medium.reflection.size() << '\n';
    if (medium.exit_travel_time) {
        const auto e = energy_report(medium, args.cutoff);
        out << "energy (T = " << format_double(args.cutoff) << "): reflected " << format_double(e.reflected)
            << ", transmitted " << format_double(e.transmitted) << ", residual " << format_double(e.residual) << '\n';
    } else {
        out << "energy: skipped (medium has no tau_last)\n";
    }
    oracle_section(medium, args.cutoff, out);
    const double flatness = flatness_statistic(medium, args.omega_max, args.samples, {args.jitter, args.seed});
    out << "flatness: " << format_double(flatness) << " (omega_max " << format_double(args.omega_max) << ", samples "
        << args.samples << ", jitter " << format_double(args.jitter) << ", seed " << args.seed << ")\n";
}

void cmd_oracle(const OracleArgs& args, std::ostream& out) {
    const Medium medium = read_medium_file(args.medium);
    require_positive(args.cutoff, "--cutoff");
    const OracleLimits limits{args.max_paths};
    const DeltaTrain train = args.transmission ? ray_transmission_train(medium, args.cutoff, limits)
                                               : ray_reflection_train(medium, args.cutoff, limits);
    emit(args.out, train_text(train), out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Forward synthesis and inversion of plane-wave responses of layered media"};
    app.require_subcommand(1);

    ForwardArgs forward;
    auto* f = app.add_subcommand("forward", "Reflection or transmission train of a medium");
    f->add_option("medium", forward.medium, "Medium JSON file")->required();
    f->add_option("--cutoff", forward.cutoff, "Largest arrival time kept")->required();
    f->add_flag("--transmission", forward.transmission, "Transmission train instead of reflection");
    f->add_option("--out", forward.out, "Output CSV (default stdout)");
    f->add_option("--max-points", forward.max_points, "Lattice enumeration cap");

    SpectrumArgs spectrum;
    auto* s = app.add_subcommand("spectrum", "Fourier transform of the reflection response on [0, omega_max]");
    s->add_option("medium", spectrum.medium, "Medium JSON file")->required();
    s->add_option("--omega-max", spectrum.omega_max, "Largest angular frequency")->required();
    s->add_option("--samples", spectrum.samples, "Number of frequencies")->required();
    s->add_option("--method", spectrum.method, "recurrence or series")
        ->check(CLI::IsMember({"recurrence", "series"}));
    s->add_option("--cutoff", spectrum.cutoff, "Series truncation time (default 10 * sum(tau))");
    s->add_option("--out", spectrum.out, "Output CSV (default stdout)");

    InvertArgs invert;
    auto* i = app.add_subcommand("invert", "Recover travel times and reflection coefficients from a reflection train");
    i->add_option("train", invert.train, "Train CSV file")->required();
    i->add_option("--out", invert.out, "Output medium JSON (default stdout, after the report)");
    i->add_option("--tolerance", invert.tolerance, "Recursive vs seven-points discrepancy threshold");

    ValidateArgs validate;
    auto* v = app.add_subcommand("validate", "Energy partition, ray-tracing agreement and flatness statistic");
    v->add_option("medium", validate.medium, "Medium JSON file")->required();
    v->add_option("--cutoff", validate.cutoff, "Time window for energy and oracle checks")->required();
    v->add_option("--omega-max", validate.omega_max, "Flatness grid half-width");
    v->add_option("--samples", validate.samples, "Flatness grid size");
    v->add_option("--jitter", validate.jitter, "Random perturbation of grid points, as a fraction of spacing");
    v->add_option("--seed", validate.seed, "Seed for the jitter");

    OracleArgs oracle;
    auto* o = app.add_subcommand("oracle", "Brute-force ray tracing train");
    o->group("");
    o->add_option("medium", oracle.medium, "Medium JSON file")->required();
    o->add_option("--cutoff", oracle.cutoff, "Largest arrival time kept")->required();
    o->add_flag("--transmission", oracle.transmission, "Transmission train instead of reflection");
    o->add_option("--out", oracle.out, "Output CSV (default stdout)");
    o->add_option("--max-paths", oracle.max_paths, "Path cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*f) {
            cmd_forward(forward, out);
        } else if (*s) {
            cmd_spectrum(spectrum, out);
        } else if (*i) {
            cmd_invert(invert, out);
        } else if (*v) {
            cmd_validate(validate, out);
        } else if (*o) {
            cmd_oracle(oracle, out);
        }
    } catch (const InversionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInversion;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace layered::cli
