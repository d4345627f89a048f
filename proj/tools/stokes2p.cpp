// Command-line front end: build states, print Stokes tables and measures,
// simulate and invert coincidence tomography, and generate region datasets.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stokes2p/io.hpp"
#include "stokes2p/measures.hpp"
#include "stokes2p/region.hpp"
#include "stokes2p/states.hpp"
#include "stokes2p/stokes.hpp"
#include "stokes2p/tomography.hpp"

namespace {

using namespace stokes2p;

int exit_code_for(const std::string& category) {
    if (category == errcat::parse) return 3;
    if (category == errcat::validation) return 4;
    if (category == errcat::io) return 5;
    if (category == errcat::singular_scheme) return 6;
    if (category == errcat::convergence) return 70;
    return 2;
}

// "a+bi" | "a-bi" | "a" | "bi" | "i" | "-i"
complexd parse_complex(const std::string& text) {
    const std::string msg = "bad complex number '" + text + "'";
    std::string t = text;
    if (t.empty()) throw Error(errcat::parse, msg);

    double re = 0.0, im = 0.0;
    const char* p = t.c_str();
    char* end = nullptr;
    double first = std::strtod(p, &end);
    if (end == p) {
        // no leading number: forms like "i", "-i", "+i"
        first = 1.0;
        if (*p == '-') {
            first = -1.0;
            ++p;
        } else if (*p == '+') {
            ++p;
        }
        if (*p != 'i' || *(p + 1) != '\0') throw Error(errcat::parse, msg);
        return {0.0, first};
    }
    if (*end == 'i') {
        if (*(end + 1) != '\0') throw Error(errcat::parse, msg);
        return {0.0, first};
    }
    re = first;
    if (*end == '\0') return {re, 0.0};

    p = end;
    char* end2 = nullptr;
    double second = std::strtod(p, &end2);
    if (end2 == p) {
        // "+i" / "-i" tail
        second = 1.0;
        if (*p == '-') {
            second = -1.0;
            ++p;
        } else if (*p == '+') {
            ++p;
        } else {
            throw Error(errcat::parse, msg);
        }
        if (*p != 'i' || *(p + 1) != '\0') throw Error(errcat::parse, msg);
        return {re, second};
    }
    if (*end2 != 'i' || *(end2 + 1) != '\0') throw Error(errcat::parse, msg);
    im = second;
    return {re, im};
}

JonesVector parse_jones(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw Error(errcat::parse, "Jones vector must be 'h,v', got '" + text + "'");
    }
    return {parse_complex(text.substr(0, comma)), parse_complex(text.substr(comma + 1))};
}

BellKind parse_bell(const std::string& text) {
    if (text == "phi+") return BellKind::phi_plus;
    if (text == "phi-") return BellKind::phi_minus;
    if (text == "psi+") return BellKind::psi_plus;
    if (text == "psi-") return BellKind::psi_minus;
    throw Error(errcat::argument,
                "bell kind must be one of phi+ phi- psi+ psi-, got '" + text + "'");
}

RandomKind parse_ensemble(const std::string& text) {
    if (text == "haar-pure" || text == "haar") return RandomKind::haar_pure;
    if (text == "ginibre-mixed" || text == "ginibre") return RandomKind::ginibre_mixed;
    if (text == "product-mixture" || text == "mixture")
        return RandomKind::product_mixture;
    throw Error(errcat::argument,
                "ensemble must be haar-pure, ginibre-mixed, or product-mixture");
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

ValidateMode validate_mode(bool no_validate, bool normalize) {
    if (no_validate && normalize) {
        throw Error(errcat::argument, "--no-validate and --normalize are exclusive");
    }
    if (normalize) return ValidateMode::normalize;
    if (no_validate) return ValidateMode::skip;
    return ValidateMode::strict;
}

struct StateMakeArgs {
    std::string kind;
    std::string jones1 = "1,0";
    std::string jones2 = "1,0";
    std::string jones3 = "0,1";
    std::string jones4 = "0,1";
    std::string bell_kind = "phi+";
    std::string ensemble = "ginibre-mixed";
    double lambda = 0.5;
    bool lambda_given = false;
    std::uint64_t seed = 0;
    int rank = 4;
    int terms = 1;
    std::string out;
};

int run_state_make(const StateMakeArgs& args) {
    ComplexMatrix rho(4);
    if (args.kind == "product") {
        rho = product_pure(parse_jones(args.jones1), parse_jones(args.jones2)).rho();
    } else if (args.kind == "bell") {
        rho = bell(parse_bell(args.bell_kind)).rho();
    } else if (args.kind == "werner") {
        if (!args.lambda_given) {
            throw Error(errcat::argument, "--kind werner needs --lambda");
        }
        rho = werner(bell(parse_bell(args.bell_kind)), args.lambda).rho();
    } else if (args.kind == "mixture2") {
        if (!args.lambda_given) {
            throw Error(errcat::argument, "--kind mixture2 needs --lambda");
        }
        rho = two_product_mixture(parse_jones(args.jones1), parse_jones(args.jones2),
                                  parse_jones(args.jones3), parse_jones(args.jones4),
                                  args.lambda)
                  .rho();
    } else if (args.kind == "random") {
        RandomSpec spec;
        spec.kind = parse_ensemble(args.ensemble);
        spec.rank = args.rank;
        spec.terms = args.terms;
        spec.seed = args.seed;
        rho = random_state(spec).rho();
    } else {
        throw Error(errcat::argument,
                    "--kind must be product, bell, werner, mixture2, or random");
    }
    write_text_file(args.out, serialize_state(rho));
    return 0;
}

void print_tensor_table(const StokesTensor& S) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "% 15.10f", S(i, j));
            std::cout << buf << (j == 3 ? "" : " ");
        }
        std::cout << "\n";
    }
}

int run_stokes(const std::string& in, const std::string& out, ValidateMode mode) {
    const ComplexMatrix rho = parse_state(read_text_file(in), mode);
    if (rho.dim() != 4) {
        throw Error(errcat::invalid_dimension,
                    "stokes expects a two-photon (4x4) state file");
    }
    const StokesTensor S = stokes_from_density2(rho, /*validate=*/false);
    print_tensor_table(S);
    if (!out.empty()) write_text_file(out, serialize_tensor(S));
    return 0;
}

int run_measures(const std::string& in, ValidateMode mode) {
    const std::string text = read_text_file(in);
    StokesTensor S;
    if (looks_like_tensor(text)) {
        S = parse_tensor(text);
    } else {
        const ComplexMatrix rho = parse_state(text, mode);
        if (rho.dim() != 4) {
            throw Error(errcat::invalid_dimension,
                        "measures expects a two-photon (4x4) state or a tensor file");
        }
        S = stokes_from_density2(rho, /*validate=*/false);
    }
    const MeasureSet m = two_photon_measures(S);
    const StateClass cls = classify(S);
    std::cout << "P1                = " << format_value(m.p1) << "\n"
              << "P2                = " << format_value(m.p2) << "\n"
              << "Pbar^2            = " << format_value(m.pbar_sq) << "\n"
              << "P12^2 (signed)    = " << format_value(m.p12_sq_signed) << "\n"
              << "P12               = " << format_value(m.p12) << "\n"
              << "Pm                = " << format_value(m.pm) << "\n"
              << "purity            = " << format_value(m.purity) << "\n"
              << "pure              = " << (cls.is_pure ? "yes" : "no") << "\n"
              << "product_pure      = " << (cls.is_product_pure ? "yes" : "no") << "\n"
              << "max_entangled     = " << (cls.is_max_entangled ? "yes" : "no") << "\n"
              << "witness_entangled = " << (cls.witness_entangled ? "yes" : "no")
              << "\n";
    return 0;
}

int run_tomo_simulate(const std::string& in, const std::string& noise_kind,
                      double pairs, std::uint64_t seed, const std::string& out,
                      ValidateMode mode) {
    const TwoPhotonState rho(parse_state(read_text_file(in), mode));
    NoiseSpec noise = NoiseSpec::none();
    if (noise_kind == "poisson") {
        noise = NoiseSpec::poisson(pairs, seed);
    } else if (noise_kind != "none") {
        throw Error(errcat::argument, "--noise must be none or poisson");
    }
    const MeasurementScheme scheme = canonical_scheme();
    const auto records = simulate(rho, scheme, noise);
    write_text_file(out, serialize_records(scheme, records));
    return 0;
}

int run_tomo_invert(const std::string& in, const std::string& out) {
    const ParsedRecords parsed = parse_records(read_text_file(in));
    const TomographyResult result = invert(parsed.records, parsed.scheme);
    std::cout << "condition_estimate = " << format_value(result.condition_estimate)
              << "\n"
              << "max_residual       = " << format_value(result.max_residual) << "\n";
    if (result.flux_estimate) {
        std::cout << "flux_estimate      = " << format_value(*result.flux_estimate)
                  << "\n";
    }
    std::cout << "physical           = " << (result.physical ? "yes" : "no") << "\n";
    if (!out.empty()) write_text_file(out, serialize_tensor(result.tensor));
    return 0;
}

SegmentKind parse_segment(const std::string& text) {
    if (text == "AE") return SegmentKind::AE;
    if (text == "DE") return SegmentKind::DE;
    if (text == "AC") return SegmentKind::AC_classical;
    throw Error(errcat::argument, "segment kind must be AE, DE, or AC");
}

int emit_region_outputs(const RegionDataset& dataset, const std::string& out,
                        const std::string& svg_out) {
    write_text_file(out, serialize_region_csv({dataset}));
    if (!svg_out.empty()) write_text_file(svg_out, emit_svg_scatter({dataset}));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon-pair polarization toolkit: Stokes tensors, polarization "
                 "measures, coincidence tomography, and feasibility-region datasets"};
    app.require_subcommand(1);

    // ---- state make ----
    auto* state_cmd = app.add_subcommand("state", "Create and store states");
    state_cmd->require_subcommand(1);
    auto* make_cmd = state_cmd->add_subcommand("make", "Construct a two-photon state");
    StateMakeArgs make_args;
    make_cmd->add_option("--kind", make_args.kind,
                         "product | bell | werner | mixture2 | random")
        ->required();
    make_cmd->add_option("--jones1", make_args.jones1, "photon-1 Jones vector 'h,v'");
    make_cmd->add_option("--jones2", make_args.jones2, "photon-2 Jones vector 'h,v'");
    make_cmd->add_option("--jones3", make_args.jones3,
                         "photon-1 Jones vector of the second product term");
    make_cmd->add_option("--jones4", make_args.jones4,
                         "photon-2 Jones vector of the second product term");
    make_cmd->add_option("--bell", make_args.bell_kind, "phi+ | phi- | psi+ | psi-");
    auto* lambda_opt =
        make_cmd->add_option("--lambda", make_args.lambda, "mixture weight in [0,1]");
    make_cmd->add_option("--seed", make_args.seed, "random seed");
    make_cmd->add_option("--rank", make_args.rank, "ginibre rank 1..4");
    make_cmd->add_option("--terms", make_args.terms, "product-mixture term count");
    make_cmd->add_option("--ensemble", make_args.ensemble,
                         "haar-pure | ginibre-mixed | product-mixture");
    make_cmd->add_option("-o,--out", make_args.out, "output state JSON")->required();

    // ---- stokes ----
    auto* stokes_cmd = app.add_subcommand("stokes", "Print the 4x4 Stokes table");
    std::string stokes_in, stokes_out;
    bool stokes_no_validate = false, stokes_normalize = false;
    stokes_cmd->add_option("--in", stokes_in, "state JSON")->required();
    stokes_cmd->add_option("-o,--out", stokes_out, "tensor JSON to write");
    stokes_cmd->add_flag("--no-validate", stokes_no_validate, "skip density validation");
    stokes_cmd->add_flag("--normalize", stokes_normalize, "divide by trace first");

    // ---- measures ----
    auto* measures_cmd = app.add_subcommand("measures", "Print polarization measures");
    std::string measures_in;
    bool measures_no_validate = false, measures_normalize = false;
    measures_cmd->add_option("--in", measures_in, "state or tensor JSON")->required();
    measures_cmd->add_flag("--no-validate", measures_no_validate,
                           "skip density validation");
    measures_cmd->add_flag("--normalize", measures_normalize, "divide by trace first");

    // ---- tomo ----
    auto* tomo_cmd = app.add_subcommand("tomo", "Coincidence tomography");
    tomo_cmd->require_subcommand(1);
    auto* sim_cmd = tomo_cmd->add_subcommand("simulate", "Generate coincidence records");
    std::string sim_in, sim_noise = "none", sim_out;
    double sim_pairs = 1e6;
    std::uint64_t sim_seed = 0;
    bool sim_no_validate = false, sim_normalize = false;
    sim_cmd->add_option("--in", sim_in, "state JSON")->required();
    sim_cmd->add_option("--noise", sim_noise, "none | poisson");
    sim_cmd->add_option("--pairs", sim_pairs, "expected pairs per setting");
    sim_cmd->add_option("--seed", sim_seed, "noise seed");
    sim_cmd->add_flag("--no-validate", sim_no_validate, "skip density validation");
    sim_cmd->add_flag("--normalize", sim_normalize, "divide by trace first");
    sim_cmd->add_option("-o,--out", sim_out, "records CSV")->required();

    auto* inv_cmd = tomo_cmd->add_subcommand("invert", "Invert coincidence records");
    std::string inv_in, inv_out;
    inv_cmd->add_option("--in", inv_in, "records CSV")->required();
    inv_cmd->add_option("-o,--out", inv_out, "tensor JSON to write");

    // ---- region ----
    auto* region_cmd = app.add_subcommand("region", "Feasibility-region datasets");
    region_cmd->require_subcommand(1);

    auto* vert_cmd = region_cmd->add_subcommand("vertices", "The polygon vertices A-E");
    std::string vert_out, vert_svg;
    vert_cmd->add_option("-o,--out", vert_out, "dataset CSV")->required();
    vert_cmd->add_option("--svg", vert_svg, "scatter SVG to write");

    auto* wern_cmd = region_cmd->add_subcommand("werner", "Werner sweep toward D");
    std::string wern_bell = "phi+", wern_out, wern_svg;
    int wern_steps = 21;
    wern_cmd->add_option("--steps", wern_steps, "number of sweep points");
    wern_cmd->add_option("--bell", wern_bell, "pure state of the sweep");
    wern_cmd->add_option("-o,--out", wern_out, "dataset CSV")->required();
    wern_cmd->add_option("--svg", wern_svg, "scatter SVG to write");

    auto* seg_cmd = region_cmd->add_subcommand("segment", "AE, DE, or AC segment");
    std::string seg_kind, seg_out, seg_svg;
    int seg_steps = 21;
    seg_cmd->add_option("--kind", seg_kind, "AE | DE | AC")->required();
    seg_cmd->add_option("--steps", seg_steps, "number of sweep points");
    seg_cmd->add_option("-o,--out", seg_out, "dataset CSV")->required();
    seg_cmd->add_option("--svg", seg_svg, "scatter SVG to write");

    auto* cloud_cmd = region_cmd->add_subcommand("cloud", "Random state cloud");
    std::string cloud_kind = "ginibre-mixed", cloud_out, cloud_svg;
    int cloud_n = 1000, cloud_rank = 4, cloud_terms = 2;
    std::uint64_t cloud_seed = 0;
    cloud_cmd->add_option("--n", cloud_n, "number of points");
    cloud_cmd->add_option("--kind", cloud_kind,
                          "haar-pure | ginibre-mixed | product-mixture");
    cloud_cmd->add_option("--rank", cloud_rank, "ginibre rank 1..4");
    cloud_cmd->add_option("--terms", cloud_terms, "product-mixture term count");
    cloud_cmd->add_option("--seed", cloud_seed, "base seed");
    cloud_cmd->add_option("-o,--out", cloud_out, "dataset CSV")->required();
    cloud_cmd->add_option("--svg", cloud_svg, "scatter SVG to write");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        make_args.lambda_given = lambda_opt->count() > 0;

        if (make_cmd->parsed()) return run_state_make(make_args);
        if (stokes_cmd->parsed()) {
            return run_stokes(stokes_in, stokes_out,
                              validate_mode(stokes_no_validate, stokes_normalize));
        }
        if (measures_cmd->parsed()) {
            return run_measures(measures_in,
                                validate_mode(measures_no_validate, measures_normalize));
        }
        if (sim_cmd->parsed()) {
            return run_tomo_simulate(sim_in, sim_noise, sim_pairs, sim_seed, sim_out,
                                     validate_mode(sim_no_validate, sim_normalize));
        }
        if (inv_cmd->parsed()) return run_tomo_invert(inv_in, inv_out);
        if (vert_cmd->parsed()) {
            RegionDataset ds;
            ds.family = "vertices";
            const auto vertices = polygon_vertices();
            ds.points.assign(vertices.begin(), vertices.end());
            return emit_region_outputs(ds, vert_out, vert_svg);
        }
        if (wern_cmd->parsed()) {
            return emit_region_outputs(
                werner_sweep(bell(parse_bell(wern_bell)), wern_steps), wern_out,
                wern_svg);
        }
        if (seg_cmd->parsed()) {
            return emit_region_outputs(segment_sweep(parse_segment(seg_kind), seg_steps),
                                       seg_out, seg_svg);
        }
        if (cloud_cmd->parsed()) {
            RandomSpec spec;
            spec.kind = parse_ensemble(cloud_kind);
            spec.rank = cloud_rank;
            spec.terms = cloud_terms;
            spec.seed = cloud_seed;
            return emit_region_outputs(random_cloud(cloud_n, spec), cloud_out,
                                       cloud_svg);
        }
        std::cerr << "error: argument: no subcommand selected\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.category() << ": " << e.what() << "\n";
        return exit_code_for(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 70;
    }
}
