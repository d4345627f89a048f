#pragma once

// Coincidence tomography: polarization analyzers, the 16-setting scheme,
// exact coincidence probabilities, Poisson count simulation, and linear
// inversion back to the two-photon Stokes tensor.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stokes2p/states.hpp"
#include "stokes2p/stokes.hpp"

namespace stokes2p {

enum class AnalyzerLabel { H, V, D45, A135, R, L, custom };

std::string to_string(AnalyzerLabel label);
AnalyzerLabel analyzer_label_from_string(const std::string& text);

struct Analyzer {
    AnalyzerLabel label;
    JonesVector jones;
    ComplexMatrix projector;  // |jones><jones|
};

Analyzer canonical_analyzer(AnalyzerLabel label);
Analyzer custom_analyzer(const JonesVector& jones);

struct MeasurementScheme {
    std::vector<std::pair<Analyzer, Analyzer>> settings;
};

// The fixed 16-pair coincidence scheme over {H, D45, R, L} on both arms.
MeasurementScheme canonical_scheme();

// Tr(rho (P1 x P2)), clamped of round-off, in [0,1].
double coincidence_probability(const TwoPhotonState& rho, const Analyzer& a1,
                               const Analyzer& a2);

struct DesignMatrix {
    // row m, column 4*i+j: quarter-trace of sigma_ij against setting m
    std::vector<std::array<double, 16>> rows;
    double condition_estimate = 0.0;  // inf-norm condition number
};

// Throws a singular-scheme error (naming the dependent settings) if the
// 16 settings do not determine all 16 tensor components.
DesignMatrix design_matrix(const MeasurementScheme& scheme);

struct CoincidenceRecord {
    int setting_index = 0;
    std::optional<double> probability;       // noiseless mode
    std::optional<double> counts;            // counts mode (integer-valued when sampled)
    std::optional<double> duration_flux;     // expected pairs per setting, if known
};

struct NoiseSpec {
    enum class Kind { none, poisson };
    Kind kind = Kind::none;
    double expected_pairs = 0.0;  // poisson only, > 0
    std::uint64_t seed = 0;

    static NoiseSpec none() { return {}; }
    static NoiseSpec poisson(double expected_pairs, std::uint64_t seed) {
        return {Kind::poisson, expected_pairs, seed};
    }
};

// Noiseless mode records exact probabilities; Poisson mode draws counts with
// mean expected_pairs * p per setting from a per-setting substream of seed.
std::vector<CoincidenceRecord> simulate(const TwoPhotonState& rho,
                                        const MeasurementScheme& scheme,
                                        const NoiseSpec& noise);

struct TomographyResult {
    StokesTensor tensor;                 // normalized so S_00 = 1
    std::optional<double> flux_estimate; // counts mode: recovered pairs per setting
    double condition_estimate = 0.0;
    double max_residual = 0.0;
    bool physical = false;
};

TomographyResult invert(const std::vector<CoincidenceRecord>& records,
                        const MeasurementScheme& scheme);

}  // namespace stokes2p
