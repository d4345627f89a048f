#include "stokes2p/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stokes2p/rng.hpp"

namespace stokes2p {

std::string to_string(AnalyzerLabel label) {
    switch (label) {
        case AnalyzerLabel::H: return "H";
        case AnalyzerLabel::V: return "V";
        case AnalyzerLabel::D45: return "D45";
        case AnalyzerLabel::A135: return "A135";
        case AnalyzerLabel::R: return "R";
        case AnalyzerLabel::L: return "L";
        case AnalyzerLabel::custom: return "custom";
    }
    return "?";
}

AnalyzerLabel analyzer_label_from_string(const std::string& text) {
    if (text == "H") return AnalyzerLabel::H;
    if (text == "V") return AnalyzerLabel::V;
    if (text == "D45") return AnalyzerLabel::D45;
    if (text == "A135") return AnalyzerLabel::A135;
    if (text == "R") return AnalyzerLabel::R;
    if (text == "L") return AnalyzerLabel::L;
    throw Error(errcat::parse, "unknown analyzer label '" + text + "'");
}

Analyzer canonical_analyzer(AnalyzerLabel label) {
    switch (label) {
        case AnalyzerLabel::H: return {label, JonesVector::horizontal(),
                                       JonesVector::horizontal().projector()};
        case AnalyzerLabel::V: return {label, JonesVector::vertical(),
                                       JonesVector::vertical().projector()};
        case AnalyzerLabel::D45: return {label, JonesVector::diagonal(),
                                         JonesVector::diagonal().projector()};
        case AnalyzerLabel::A135: return {label, JonesVector::antidiagonal(),
                                          JonesVector::antidiagonal().projector()};
        case AnalyzerLabel::R: return {label, JonesVector::right_circular(),
                                       JonesVector::right_circular().projector()};
        case AnalyzerLabel::L: return {label, JonesVector::left_circular(),
                                       JonesVector::left_circular().projector()};
        case AnalyzerLabel::custom:
            throw Error(errcat::argument,
                        "custom analyzer needs an explicit Jones vector");
    }
    throw Error(errcat::argument, "unknown analyzer label");
}

Analyzer custom_analyzer(const JonesVector& jones) {
    return {AnalyzerLabel::custom, jones, jones.projector()};
}

MeasurementScheme canonical_scheme() {
    using L = AnalyzerLabel;
    static constexpr std::array<std::pair<L, L>, 16> kPairs{{
        {L::H, L::H},   {L::H, L::D45}, {L::H, L::R},   {L::H, L::L},
        {L::D45, L::H}, {L::D45, L::D45}, {L::D45, L::R}, {L::D45, L::L},
        {L::R, L::H},   {L::R, L::D45}, {L::R, L::R},
        {L::L, L::H},   {L::L, L::L},   {L::L, L::D45}, {L::L, L::R},
        {L::R, L::L},
    }};
    MeasurementScheme scheme;
    scheme.settings.reserve(kPairs.size());
    for (const auto& [a, b] : kPairs) {
        scheme.settings.emplace_back(canonical_analyzer(a), canonical_analyzer(b));
    }
    return scheme;
}

double coincidence_probability(const TwoPhotonState& rho, const Analyzer& a1,
                               const Analyzer& a2) {
    const ComplexMatrix joint = tensor_product(a1.projector, a2.projector);
    complexd t = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) t += rho.rho()(r, c) * joint(c, r);
    if (std::abs(t.imag()) > 1e-12) {
        throw Error(errcat::non_hermitian, "coincidence probability came out complex");
    }
    return std::clamp(t.real(), 0.0, 1.0);
}

namespace {

constexpr double kSingularTol = 1e-12;

// Gaussian elimination with partial pivoting; returns false on singularity.
bool solve_linear(std::vector<std::array<double, 16>> a, std::array<double, 16> b,
                  std::array<double, 16>& x) {
    const int n = 16;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < kSingularTol) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return true;
}

double inf_norm(const std::vector<std::array<double, 16>>& a) {
    double best = 0.0;
    for (const auto& row : a) {
        double sum = 0.0;
        for (double v : row) sum += std::abs(v);
        best = std::max(best, sum);
    }
    return best;
}

// Rows that reduce to (near-)zero against the previous rows; used to name
// linearly dependent settings in the singular-scheme error.
std::vector<int> dependent_rows(const std::vector<std::array<double, 16>>& matrix) {
    std::vector<std::array<double, 16>> basis;
    std::vector<int> pivot_col;
    std::vector<int> dependent;
    for (std::size_t m = 0; m < matrix.size(); ++m) {
        std::array<double, 16> row = matrix[m];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const double f = row[pivot_col[k]] / basis[k][pivot_col[k]];
            if (f == 0.0) continue;
            for (int c = 0; c < 16; ++c) row[c] -= f * basis[k][c];
        }
        int piv = 0;
        for (int c = 1; c < 16; ++c)
            if (std::abs(row[c]) > std::abs(row[piv])) piv = c;
        if (std::abs(row[piv]) < kSingularTol) {
            dependent.push_back(static_cast<int>(m));
        } else {
            basis.push_back(row);
            pivot_col.push_back(piv);
        }
    }
    return dependent;
}

StokesTensor flat_to_tensor(const std::array<double, 16>& flat) {
    StokesTensor S;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) S(i, j) = flat[4 * i + j];
    return S;
}

}  // namespace

DesignMatrix design_matrix(const MeasurementScheme& scheme) {
    if (scheme.settings.size() != 16) {
        throw Error(errcat::argument, "inversion scheme must have exactly 16 settings, got " +
                                          std::to_string(scheme.settings.size()));
    }
    DesignMatrix design;
    design.rows.resize(16);
    for (std::size_t m = 0; m < 16; ++m) {
        const ComplexMatrix joint = tensor_product(scheme.settings[m].first.projector,
                                                   scheme.settings[m].second.projector);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const ComplexMatrix& sigma = two_photon_pauli(i, j);
                complexd t = 0.0;
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c) t += sigma(r, c) * joint(c, r);
                if (std::abs(t.imag()) > 1e-12) {
                    throw Error(errcat::non_hermitian,
                                "design matrix entry came out complex");
                }
                design.rows[m][4 * i + j] = 0.25 * t.real();
            }
        }
    }

    // condition estimate: solve the 16 unit systems for the inverse
    std::vector<std::array<double, 16>> inverse(16);
    for (int k = 0; k < 16; ++k) {
        std::array<double, 16> e{};
        e[k] = 1.0;
        std::array<double, 16> col{};
        if (!solve_linear(design.rows, e, col)) {
            const std::vector<int> dep = dependent_rows(design.rows);
            std::ostringstream os;
            os << "scheme is singular; settings linearly dependent on earlier ones:";
            for (int idx : dep) os << ' ' << idx;
            throw Error(errcat::singular_scheme, os.str());
        }
        for (int r = 0; r < 16; ++r) inverse[r][k] = col[r];
    }
    design.condition_estimate = inf_norm(design.rows) * inf_norm(inverse);
    return design;
}

std::vector<CoincidenceRecord> simulate(const TwoPhotonState& rho,
                                        const MeasurementScheme& scheme,
                                        const NoiseSpec& noise) {
    if (noise.kind == NoiseSpec::Kind::poisson &&
        !(noise.expected_pairs > 0.0 && std::isfinite(noise.expected_pairs))) {
        throw Error(errcat::spec, "poisson noise needs expected_pairs > 0");
    }
    std::vector<CoincidenceRecord> records;
    records.reserve(scheme.settings.size());
    for (std::size_t m = 0; m < scheme.settings.size(); ++m) {
        const double p = coincidence_probability(rho, scheme.settings[m].first,
                                                 scheme.settings[m].second);
        CoincidenceRecord rec;
        rec.setting_index = static_cast<int>(m);
        if (noise.kind == NoiseSpec::Kind::none) {
            rec.probability = p;
        } else {
            RngStream rng = RngStream::substream(noise.seed, m);
            rec.counts = static_cast<double>(rng.poisson(noise.expected_pairs * p));
            rec.duration_flux = noise.expected_pairs;
        }
        records.push_back(rec);
    }
    return records;
}

TomographyResult invert(const std::vector<CoincidenceRecord>& records,
                        const MeasurementScheme& scheme) {
    if (records.size() != scheme.settings.size()) {
        throw Error(errcat::argument, "record list does not align with the scheme");
    }
    bool any_prob = false;
    bool any_counts = false;
    std::array<double, 16> rhs{};
    for (std::size_t m = 0; m < records.size(); ++m) {
        const CoincidenceRecord& rec = records[m];
        if (rec.setting_index != static_cast<int>(m)) {
            throw Error(errcat::argument, "record order does not align with the scheme");
        }
        if (rec.probability.has_value() == rec.counts.has_value()) {
            throw Error(errcat::argument,
                        "each record must carry exactly one of probability/counts");
        }
        if (rec.probability) {
            any_prob = true;
            rhs[m] = *rec.probability;
        } else {
            any_counts = true;
            rhs[m] = *rec.counts;
        }
    }
    if (any_prob && any_counts) {
        throw Error(errcat::argument, "records mix probability and counts modes");
    }

    const DesignMatrix design = design_matrix(scheme);
    std::array<double, 16> solution{};
    if (!solve_linear(design.rows, rhs, solution)) {
        throw Error(errcat::singular_scheme, "scheme is singular");  // unreachable
    }

    TomographyResult result;
    result.condition_estimate = design.condition_estimate;

    double residual = 0.0;
    for (int m = 0; m < 16; ++m) {
        double predicted = 0.0;
        for (int c = 0; c < 16; ++c) predicted += design.rows[m][c] * solution[c];
        residual = std::max(residual, std::abs(predicted - rhs[m]));
    }
    result.max_residual = residual;

    const double scale = solution[0];  // flux * S_00 in counts mode, S_00 otherwise
    if (!(scale > 0.0)) {
        std::ostringstream os;
        os << "recovered normalization component is " << scale
           << "; cannot rescale to S_00 = 1";
        throw Error(errcat::degenerate_normalization, os.str());
    }
    std::array<double, 16> normalized{};
    for (int c = 0; c < 16; ++c) normalized[c] = solution[c] / scale;
    result.tensor = flat_to_tensor(normalized);
    if (any_counts) result.flux_estimate = scale;

    result.physical = density_from_stokes2(result.tensor).report.is_valid;
    return result;
}

}  // namespace stokes2p
