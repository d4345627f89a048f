#pragma once

// File formats: density-matrix and Stokes-tensor JSON, coincidence-record
// CSV, region-dataset CSV, and the SVG scatter. All emitters produce
// byte-stable output: fixed field order, fixed number formatting, '\n'
// line endings.

#include <string>
#include <vector>

#include "stokes2p/region.hpp"
#include "stokes2p/states.hpp"
#include "stokes2p/stokes.hpp"
#include "stokes2p/tomography.hpp"

namespace stokes2p {

enum class ValidateMode { strict, normalize, skip };

// {"dim": d, "im": [[...]], "re": [[...]]} with d in {2,4}.
ComplexMatrix parse_state(const std::string& text,
                          ValidateMode mode = ValidateMode::strict);
std::string serialize_state(const ComplexMatrix& rho);

// {"s": [[4x4]]} with s[0][0] = 1 within 1e-9.
StokesTensor parse_tensor(const std::string& text);
std::string serialize_tensor(const StokesTensor& S);

// True if the JSON document is a tensor file (has "s") rather than a state.
bool looks_like_tensor(const std::string& text);

// CSV with header setting_a,setting_b,probability or setting_a,setting_b,counts.
struct ParsedRecords {
    MeasurementScheme scheme;
    std::vector<CoincidenceRecord> records;
};
std::string serialize_records(const MeasurementScheme& scheme,
                              const std::vector<CoincidenceRecord>& records);
ParsedRecords parse_records(const std::string& text);

// CSV with header x,y,purity,tag,param.
std::string serialize_region_csv(const std::vector<RegionDataset>& datasets);

struct SvgOptions {
    int width = 720;
    int height = 540;
};

// Scatter of the datasets over the fixed axes x in [-0.6, 1.1], y in
// [-0.1, 1.1], with the polygon A-E always drawn and labeled. Sweep
// families (werner, segment) are connected with a polyline.
std::string emit_svg_scatter(const std::vector<RegionDataset>& datasets,
                             const SvgOptions& options = {});

// 17-significant-digit decimal, the CSV number format.
std::string format_full(double value);

// Whole-file helpers (binary mode, '\n' endings preserved).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace stokes2p
