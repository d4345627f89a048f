#include "stokes2p/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace stokes2p {

using nlohmann::json;

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::string format_coord(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(errcat::parse, e.what());  // includes line and column
    }
}

std::vector<std::vector<double>> read_matrix_field(const json& doc,
                                                   const std::string& field,
                                                   std::size_t dim) {
    if (!doc.contains(field)) {
        throw Error(errcat::parse, "missing field '" + field + "'");
    }
    const json& arr = doc.at(field);
    if (!arr.is_array() || arr.size() != dim) {
        throw Error(errcat::parse, "field '" + field + "' must be an array of " +
                                       std::to_string(dim) + " rows");
    }
    std::vector<std::vector<double>> out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const json& row = arr.at(r);
        if (!row.is_array() || row.size() != dim) {
            throw Error(errcat::parse, "field '" + field + "' row " + std::to_string(r) +
                                           " must have " + std::to_string(dim) +
                                           " entries");
        }
        out[r].resize(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            if (!row.at(c).is_number()) {
                throw Error(errcat::parse, "field '" + field + "' row " +
                                               std::to_string(r) + " entry " +
                                               std::to_string(c) + " is not a number");
            }
            out[r][c] = row.at(c).get<double>();
        }
    }
    return out;
}

}  // namespace

ComplexMatrix parse_state(const std::string& text, ValidateMode mode) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("dim") || !doc.at("dim").is_number_integer()) {
        throw Error(errcat::parse, "state document needs an integer 'dim' field");
    }
    const int dim = doc.at("dim").get<int>();
    if (dim != 2 && dim != 4) {
        throw Error(errcat::invalid_dimension,
                    "state dimension must be 2 or 4, got " + std::to_string(dim));
    }
    const auto re = read_matrix_field(doc, "re", static_cast<std::size_t>(dim));
    const auto im = read_matrix_field(doc, "im", static_cast<std::size_t>(dim));

    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = complexd(re[r][c], im[r][c]);

    if (mode == ValidateMode::normalize) {
        const complexd tr = m.trace();
        if (std::abs(tr) < 1e-12) {
            throw Error(errcat::validation, "cannot normalize a traceless matrix");
        }
        m *= complexd(1.0) / tr;
    }
    if (mode != ValidateMode::skip) {
        const DensityReport report = validate_density(m);
        if (!report.is_valid) {
            throw Error(errcat::validation,
                        "not a valid density matrix: " + report.describe_failures());
        }
    }
    return m;
}

namespace {

// shortest round-trip decimal, the JSON number format
std::string json_number(double value) { return json(value).dump(); }

std::string matrix_rows(const std::vector<std::vector<double>>& rows) {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        os << (r ? ",\n        " : "") << "[";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            os << (c ? ", " : "") << json_number(rows[r][c]);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string serialize_state(const ComplexMatrix& rho) {
    std::vector<std::vector<double>> re(static_cast<std::size_t>(rho.dim()));
    std::vector<std::vector<double>> im(static_cast<std::size_t>(rho.dim()));
    for (int r = 0; r < rho.dim(); ++r) {
        for (int c = 0; c < rho.dim(); ++c) {
            re[static_cast<std::size_t>(r)].push_back(rho(r, c).real());
            im[static_cast<std::size_t>(r)].push_back(rho(r, c).imag());
        }
    }
    std::ostringstream os;
    os << "{\n  \"dim\": " << rho.dim() << ",\n  \"im\": " << matrix_rows(im)
       << ",\n  \"re\": " << matrix_rows(re) << "\n}\n";
    return os.str();
}

StokesTensor parse_tensor(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) {
        throw Error(errcat::parse, "tensor document must be a JSON object");
    }
    const auto rows = read_matrix_field(doc, "s", 4);
    StokesTensor S;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) S(i, j) = rows[i][j];
    if (std::abs(S(0, 0) - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "tensor component s[0][0] must be 1 within 1e-9, got " << S(0, 0);
        throw Error(errcat::normalization, os.str());
    }
    return S;
}

std::string serialize_tensor(const StokesTensor& S) {
    std::vector<std::vector<double>> rows(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rows[static_cast<std::size_t>(i)].push_back(S(i, j));
    std::ostringstream os;
    os << "{\n  \"s\": " << matrix_rows(rows) << "\n}\n";
    return os.str();
}

bool looks_like_tensor(const std::string& text) {
    const json doc = parse_json(text);
    return doc.is_object() && doc.contains("s");
}

std::string serialize_records(const MeasurementScheme& scheme,
                              const std::vector<CoincidenceRecord>& records) {
    if (records.size() != scheme.settings.size()) {
        throw Error(errcat::argument, "record list does not align with the scheme");
    }
    bool counts_mode = false;
    if (!records.empty()) counts_mode = records.front().counts.has_value();

    std::ostringstream os;
    os << "setting_a,setting_b," << (counts_mode ? "counts" : "probability") << "\n";
    for (std::size_t m = 0; m < records.size(); ++m) {
        const auto& [a1, a2] = scheme.settings[m];
        if (a1.label == AnalyzerLabel::custom || a2.label == AnalyzerLabel::custom) {
            throw Error(errcat::argument, "cannot serialize custom analyzers");
        }
        const CoincidenceRecord& rec = records[m];
        if (rec.counts.has_value() != counts_mode) {
            throw Error(errcat::argument, "records mix probability and counts modes");
        }
        const double value = counts_mode ? *rec.counts : *rec.probability;
        os << to_string(a1.label) << ',' << to_string(a2.label) << ','
           << format_full(value) << "\n";
    }
    return os.str();
}

ParsedRecords parse_records(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(errcat::parse, "empty records file");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();

    bool counts_mode;
    if (line == "setting_a,setting_b,probability") {
        counts_mode = false;
    } else if (line == "setting_a,setting_b,counts") {
        counts_mode = true;
    } else {
        throw Error(errcat::parse, "line 1: unrecognized records header '" + line + "'");
    }

    ParsedRecords out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw Error(errcat::parse,
                        "line " + std::to_string(line_no) + ": expected three fields");
        }
        const std::string a_text = line.substr(0, c1);
        const std::string b_text = line.substr(c1 + 1, c2 - c1 - 1);
        const std::string v_text = line.substr(c2 + 1);

        Analyzer a1 = canonical_analyzer(analyzer_label_from_string(a_text));
        Analyzer a2 = canonical_analyzer(analyzer_label_from_string(b_text));

        char* end = nullptr;
        const double value = std::strtod(v_text.c_str(), &end);
        if (end == v_text.c_str() || *end != '\0' || !std::isfinite(value)) {
            throw Error(errcat::parse, "line " + std::to_string(line_no) +
                                           ": bad numeric value '" + v_text + "'");
        }
        if (value < 0.0) {
            throw Error(errcat::parse, "line " + std::to_string(line_no) +
                                           ": negative value '" + v_text + "'");
        }

        CoincidenceRecord rec;
        rec.setting_index = static_cast<int>(out.records.size());
        if (counts_mode) {
            rec.counts = value;
        } else {
            rec.probability = value;
        }
        out.scheme.settings.emplace_back(std::move(a1), std::move(a2));
        out.records.push_back(rec);
    }
    return out;
}

std::string serialize_region_csv(const std::vector<RegionDataset>& datasets) {
    std::ostringstream os;
    os << "x,y,purity,tag,param\n";
    for (const RegionDataset& ds : datasets) {
        for (const RegionPoint& pt : ds.points) {
            os << format_full(pt.x) << ',' << format_full(pt.y) << ','
               << format_full(pt.purity) << ',' << pt.tag << ','
               << format_full(pt.param) << "\n";
        }
    }
    return os.str();
}

namespace {

constexpr double kXMin = -0.6, kXMax = 1.1;
constexpr double kYMin = -0.1, kYMax = 1.1;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

bool is_sweep_family(const std::string& family) {
    return family.rfind("werner", 0) == 0 || family.rfind("segment", 0) == 0;
}

}  // namespace

std::string emit_svg_scatter(const std::vector<RegionDataset>& datasets,
                             const SvgOptions& options) {
    if (datasets.empty()) {
        throw Error(errcat::argument, "no datasets to plot");
    }
    for (const RegionDataset& ds : datasets) {
        if (ds.points.empty()) {
            throw Error(errcat::argument, "dataset '" + ds.family + "' is empty");
        }
    }

    const double ml = 50, mr = 15, mt = 15, mb = 40;
    const double plot_w = options.width - ml - mr;
    const double plot_h = options.height - mt - mb;
    auto px = [&](double x) { return ml + (x - kXMin) / (kXMax - kXMin) * plot_w; };
    auto py = [&](double y) { return mt + (kYMax - y) / (kYMax - kYMin) * plot_h; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << options.width << "\" height=\"" << options.height << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\""
       << options.height << "\" fill=\"white\"/>\n";

    // frame and zero axes
    os << "<rect x=\"" << format_coord(ml) << "\" y=\"" << format_coord(mt)
       << "\" width=\"" << format_coord(plot_w) << "\" height=\"" << format_coord(plot_h)
       << "\" fill=\"none\" stroke=\"#404040\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << format_coord(px(0.0)) << "\" y1=\"" << format_coord(py(kYMin))
       << "\" x2=\"" << format_coord(px(0.0)) << "\" y2=\"" << format_coord(py(kYMax))
       << "\" stroke=\"#c0c0c0\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << format_coord(px(kXMin)) << "\" y1=\"" << format_coord(py(0.0))
       << "\" x2=\"" << format_coord(px(kXMax)) << "\" y2=\"" << format_coord(py(0.0))
       << "\" stroke=\"#c0c0c0\" stroke-width=\"1\"/>\n";

    // tick labels
    const double xticks[] = {-0.5, 0.0, 0.5, 1.0};
    for (double t : xticks) {
        os << "<text x=\"" << format_coord(px(t)) << "\" y=\""
           << format_coord(py(kYMin) + 16) << "\" font-family=\"sans-serif\" "
           << "font-size=\"11\" text-anchor=\"middle\">" << format_coord(t)
           << "</text>\n";
    }
    const double yticks[] = {0.0, 0.5, 1.0};
    for (double t : yticks) {
        os << "<text x=\"" << format_coord(ml - 6) << "\" y=\""
           << format_coord(py(t) + 4) << "\" font-family=\"sans-serif\" "
           << "font-size=\"11\" text-anchor=\"end\">" << format_coord(t) << "</text>\n";
    }

    // the feasibility polygon with its labeled vertices
    const auto vertices = polygon_vertices();
    os << "<polygon points=\"";
    const int outline[] = {1, 0, 4, 3};  // B A E D
    for (int i = 0; i < 4; ++i) {
        const RegionPoint& v = vertices[static_cast<std::size_t>(outline[i])];
        if (i) os << ' ';
        os << format_coord(px(v.x)) << ',' << format_coord(py(v.y));
    }
    os << "\" fill=\"none\" stroke=\"#808080\" stroke-width=\"1\" "
          "stroke-dasharray=\"4,3\"/>\n";
    for (const RegionPoint& v : vertices) {
        os << "<circle cx=\"" << format_coord(px(v.x)) << "\" cy=\""
           << format_coord(py(v.y)) << "\" r=\"3\" fill=\"black\"/>\n";
        os << "<text x=\"" << format_coord(px(v.x) + 6) << "\" y=\""
           << format_coord(py(v.y) - 6) << "\" font-family=\"sans-serif\" "
           << "font-size=\"13\">" << v.tag << "</text>\n";
    }

    // datasets
    std::size_t color_index = 0;
    for (const RegionDataset& ds : datasets) {
        const char* color = kPalette[color_index % (sizeof kPalette / sizeof *kPalette)];
        ++color_index;
        if (is_sweep_family(ds.family) && ds.points.size() > 1) {
            os << "<polyline points=\"";
            for (std::size_t k = 0; k < ds.points.size(); ++k) {
                if (k) os << ' ';
                os << format_coord(px(ds.points[k].x)) << ','
                   << format_coord(py(ds.points[k].y));
            }
            os << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        }
        for (const RegionPoint& pt : ds.points) {
            os << "<circle cx=\"" << format_coord(px(pt.x)) << "\" cy=\""
               << format_coord(py(pt.y)) << "\" r=\"2\" fill=\"" << color
               << "\" fill-opacity=\"0.7\"/>\n";
        }
    }

    os << "</svg>\n";
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(errcat::io, "cannot open '" + path + "' for reading");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(errcat::io, "cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw Error(errcat::io, "failed writing '" + path + "'");
    }
}

}  // namespace stokes2p
