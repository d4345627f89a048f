#include "stokes2p/region.hpp"

#include <cmath>
#include <sstream>

#include "stokes2p/rng.hpp"

namespace stokes2p {

namespace {

void check_point(const RegionPoint& pt) {
    constexpr double eps = 1e-9;
    if (pt.x < -0.5 - eps || pt.x > 1.0 + eps || pt.y < -eps || pt.y > 1.0 + eps ||
        pt.x + pt.y > 1.0 + eps) {
        std::ostringstream os;
        os << "region point (" << pt.x << ", " << pt.y << ") outside feasible bounds";
        throw Error(errcat::validation, os.str());
    }
}

}  // namespace

RegionPoint region_point(const TwoPhotonState& state, const std::string& tag,
                         double param) {
    const MeasureSet m = two_photon_measures(stokes_from_density2(state));
    RegionPoint pt{m.p12_sq_signed, m.pbar_sq, m.purity, tag, param};
    check_point(pt);
    return pt;
}

std::array<RegionPoint, 5> polygon_vertices() {
    auto vertex = [](double x, double y, const char* tag, double param) {
        return RegionPoint{x, y, 0.5 * (1.0 + x + y), tag, param};
    };
    return {vertex(0.0, 1.0, "A", 0), vertex(1.0, 0.0, "B", 1),
            vertex(0.0, 0.0, "C", 2), vertex(-0.5, 0.0, "D", 3),
            vertex(-0.5, 0.5, "E", 4)};
}

RegionDataset werner_sweep(const TwoPhotonState& psi, int nsteps) {
    if (nsteps < 2) {
        throw Error(errcat::argument, "sweep needs at least two steps");
    }
    RegionDataset out;
    out.family = "werner";
    out.points.reserve(static_cast<std::size_t>(nsteps));
    for (int k = 0; k < nsteps; ++k) {
        const double lambda = 1.0 - static_cast<double>(k) / (nsteps - 1);
        out.points.push_back(region_point(werner(psi, lambda), out.family, lambda));
    }
    return out;
}

RegionDataset segment_sweep(SegmentKind kind, int nsteps) {
    if (nsteps < 2) {
        throw Error(errcat::argument, "sweep needs at least two steps");
    }
    const JonesVector h = JonesVector::horizontal();
    const JonesVector v = JonesVector::vertical();

    RegionDataset out;
    switch (kind) {
        case SegmentKind::AE: out.family = "segment:AE"; break;
        case SegmentKind::DE: out.family = "segment:DE"; break;
        case SegmentKind::AC_classical: out.family = "segment:AC"; break;
    }
    out.points.reserve(static_cast<std::size_t>(nsteps));

    // the two endpoint states of the DE mixing construction
    const TwoPhotonState h_unpolarized = two_product_mixture(h, h, h, v, 0.5);
    const TwoPhotonState v_unpolarized = two_product_mixture(v, h, v, v, 0.5);

    for (int k = 0; k < nsteps; ++k) {
        const double t = static_cast<double>(k) / (nsteps - 1);
        TwoPhotonState state = [&] {
            switch (kind) {
                case SegmentKind::AE:
                    return two_product_mixture(h, h, h, v, t);
                case SegmentKind::DE:
                    return convex_mix({{t, h_unpolarized}, {1.0 - t, v_unpolarized}});
                case SegmentKind::AC_classical:
                default:
                    return two_product_mixture(h, h, v, v, t);
            }
        }();
        out.points.push_back(region_point(state, out.family, t));
    }
    return out;
}

RegionDataset random_cloud(int n, const RandomSpec& spec) {
    if (n < 1) {
        throw Error(errcat::argument, "cloud needs at least one point");
    }
    RegionDataset out;
    switch (spec.kind) {
        case RandomKind::haar_pure: out.family = "cloud:haar-pure"; break;
        case RandomKind::ginibre_mixed: out.family = "cloud:ginibre-mixed"; break;
        case RandomKind::product_mixture: out.family = "cloud:product-mixture"; break;
    }
    out.points.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        RandomSpec point_spec = spec;
        point_spec.seed = substream_seed(spec.seed, static_cast<std::uint64_t>(k));
        out.points.push_back(
            region_point(random_state(point_spec), out.family, static_cast<double>(k)));
    }
    return out;
}

}  // namespace stokes2p
