#pragma once

// Datasets over the (P12^2, Pbar^2) plane: the polygon vertices A-E, the
// pure-state edge, Werner sweeps, the AE/DE/AC segments, and random clouds
// filling the feasible region. The x axis is signed: x = P12^2 where that
// is nonnegative, x = -Pm^2 otherwise.

#include <array>
#include <string>
#include <vector>

#include "stokes2p/measures.hpp"
#include "stokes2p/states.hpp"

namespace stokes2p {

struct RegionPoint {
    double x = 0.0;       // signed squared two-photon degree of polarization
    double y = 0.0;       // average squared one-photon degree of polarization
    double purity = 0.0;
    std::string tag;
    double param = 0.0;   // sweep parameter or point index
};

struct RegionDataset {
    std::string family;
    std::vector<RegionPoint> points;
};

// Evaluate one state into its region coordinates.
RegionPoint region_point(const TwoPhotonState& state, const std::string& tag,
                         double param);

// A=(0,1) B=(1,0) C=(0,0) D=(-0.5,0) E=(-0.5,0.5), tagged "A".."E".
std::array<RegionPoint, 5> polygon_vertices();

// lambda from 1 down to 0 over nsteps points; straight line from the pure
// locus to the maximally mixed point.
RegionDataset werner_sweep(const TwoPhotonState& psi, int nsteps);

enum class SegmentKind { AE, DE, AC_classical };

RegionDataset segment_sweep(SegmentKind kind, int nsteps);

RegionDataset random_cloud(int n, const RandomSpec& spec);

}  // namespace stokes2p
