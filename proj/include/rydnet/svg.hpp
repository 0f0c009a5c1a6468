#pragma once

#include <string>
#include <vector>

#include "rydnet/analysis.hpp"
#include "rydnet/lattice.hpp"

namespace rydnet::cli {

// Lattice heatmap with a logarithmic color scale (light -> dark red).
// Values <= floor render as the lightest bin.
std::string heatmap_svg(const std::vector<double>& grid, const router::LatticeSpec& lattice,
                        const std::string& title);

// Loss-vs-radius curve family plot: one polyline per scattering time, minima
// marked with crosses, plus an argmin-locus inset.
std::string sweetspot_svg(const analysis::ScatteringSweep& sweep);

}  // namespace rydnet::cli
