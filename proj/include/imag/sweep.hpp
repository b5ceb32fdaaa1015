#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "imag/gaussian.hpp"

namespace imag {

struct GridAxis {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    int count = 1;

    double at(int i) const {
        if (count <= 1) return lo;
        return lo + i * (hi - lo) / (count - 1);
    }
};

// Parses "name:lo:hi:count". Throws ParseFailed.
GridAxis parse_grid_axis(const std::string& spec);

// Parses a comma-separated list of axis specs.
std::vector<GridAxis> parse_grid(const std::string& spec);

// Fig.-1-style surface: M_{T,mu} of the Bloch state (0, y, 0) over a
// (y, mu) grid, computed through the generic eigen-path so the emitted
// CSV doubles as a closed-form cross-check. Header "y,mu,value".
void qubit_sweep_csv(const GridAxis& y_axis, const GridAxis& mu_axis, std::ostream& out);

// One-mode Gaussian sweep over axes drawn from {x2, nu, zeta, theta}
// (one or two axes); remaining parameters come from `base`, the measure is
// evaluated at `mu`. Header lists the axis names then "value".
void gaussian_sweep_csv(const std::vector<GridAxis>& axes, const OneModeParams& base, double mu,
                        std::ostream& out);

} // namespace imag
