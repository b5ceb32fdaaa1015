#include "imag/sweep.hpp"

#include <ostream>
#include <sstream>

#include "imag/io.hpp"
#include "imag/measures.hpp"

namespace imag {

GridAxis parse_grid_axis(const std::string& spec) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream is(spec);
    while (std::getline(is, token, ':')) parts.push_back(token);
    if (parts.size() != 4 || parts[0].empty()) {
        throw ParseFailed("grid axis must be name:lo:hi:count, got \"" + spec + "\"");
    }
    GridAxis axis;
    axis.name = parts[0];
    try {
        std::size_t used = 0;
        axis.lo = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        axis.hi = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        axis.count = std::stoi(parts[3], &used);
        if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
    } catch (const std::exception&) {
        throw ParseFailed("grid axis has non-numeric bounds: \"" + spec + "\"");
    }
    if (axis.count < 1) {
        throw ParseFailed("grid axis count must be >= 1: \"" + spec + "\"");
    }
    return axis;
}

std::vector<GridAxis> parse_grid(const std::string& spec) {
    std::vector<GridAxis> axes;
    std::string token;
    std::istringstream is(spec);
    while (std::getline(is, token, ',')) {
        // trim surrounding spaces
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        axes.push_back(parse_grid_axis(token.substr(b, e - b + 1)));
    }
    if (axes.empty()) throw ParseFailed("empty grid spec");
    return axes;
}

void qubit_sweep_csv(const GridAxis& y_axis, const GridAxis& mu_axis, std::ostream& out) {
    out << "y,mu,value\n";
    for (int i = 0; i < y_axis.count; ++i) {
        const double y = y_axis.at(i);
        const DensityMatrix rho = from_bloch({0.0, y, 0.0});
        for (int j = 0; j < mu_axis.count; ++j) {
            const double mu = mu_axis.at(j);
            const double value = m_tsallis(rho, mu).value;
            out << format_double(y) << ',' << format_double(mu) << ',' << format_double(value)
                << '\n';
        }
    }
}

namespace {

OneModeParams with_axis(OneModeParams p, const std::string& name, double value) {
    if (name == "x2") {
        p.alpha = std::complex<double>(p.alpha.real(), value / 2.0);
    } else if (name == "nu") {
        p.nu = value;
    } else if (name == "zeta") {
        p.zeta_abs = value;
    } else if (name == "theta") {
        p.theta = value;
    } else {
        throw ParseFailed("unknown gaussian sweep axis \"" + name +
                          "\" (expected x2, nu, zeta or theta)");
    }
    return p;
}

} // namespace

void gaussian_sweep_csv(const std::vector<GridAxis>& axes, const OneModeParams& base, double mu,
                        std::ostream& out) {
    if (axes.empty() || axes.size() > 2) {
        throw ParseFailed("gaussian sweep takes one or two axes");
    }
    for (std::size_t a = 0; a < axes.size(); ++a) {
        out << axes[a].name << ',';
    }
    out << "value\n";
    const GridAxis outer = axes[0];
    const GridAxis inner = axes.size() == 2 ? axes[1] : GridAxis{"", 0.0, 0.0, 1};
    for (int i = 0; i < outer.count; ++i) {
        OneModeParams p = with_axis(base, outer.name, outer.at(i));
        for (int j = 0; j < inner.count; ++j) {
            if (axes.size() == 2) p = with_axis(p, inner.name, inner.at(j));
            const double value = m_tsallis_gaussian(one_mode_from_params(p), mu).value;
            out << format_double(outer.at(i)) << ',';
            if (axes.size() == 2) out << format_double(inner.at(j)) << ',';
            out << format_double(value) << '\n';
        }
    }
}

} // namespace imag
