#pragma once

#include <iosfwd>
#include <string>

#include "imag/channels.hpp"
#include "imag/gaussian.hpp"
#include "imag/states.hpp"

namespace imag {

// Locale-independent double formatting with 17 significant digits
// (round-trip safe); shared by all JSON/CSV emitters.
std::string format_double(double v);

// State file: {"dim": d, "matrix": [[[re, im], ...], ...]} row-major.
// Throws ParseFailed on malformed input, ValidationFailed on invariant breaks.
DensityMatrix load_state_json(std::istream& in);
DensityMatrix load_state_json_file(const std::string& path);
std::string state_to_json(const DensityMatrix& rho);

// Operation file: {"dim": d, "kraus": [[[row of reals], ...], ...]}.
RealOperation load_operation_json(std::istream& in);
RealOperation load_operation_json_file(const std::string& path);
std::string operation_to_json(const RealOperation& op);

// Gaussian file: {"modes": N, "mean": [...], "cov": [[...]],
//                 "convention": "q=a+ad, p=-i(a-ad)"}.
GaussianState load_gaussian_json(std::istream& in);
GaussianState load_gaussian_json_file(const std::string& path);
std::string gaussian_to_json(const GaussianState& g);

} // namespace imag
