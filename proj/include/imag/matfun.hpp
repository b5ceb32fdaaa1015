#pragma once

#include <Eigen/Dense>

#include "imag/errors.hpp"

namespace imag {

using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Central numerical tolerances. All checks scale by max(1, ||input||_max).
namespace tol {
inline constexpr double hermiticity = 1e-10;
inline constexpr double symmetry = 1e-10;
inline constexpr double psd_floor = 1e-10;       // eigenvalues in [-psd_floor, 0) clip to 0
inline constexpr double factor_residual = 1e-9;  // (K')^T K' - M
inline constexpr double trace_unit = 1e-10;
inline constexpr double is_real = 1e-10;
inline constexpr double defect_psd = 1e-9;       // real-operation completeness defect
inline constexpr double uncertainty = 1e-8;      // min eig of V + i*Omega
inline constexpr double symplectic = 1e-8;       // ||S Omega S^T - Omega||_max
inline constexpr double mu_margin = 1e-6;        // measures accept mu in (mu_margin, 1 - mu_margin)
} // namespace tol

inline double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }
inline double max_abs(const RealMatrix& a) { return a.cwiseAbs().maxCoeff(); }

// Scale factor for relative tolerances.
inline double tol_scale(const Matrix& a) { return std::max(1.0, max_abs(a)); }
inline double tol_scale(const RealMatrix& a) { return std::max(1.0, max_abs(a)); }

struct HermitianEig {
    RealVector eigenvalues; // ascending
    Matrix eigenvectors;    // unitary, columns
};

// Eigendecomposition of a Hermitian matrix. Throws NotHermitian if the
// max asymmetry of H - H^dagger exceeds the tolerance (relative to
// max(1, ||H||_max)).
HermitianEig hermitian_eig(const Matrix& h, double herm_tol = tol::hermiticity);

// A^mu for Hermitian PSD A and mu in (0, 1], with the convention 0^mu := 0.
// Eigenvalues in [-psd_floor, 0) (relative scale) are clipped to 0; anything
// below the floor throws NotPSD.
Matrix matrix_power(const Matrix& a, double mu, double psd_floor = tol::psd_floor);

inline Matrix matrix_sqrt(const Matrix& a, double psd_floor = tol::psd_floor) {
    return matrix_power(a, 0.5, psd_floor);
}

// Sum of singular values.
double trace_norm(const Matrix& a);

// Real factor K' with (K')^T K' = M for real symmetric PSD M, via the
// symmetric square root (handles rank deficiency). Same floor policy as
// matrix_power.
RealMatrix real_psd_factor(const RealMatrix& m, double psd_floor = tol::psd_floor);

struct SymmetricEig {
    RealMatrix q;           // orthogonal, Q Sym Q^T diagonal
    RealVector eigenvalues; // ascending
};

// Eigendecomposition of a real symmetric matrix. Throws NotSymmetric.
SymmetricEig symmetric_real_eig(const RealMatrix& sym, double sym_tol = tol::symmetry);

} // namespace imag
