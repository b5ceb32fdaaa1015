#include "imag/matfun.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <sstream>

namespace imag {

namespace {

void require_square(const Matrix& a, const char* who) {
    if (a.rows() != a.cols()) {
        std::ostringstream os;
        os << who << ": expected square matrix, got " << a.rows() << "x" << a.cols();
        throw DimensionMismatch(os.str());
    }
}

} // namespace

HermitianEig hermitian_eig(const Matrix& h, double herm_tol) {
    require_square(h, "hermitian_eig");
    const double asym = max_abs(Matrix(h - h.adjoint()));
    if (asym > herm_tol * tol_scale(h)) {
        std::ostringstream os;
        os << "hermitian_eig: max asymmetry " << asym << " exceeds tolerance";
        throw NotHermitian(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eig: eigensolver did not converge");
    }
    return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix matrix_power(const Matrix& a, double mu, double psd_floor) {
    if (!(mu > 0.0 && mu <= 1.0)) {
        std::ostringstream os;
        os << "matrix_power: mu = " << mu << " outside (0, 1]";
        throw MuOutOfRange(os.str());
    }
    HermitianEig eig = hermitian_eig(a);
    const double floor = psd_floor * tol_scale(a);
    RealVector powered(eig.eigenvalues.size());
    for (Eigen::Index j = 0; j < eig.eigenvalues.size(); ++j) {
        const double lambda = eig.eigenvalues[j];
        if (lambda < -floor) {
            std::ostringstream os;
            os << "matrix_power: eigenvalue " << lambda << " below PSD floor";
            throw NotPSD(os.str());
        }
        // the whole round-off window maps to 0: a stray +1e-16 raised to a
        // small mu would otherwise turn noise into mass of order one
        powered[j] = lambda <= floor ? 0.0 : std::pow(lambda, mu);
    }
    Matrix result = eig.eigenvectors * powered.asDiagonal() * eig.eigenvectors.adjoint();
    // symmetrize away round-off
    result = 0.5 * (result + result.adjoint()).eval();
    return result;
}

double trace_norm(const Matrix& a) {
    require_square(a, "trace_norm");
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues().sum();
}

RealMatrix real_psd_factor(const RealMatrix& m, double psd_floor) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("real_psd_factor: matrix not square");
    }
    const double scale = tol_scale(m);
    if (max_abs(RealMatrix(m - m.transpose())) > tol::symmetry * scale) {
        throw NotSymmetric("real_psd_factor: matrix not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m);
    const double floor = psd_floor * scale;
    RealVector roots(solver.eigenvalues().size());
    for (Eigen::Index j = 0; j < roots.size(); ++j) {
        double lambda = solver.eigenvalues()[j];
        if (lambda < -floor) {
            std::ostringstream os;
            os << "real_psd_factor: eigenvalue " << lambda << " below PSD floor";
            throw NotPSD(os.str());
        }
        roots[j] = std::sqrt(std::max(lambda, 0.0));
    }
    // K' = diag(sqrt(lambda)) Q^T, so (K')^T K' = Q diag(lambda) Q^T = M
    return roots.asDiagonal() * solver.eigenvectors().transpose();
}

SymmetricEig symmetric_real_eig(const RealMatrix& sym, double sym_tol) {
    if (sym.rows() != sym.cols()) {
        throw DimensionMismatch("symmetric_real_eig: matrix not square");
    }
    if (max_abs(RealMatrix(sym - sym.transpose())) > sym_tol * tol_scale(sym)) {
        throw NotSymmetric("symmetric_real_eig: matrix not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym);
    // rows of Q are the eigenvectors: Q Sym Q^T = diag
    return SymmetricEig{solver.eigenvectors().transpose(), solver.eigenvalues()};
}

} // namespace imag
