#include "imag/states.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <sstream>

namespace imag {

std::string ValidationReport::describe() const {
    if (violations.empty()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].invariant << " (magnitude " << violations[i].magnitude << ")";
    }
    return os.str();
}

ValidationReport validate_density(const Matrix& m) {
    ValidationReport report;
    if (m.rows() != m.cols() || m.rows() < 1) {
        report.violations.push_back({"square shape", static_cast<double>(m.rows() - m.cols())});
        return report;
    }
    const double asym = max_abs(Matrix(m - m.adjoint()));
    if (asym > tol::hermiticity * tol_scale(m)) {
        report.violations.push_back({"hermiticity", asym});
    }
    const double trace_defect = std::abs(m.trace() - std::complex<double>(1.0, 0.0));
    if (trace_defect > tol::trace_unit) {
        report.violations.push_back({"unit trace", trace_defect});
    }
    // PSD check on the Hermitian part (meaningful even when slightly asymmetric)
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol::psd_floor * tol_scale(m)) {
        report.violations.push_back({"positive semidefiniteness", -min_eig});
    }
    return report;
}

DensityMatrix DensityMatrix::from_matrix(Matrix m) {
    ValidationReport report = validate_density(m);
    if (!report.ok()) {
        throw ValidationFailed("density matrix invalid: " + report.describe());
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix from_bloch(const BlochVector& b) {
    const double r = b.norm();
    if (r > 1.0 + 1e-12) {
        std::ostringstream os;
        os << "Bloch vector norm " << r << " exceeds 1";
        throw BlochNormExceeded(os.str());
    }
    Matrix m(2, 2);
    m(0, 0) = 0.5 * (1.0 + b.z);
    m(0, 1) = 0.5 * std::complex<double>(b.x, -b.y);
    m(1, 0) = 0.5 * std::complex<double>(b.x, b.y);
    m(1, 1) = 0.5 * (1.0 - b.z);
    return DensityMatrix::trusted(std::move(m));
}

DensityMatrix pure_state(const Vector& psi) {
    const double n = psi.norm();
    if (!(n > 0.0)) {
        throw ZeroVector("pure_state: zero vector");
    }
    Vector unit = psi / n;
    Matrix m = unit * unit.adjoint();
    return DensityMatrix::trusted(std::move(m));
}

DensityMatrix conjugate(const DensityMatrix& rho) {
    return DensityMatrix::trusted(rho.matrix().conjugate());
}

std::pair<RealMatrix, RealMatrix> real_imag_parts(const DensityMatrix& rho) {
    return {rho.matrix().real(), rho.matrix().imag()};
}

bool is_real(const DensityMatrix& rho, double tolerance) {
    return rho.matrix().imag().cwiseAbs().maxCoeff() <= tolerance;
}

DensityMatrix direct_sum(double p, const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (!(p > 0.0 && p < 1.0)) {
        std::ostringstream os;
        os << "direct_sum: p = " << p << " outside (0, 1)";
        throw ProbabilityOutOfRange(os.str());
    }
    const Eigen::Index d1 = rho1.dim();
    const Eigen::Index d2 = rho2.dim();
    Matrix m = Matrix::Zero(d1 + d2, d1 + d2);
    m.topLeftCorner(d1, d1) = p * rho1.matrix();
    m.bottomRightCorner(d2, d2) = (1.0 - p) * rho2.matrix();
    return DensityMatrix::trusted(std::move(m));
}

DensityMatrix random_density(Eigen::Index d, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(d, rng);
}

DensityMatrix random_density(Eigen::Index d, Rng& rng) {
    Matrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
    Matrix m = g * g.adjoint();
    m /= m.trace().real();
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix::trusted(std::move(m));
}

DensityMatrix random_real_density(Eigen::Index d, Rng& rng) {
    RealMatrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.normal();
    RealMatrix m = g * g.transpose();
    m /= m.trace();
    m = 0.5 * (m + m.transpose()).eval();
    return DensityMatrix::trusted(m.cast<std::complex<double>>());
}

Vector random_unit_vector(Eigen::Index d, Rng& rng) {
    Vector v(d);
    do {
        for (Eigen::Index i = 0; i < d; ++i) v[i] = rng.complex_normal();
    } while (!(v.norm() > 0.0));
    return v / v.norm();
}

RealMatrix random_orthogonal(Eigen::Index d, Rng& rng) {
    RealMatrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.normal();
    Eigen::HouseholderQR<RealMatrix> qr(g);
    RealMatrix q = qr.householderQ();
    // fix the sign convention so Q is a deterministic function of g
    RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j) {
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    }
    return q;
}

} // namespace imag
