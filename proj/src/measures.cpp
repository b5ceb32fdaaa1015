#include "imag/measures.hpp"

#include <Eigen/Eigenvalues>

#include <cassert>
#include <cmath>
#include <sstream>

namespace imag {

namespace {

void require_mu_interior(double mu, const char* who) {
    if (!(mu > tol::mu_margin && mu < 1.0 - tol::mu_margin)) {
        std::ostringstream os;
        os << who << ": mu = " << mu << " outside (" << tol::mu_margin << ", "
           << 1.0 - tol::mu_margin << ")";
        throw MuOutOfRange(os.str());
    }
}

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b, const char* who) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << who << ": dims " << a.dim() << " vs " << b.dim();
        throw DimensionMismatch(os.str());
    }
}

// Clamps round-off escapes back into [lo, hi]; larger excursions pass
// through so genuine bugs stay visible.
double clamp_near(double v, double lo, double hi, double slack = 1e-10) {
    if (v < lo && v >= lo - slack) return lo;
    if (v > hi && v <= hi + slack) return hi;
    return v;
}

// Real part of tr(rho^mu sigma^(1-mu)); the imaginary residue is round-off
// (the trace is real for Hermitian PSD arguments) and is discarded.
double power_trace(const DensityMatrix& rho, const DensityMatrix& sigma, double mu) {
    Matrix a = matrix_power(rho.matrix(), mu);
    Matrix b = matrix_power(sigma.matrix(), 1.0 - mu);
    const std::complex<double> trace = (a * b).trace();
    assert(std::abs(trace.imag()) <= 1e-10);
    return trace.real();
}

// Projector onto the support of a state (eigenvalues above 1e-12).
Matrix support_projector(const DensityMatrix& rho) {
    HermitianEig eig = hermitian_eig(rho.matrix());
    Matrix p = Matrix::Zero(rho.dim(), rho.dim());
    for (Eigen::Index j = 0; j < eig.eigenvalues.size(); ++j) {
        if (eig.eigenvalues[j] > 1e-12) {
            p += eig.eigenvectors.col(j) * eig.eigenvectors.col(j).adjoint();
        }
    }
    return p;
}

} // namespace

double von_neumann_entropy(const Matrix& m) {
    HermitianEig eig = hermitian_eig(m);
    double s = 0.0;
    for (Eigen::Index j = 0; j < eig.eigenvalues.size(); ++j) {
        const double lambda = eig.eigenvalues[j];
        if (lambda > 0.0) s -= lambda * std::log(lambda);
    }
    return s;
}

double tsallis_rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double mu) {
    require_mu_interior(mu, "tsallis_rel_entropy");
    require_same_dim(rho, sigma, "tsallis_rel_entropy");
    return (1.0 - power_trace(rho, sigma, mu)) / (1.0 - mu);
}

MeasureValue m_tsallis(const DensityMatrix& rho, double mu) {
    require_mu_interior(mu, "m_tsallis");
    const double value = 1.0 - power_trace(rho, conjugate(rho), mu);
    return MeasureValue{clamp_near(value, 0.0, 1.0), MeasureId::Tsallis, mu};
}

double m_tsallis_pure(const Vector& psi, double mu) {
    require_mu_interior(mu, "m_tsallis_pure");
    const double n = psi.norm();
    if (!(n > 0.0)) throw ZeroVector("m_tsallis_pure: zero vector");
    Vector unit = psi / n;
    // <psi|psi*> = conj(sum psi_j^2)
    std::complex<double> s = 0.0;
    for (Eigen::Index j = 0; j < unit.size(); ++j) s += unit[j] * unit[j];
    return clamp_near(1.0 - std::norm(s), 0.0, 1.0);
}

MeasureValue m_trace(const DensityMatrix& rho) {
    const double value = trace_norm(rho.matrix() - rho.matrix().conjugate());
    return MeasureValue{value, MeasureId::Trace, std::nullopt};
}

MeasureValue m_rel_entropy(const DensityMatrix& rho) {
    const Matrix re = rho.matrix().real().cast<std::complex<double>>();
    const double value = von_neumann_entropy(re) - von_neumann_entropy(rho.matrix());
    return MeasureValue{clamp_near(value, 0.0, std::log(static_cast<double>(rho.dim())), 1e-9),
                        MeasureId::RelEntropy, std::nullopt};
}

double relative_entropy_coherence(const DensityMatrix& rho) {
    double diag_entropy = 0.0;
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
        const double p = rho.matrix()(j, j).real();
        if (p > 0.0) diag_entropy -= p * std::log(p);
    }
    const double value = diag_entropy - von_neumann_entropy(rho.matrix());
    return clamp_near(value, 0.0, std::log(static_cast<double>(rho.dim())), 1e-9);
}

MeasureValue m_fidelity(const DensityMatrix& rho) {
    Matrix root = matrix_sqrt(rho.matrix());
    Matrix inner = root * rho.matrix().conjugate() * root;
    inner = 0.5 * (inner + inner.adjoint()).eval();
    HermitianEig eig = hermitian_eig(inner);
    double fid = 0.0;
    for (Eigen::Index j = 0; j < eig.eigenvalues.size(); ++j) {
        fid += std::sqrt(std::max(eig.eigenvalues[j], 0.0));
    }
    return MeasureValue{clamp_near(1.0 - fid, 0.0, 1.0), MeasureId::Fidelity, std::nullopt};
}

double qubit_closed_form(const BlochVector& b, double mu) {
    require_mu_interior(mu, "qubit_closed_form");
    const double r = b.norm();
    if (r <= 1e-8 || r - std::abs(b.z) <= 1e-8) {
        // removable singularities of the closed form; generic path instead
        return m_tsallis(from_bloch(b), mu).value;
    }
    const double x2 = b.x * b.x;
    const double y2 = b.y * b.y;
    const double rm = r - b.z;
    const double rp = r + b.z;
    const double low = (r - y2 / rm) * (r - y2 / rm) + x2 * y2 / (rm * rm);
    const double high = (r - y2 / rp) * (r - y2 / rp) + x2 * y2 / (rp * rp);
    const double cross = std::pow(1.0 - r, mu) * std::pow(1.0 + r, 1.0 - mu) +
                         std::pow(1.0 - r, 1.0 - mu) * std::pow(1.0 + r, mu);
    const double bracket = (1.0 - r) * low + (1.0 + r) * high + y2 * cross;
    return clamp_near(1.0 - bracket / (2.0 * r * r), 0.0, 1.0, 1e-9);
}

double affinity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho, sigma, "affinity");
    return (matrix_sqrt(rho.matrix()) * matrix_sqrt(sigma.matrix())).trace().real();
}

double hellinger(const DensityMatrix& rho, const DensityMatrix& sigma) {
    return 2.0 * (1.0 - affinity(rho, sigma));
}

double bhattacharyya(const DensityMatrix& rho, const DensityMatrix& sigma) {
    return 0.5 * affinity(rho, sigma);
}

double chernoff_quantity(const DensityMatrix& rho, const DensityMatrix& sigma, double mu) {
    require_same_dim(rho, sigma, "chernoff_quantity");
    if (mu < 0.0 || mu > 1.0) {
        std::ostringstream os;
        os << "chernoff_quantity: mu = " << mu << " outside [0, 1]";
        throw MuOutOfRange(os.str());
    }
    if (mu == 0.0) {
        return (support_projector(rho) * sigma.matrix()).trace().real();
    }
    if (mu == 1.0) {
        return (rho.matrix() * support_projector(sigma)).trace().real();
    }
    return power_trace(rho, sigma, mu);
}

ChernoffBound chernoff_bound(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho, sigma, "chernoff_bound");
    const auto quantity = [&](double mu) { return chernoff_quantity(rho, sigma, mu); };

    // 101-point pre-scan guards against flat regions
    int best = 0;
    double best_value = quantity(0.0);
    for (int i = 1; i <= 100; ++i) {
        const double v = quantity(i / 100.0);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }
    double a = std::max(0.0, (best - 1) / 100.0);
    double b = std::min(1.0, (best + 1) / 100.0);

    // golden-section refinement (C_mu is convex in mu)
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = quantity(c);
    double fd = quantity(d);
    for (int iter = 0; iter < 200 && (b - a) > 1e-8; ++iter) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = quantity(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = quantity(d);
        }
    }
    double mu_star = 0.5 * (a + b);
    double minimum = quantity(mu_star);
    if (best_value < minimum) {
        minimum = best_value;
        mu_star = best / 100.0;
    }
    return ChernoffBound{0.5 * minimum, mu_star};
}

} // namespace imag
