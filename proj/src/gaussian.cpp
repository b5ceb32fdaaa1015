#include "imag/gaussian.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace imag {

namespace {

using Complex = std::complex<double>;

void require_mu_open_unit(double mu, const char* who) {
    if (!(mu > 0.0 && mu < 1.0)) {
        std::ostringstream os;
        os << who << ": mu = " << mu << " outside (0, 1)";
        throw MuOutOfRange(os.str());
    }
}

constexpr double kPureModeWindow = 1e-8; // nu in [1, 1+window] treated as pure

} // namespace

RealMatrix symplectic_form(Eigen::Index modes) {
    RealMatrix omega = RealMatrix::Zero(2 * modes, 2 * modes);
    for (Eigen::Index l = 0; l < modes; ++l) {
        omega(2 * l, 2 * l + 1) = 1.0;
        omega(2 * l + 1, 2 * l) = -1.0;
    }
    return omega;
}

RealMatrix conjugation_reflector(Eigen::Index modes) {
    RealVector diag(2 * modes);
    for (Eigen::Index l = 0; l < modes; ++l) {
        diag[2 * l] = 1.0;
        diag[2 * l + 1] = -1.0;
    }
    return diag.asDiagonal();
}

ValidationReport validate_gaussian_parts(Eigen::Index modes, const RealVector& mean,
                                         const RealMatrix& cov) {
    ValidationReport report;
    if (modes < 1 || mean.size() != 2 * modes || cov.rows() != 2 * modes ||
        cov.cols() != 2 * modes) {
        report.violations.push_back({"shape consistency", static_cast<double>(mean.size())});
        return report;
    }
    const double asym = max_abs(RealMatrix(cov - cov.transpose()));
    if (asym > tol::symmetry * tol_scale(cov)) {
        report.violations.push_back({"covariance symmetry", asym});
    }
    Matrix uncertainty = cov.cast<Complex>() + Complex(0.0, 1.0) * symplectic_form(modes).cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (uncertainty + uncertainty.adjoint()));
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol::uncertainty) {
        report.violations.push_back({"uncertainty principle (V + i Omega >= 0)", min_eig});
    }
    return report;
}

GaussianState GaussianState::from_parts(Eigen::Index modes, RealVector mean, RealMatrix cov) {
    ValidationReport report = validate_gaussian_parts(modes, mean, cov);
    if (!report.ok()) {
        throw ValidationFailed("Gaussian state invalid: " + report.describe());
    }
    return GaussianState(modes, std::move(mean), std::move(cov));
}

WilliamsonForm williamson(const RealMatrix& v) {
    const Eigen::Index two_n = v.rows();
    if (two_n != v.cols() || two_n < 2 || two_n % 2 != 0) {
        throw DimensionMismatch("williamson: covariance must be 2N x 2N");
    }
    const double scale = tol_scale(v);
    if (max_abs(RealMatrix(v - v.transpose())) > tol::symmetry * scale) {
        throw NotSymmetric("williamson: covariance not symmetric");
    }
    const Eigen::Index n = two_n / 2;

    Eigen::SelfAdjointEigenSolver<RealMatrix> vsolver(v);
    if (vsolver.eigenvalues().minCoeff() < 1e-12 * scale) {
        std::ostringstream os;
        os << "williamson: min eigenvalue " << vsolver.eigenvalues().minCoeff()
           << " not positive";
        throw NotPositiveDefinite(os.str());
    }
    RealVector roots = vsolver.eigenvalues().cwiseSqrt();
    RealMatrix v_half = vsolver.eigenvectors() * roots.asDiagonal() * vsolver.eigenvectors().transpose();

    RealMatrix a = v_half * symplectic_form(n) * v_half;
    a = 0.5 * (a - a.transpose()).eval();

    // Hermitian i*A has spectrum {+-nu_l}; the +nu eigenvector u = alpha+i*beta
    // yields A alpha = nu beta, A beta = -nu alpha, so (sqrt2 beta, sqrt2 alpha)
    // spans a nu*J2 block.
    Matrix h = Complex(0.0, 1.0) * a.cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Matrix> hsolver(h);

    RealMatrix rotation(two_n, two_n);
    RealVector nu(n);
    for (Eigen::Index block = 0; block < n; ++block) {
        const Eigen::Index idx = two_n - 1 - block; // largest eigenvalues first
        nu[block] = hsolver.eigenvalues()[idx];
        const Vector u = hsolver.eigenvectors().col(idx);
        rotation.col(2 * block) = std::sqrt(2.0) * u.imag();
        rotation.col(2 * block + 1) = std::sqrt(2.0) * u.real();
    }

    RealVector inv_root_nu(two_n);
    for (Eigen::Index block = 0; block < n; ++block) {
        const double r = 1.0 / std::sqrt(nu[block]);
        inv_root_nu[2 * block] = r;
        inv_root_nu[2 * block + 1] = r;
    }
    RealMatrix s = v_half * rotation * inv_root_nu.asDiagonal();
    return WilliamsonForm{std::move(s), std::move(nu)};
}

double nu_power(double nu, double mu) {
    require_mu_open_unit(mu, "nu_power");
    if (nu < 1.0 - kPureModeWindow) {
        std::ostringstream os;
        os << "nu_power: nu = " << nu << " below 1";
        throw NuBelowOne(os.str());
    }
    if (nu <= 1.0 + kPureModeWindow) return 1.0;
    const double t = (nu - 1.0) / (nu + 1.0);
    return 2.0 / (1.0 - std::pow(t, mu)) - 1.0;
}

double log_tr_power_mode(double nu, double mu) {
    require_mu_open_unit(mu, "log_tr_power_mode");
    if (nu < 1.0 - kPureModeWindow) {
        std::ostringstream os;
        os << "log_tr_power_mode: nu = " << nu << " below 1";
        throw NuBelowOne(os.str());
    }
    if (nu <= 1.0 + kPureModeWindow) return 0.0;
    const double t = (nu - 1.0) / (nu + 1.0);
    // 1 - t^mu = -expm1(mu log t), stable as t -> 1
    return mu * std::log(2.0 / (nu + 1.0)) - std::log(-std::expm1(mu * std::log(t)));
}

PowerState power_state(const GaussianState& g, double mu) {
    require_mu_open_unit(mu, "power_state");
    WilliamsonForm w = williamson(g.cov());
    const Eigen::Index n = g.modes();
    RealVector powered(2 * n);
    double log_tr = 0.0;
    for (Eigen::Index l = 0; l < n; ++l) {
        const double np = nu_power(w.nu[l], mu);
        powered[2 * l] = np;
        powered[2 * l + 1] = np;
        log_tr += log_tr_power_mode(w.nu[l], mu);
    }
    RealMatrix cov = w.s * powered.asDiagonal() * w.s.transpose();
    cov = 0.5 * (cov + cov.transpose()).eval();
    return PowerState{GaussianState::trusted(n, g.mean(), std::move(cov)), log_tr};
}

GaussianState conjugate_gaussian(const GaussianState& g) {
    RealMatrix o = conjugation_reflector(g.modes());
    return GaussianState::trusted(g.modes(), o * g.mean(), o * g.cov() * o);
}

bool is_real_gaussian(const GaussianState& g, double tolerance) {
    RealMatrix o = conjugation_reflector(g.modes());
    const double mean_dev = (g.mean() - o * g.mean()).cwiseAbs().maxCoeff();
    const double cov_dev = max_abs(RealMatrix(g.cov() - o * g.cov() * o));
    return mean_dev <= tolerance && cov_dev <= tolerance;
}

double log_overlap(const GaussianState& g1, const GaussianState& g2) {
    if (g1.modes() != g2.modes()) {
        throw DimensionMismatch("overlap: mode counts differ");
    }
    const Eigen::Index n = g1.modes();
    RealMatrix sum = g1.cov() + g2.cov();
    Eigen::LLT<RealMatrix> llt(sum);
    if (llt.info() != Eigen::Success) {
        throw SingularSum("overlap: V + W not positive definite");
    }
    double log_det = 0.0;
    for (Eigen::Index j = 0; j < 2 * n; ++j) {
        log_det += 2.0 * std::log(llt.matrixL()(j, j));
    }
    RealVector diff = g1.mean() - g2.mean();
    const double quad = diff.dot(llt.solve(diff));
    return n * std::log(2.0) - 0.5 * log_det - 0.5 * quad;
}

double overlap(const GaussianState& g1, const GaussianState& g2) {
    return std::exp(log_overlap(g1, g2));
}

MeasureValue m_tsallis_gaussian(const GaussianState& g, double mu) {
    if (!(mu > tol::mu_margin && mu < 1.0 - tol::mu_margin)) {
        std::ostringstream os;
        os << "m_tsallis_gaussian: mu = " << mu << " outside the admissible interval";
        throw MuOutOfRange(os.str());
    }
    PowerState direct = power_state(g, mu);
    PowerState conj = power_state(conjugate_gaussian(g), 1.0 - mu);
    const double log_trace =
        direct.log_tr_power + conj.log_tr_power + log_overlap(direct.state, conj.state);
    double value = 1.0 - std::exp(log_trace);
    if (value < 0.0 && value >= -1e-10) value = 0.0;
    if (value > 1.0 && value <= 1.0 + 1e-10) value = 1.0;
    return MeasureValue{value, MeasureId::Tsallis, mu};
}

double m_tsallis_gaussian_half(const GaussianState& g) {
    WilliamsonForm w = williamson(g.cov());
    const Eigen::Index n = g.modes();
    double prefactor_log = 0.0;
    RealVector powered(2 * n);
    for (Eigen::Index l = 0; l < n; ++l) {
        const double nu = w.nu[l];
        const double np = nu_power(nu, 0.5);
        powered[2 * l] = np;
        powered[2 * l + 1] = np;
        if (nu > 1.0 + kPureModeWindow) {
            const double t = (nu - 1.0) / (nu + 1.0);
            prefactor_log += std::log(2.0 / (nu + 1.0)) - 2.0 * std::log(-std::expm1(0.5 * std::log(t)));
        }
    }
    RealMatrix v_half_cov = w.s * powered.asDiagonal() * w.s.transpose();
    v_half_cov = 0.5 * (v_half_cov + v_half_cov.transpose()).eval();
    RealMatrix o = conjugation_reflector(n);
    RealMatrix sum = v_half_cov + o * v_half_cov * o;
    Eigen::LLT<RealMatrix> llt(sum);
    if (llt.info() != Eigen::Success) {
        throw SingularSum("m_tsallis_gaussian_half: V^(1/2) + O V^(1/2) O not positive definite");
    }
    double log_det = 0.0;
    for (Eigen::Index j = 0; j < 2 * n; ++j) log_det += 2.0 * std::log(llt.matrixL()(j, j));
    RealVector diff = g.mean() - o * g.mean();
    const double quad = diff.dot(llt.solve(diff));
    const double log_trace = prefactor_log + n * std::log(2.0) - 0.5 * log_det - 0.5 * quad;
    return 1.0 - std::exp(log_trace);
}

GaussianState one_mode_from_params(const OneModeParams& p) {
    if (p.nu < 1.0 - 1e-12) {
        std::ostringstream os;
        os << "one_mode_from_params: nu = " << p.nu << " below 1";
        throw NuBelowOne(os.str());
    }
    if (p.zeta_abs < 0.0) {
        throw ValidationFailed("one_mode_from_params: |zeta| negative");
    }
    RealVector mean(2);
    mean << 2.0 * p.alpha.real(), 2.0 * p.alpha.imag();
    const double ch = std::cosh(2.0 * p.zeta_abs);
    const double sh = std::sinh(2.0 * p.zeta_abs);
    RealMatrix cov(2, 2);
    cov << p.nu * (ch + std::cos(p.theta) * sh), p.nu * std::sin(p.theta) * sh,
        p.nu * std::sin(p.theta) * sh, p.nu * (ch - std::cos(p.theta) * sh);
    return GaussianState::trusted(1, std::move(mean), std::move(cov));
}

double one_mode_closed_form(const OneModeParams& p) {
    const double x2 = 2.0 * p.alpha.imag();
    const double ch = std::cosh(2.0 * p.zeta_abs);
    const double sh = std::sinh(2.0 * p.zeta_abs);
    const double nu_half = p.nu + std::sqrt(std::max(p.nu * p.nu - 1.0, 0.0));
    const double sin_sh = std::sin(p.theta) * sh;
    const double exponent = -x2 * x2 / (nu_half * (ch - std::cos(p.theta) * sh));
    return 1.0 - std::exp(exponent) / std::sqrt(1.0 + sin_sh * sin_sh);
}

namespace {

// exp(G) for anti-Hermitian G via the Hermitian eigenproblem of i*G.
Matrix anti_hermitian_exp(const Matrix& g) {
    Matrix h = Complex(0.0, 1.0) * g;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
    Vector phases(solver.eigenvalues().size());
    for (Eigen::Index j = 0; j < phases.size(); ++j) {
        phases[j] = std::exp(Complex(0.0, -solver.eigenvalues()[j]));
    }
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

Matrix annihilation_matrix(int cutoff) {
    Matrix a = Matrix::Zero(cutoff, cutoff);
    for (int j = 1; j < cutoff; ++j) a(j - 1, j) = std::sqrt(static_cast<double>(j));
    return a;
}

} // namespace

std::pair<Matrix, Matrix> quadrature_matrices(int cutoff) {
    Matrix a = annihilation_matrix(cutoff);
    Matrix q = a + a.adjoint();
    Matrix p = Complex(0.0, -1.0) * (a - a.adjoint());
    return {std::move(q), std::move(p)};
}

DensityMatrix fock_truncate(const OneModeParams& p, int cutoff) {
    if (cutoff < 16 || p.nu > 4.0 || p.zeta_abs > 1.0 || std::abs(p.alpha) > 2.0) {
        std::ostringstream os;
        os << "fock_truncate: parameters outside the calibrated envelope "
           << "(cutoff >= 16, nu <= 4, |zeta| <= 1, |alpha| <= 2)";
        throw TruncationUnreliable(os.str());
    }
    if (p.nu < 1.0 - 1e-12) {
        throw NuBelowOne("fock_truncate: nu below 1");
    }
    const double t = std::max((p.nu - 1.0) / (p.nu + 1.0), 0.0);
    const double tail = std::pow(t, cutoff);
    if (tail > 1e-10) {
        std::ostringstream os;
        os << "fock_truncate: thermal tail mass " << tail << " beyond cutoff";
        throw TruncationUnreliable(os.str());
    }

    Matrix a = annihilation_matrix(cutoff);
    Matrix ad = a.adjoint();

    const Complex alpha = p.alpha;
    Matrix displace = anti_hermitian_exp(alpha * ad - std::conj(alpha) * a);

    // squeeze generator (zeta ad^2 - zeta* a^2)/2: the sign is fixed so the
    // squeezed thermal covariance is nu (ch + cos(theta) sh, sin(theta) sh;
    // sin(theta) sh, ch - cos(theta) sh) in the q = a + ad convention
    const Complex zeta = std::polar(p.zeta_abs, p.theta);
    Matrix squeeze = anti_hermitian_exp(0.5 * (zeta * ad * ad - std::conj(zeta) * a * a));

    RealVector thermal(cutoff);
    double geometric = 1.0;
    for (int j = 0; j < cutoff; ++j) {
        thermal[j] = geometric;
        geometric *= t;
    }
    thermal /= thermal.sum(); // renormalized truncation of (1-t) t^j

    Matrix rho = displace * squeeze * thermal.cast<Complex>().asDiagonal() *
                 squeeze.adjoint() * displace.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return DensityMatrix::trusted(std::move(rho));
}

GaussianState tensor(const GaussianState& g1, const GaussianState& g2) {
    const Eigen::Index n1 = g1.modes();
    const Eigen::Index n2 = g2.modes();
    RealVector mean(2 * (n1 + n2));
    mean << g1.mean(), g2.mean();
    RealMatrix cov = RealMatrix::Zero(2 * (n1 + n2), 2 * (n1 + n2));
    cov.topLeftCorner(2 * n1, 2 * n1) = g1.cov();
    cov.bottomRightCorner(2 * n2, 2 * n2) = g2.cov();
    return GaussianState::trusted(n1 + n2, std::move(mean), std::move(cov));
}

RealMatrix random_symplectic(Eigen::Index modes, Rng& rng) {
    const Eigen::Index d = 2 * modes;
    RealMatrix sym(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i; j < d; ++j) {
            const double x = 0.3 * rng.normal();
            sym(i, j) = x;
            sym(j, i) = x;
        }
    }
    // Omega * symmetric lies in the symplectic Lie algebra
    RealMatrix generator = symplectic_form(modes) * sym;
    return generator.exp();
}

RandomGaussian random_gaussian_state(Eigen::Index modes, Rng& rng, double nu_min, double nu_max) {
    RealMatrix s = random_symplectic(modes, rng);
    RealVector nu(modes);
    for (Eigen::Index l = 0; l < modes; ++l) nu[l] = rng.uniform(nu_min, nu_max);
    std::sort(nu.data(), nu.data() + nu.size(), std::greater<double>());
    RealVector diag(2 * modes);
    for (Eigen::Index l = 0; l < modes; ++l) {
        diag[2 * l] = nu[l];
        diag[2 * l + 1] = nu[l];
    }
    RealMatrix cov = s * diag.asDiagonal() * s.transpose();
    cov = 0.5 * (cov + cov.transpose()).eval();
    RealVector mean(2 * modes);
    for (Eigen::Index j = 0; j < 2 * modes; ++j) mean[j] = rng.normal();
    return RandomGaussian{GaussianState::trusted(modes, std::move(mean), std::move(cov)),
                          std::move(nu), std::move(s)};
}

} // namespace imag
