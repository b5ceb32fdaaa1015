#pragma once

#include <complex>

#include "imag/measures.hpp"
#include "imag/states.hpp"

namespace imag {

// Quadrature convention throughout: q = a + a^dag, p = -i(a - a^dag),
// ordering (q1, p1, ..., qN, pN); vacuum covariance is the identity and
// symplectic eigenvalues satisfy nu >= 1.

// Omega = (+) [[0,1],[-1,0]] per mode.
RealMatrix symplectic_form(Eigen::Index modes);

// O = (+) diag(1,-1): conjugation in the Fock basis negates p-components.
RealMatrix conjugation_reflector(Eigen::Index modes);

// Checks covariance symmetry and the uncertainty principle
// (min eig of V + i Omega >= -1e-8) on raw data. Diagnostic: never throws.
ValidationReport validate_gaussian_parts(Eigen::Index modes, const RealVector& mean,
                                         const RealMatrix& cov);

// N-mode Gaussian state given by its mean quadrature vector and covariance
// matrix. Validating factory, same pattern as DensityMatrix.
class GaussianState {
public:
    static GaussianState from_parts(Eigen::Index modes, RealVector mean, RealMatrix cov);
    static GaussianState trusted(Eigen::Index modes, RealVector mean, RealMatrix cov) {
        return GaussianState(modes, std::move(mean), std::move(cov));
    }

    Eigen::Index modes() const { return modes_; }
    const RealVector& mean() const { return mean_; }
    const RealMatrix& cov() const { return cov_; }

private:
    GaussianState(Eigen::Index modes, RealVector mean, RealMatrix cov)
        : modes_(modes), mean_(std::move(mean)), cov_(std::move(cov)) {}
    Eigen::Index modes_;
    RealVector mean_;
    RealMatrix cov_;
};

inline ValidationReport validate_gaussian(const GaussianState& g) {
    return validate_gaussian_parts(g.modes(), g.mean(), g.cov());
}

struct WilliamsonForm {
    RealMatrix s;  // symplectic, V = S ((+) nu_l I2) S^T
    RealVector nu; // symplectic eigenvalues, descending
};

// Williamson decomposition of a positive definite 2N x 2N symmetric matrix.
// Built from the antisymmetric form V^(1/2) Omega V^(1/2): the Hermitian
// eigenproblem of i*A pairs +-nu eigenvalues whose real/imaginary vector
// parts give the orthogonal block rotation. Throws NotPositiveDefinite.
WilliamsonForm williamson(const RealMatrix& v);

// nu^(mu) = 2 / (1 - ((nu-1)/(nu+1))^mu) - 1, with the pure-mode window
// [1, 1+1e-8] pinned to 1. mu in (0, 1).
double nu_power(double nu, double mu);

// One mode's contribution to log tr rho^mu:
// mu*log(1-t) - log(1-t^mu), t = (nu-1)/(nu+1); zero for pure modes.
double log_tr_power_mode(double nu, double mu);

struct PowerState {
    GaussianState state;  // rho^mu / tr rho^mu
    double log_tr_power;  // log tr rho^mu
};

// Gaussian state of the normalized power rho^mu / tr rho^mu: mean unchanged,
// covariance S ((+) nu^(mu) I2) S^T.
PowerState power_state(const GaussianState& g, double mu);

// Complex conjugate in the Fock basis: mean -> O mean, cov -> O cov O.
GaussianState conjugate_gaussian(const GaussianState& g);

// True iff mean and cov are O-invariant to the tolerance.
bool is_real_gaussian(const GaussianState& g, double tolerance = tol::is_real);

// log of the state overlap tr(rho sigma) =
// 2^N / sqrt(det(V+W)) * exp(-(X-Y)^T (V+W)^{-1} (X-Y) / 2).
// Throws SingularSum if V+W is not positive definite.
double log_overlap(const GaussianState& g1, const GaussianState& g2);
double overlap(const GaussianState& g1, const GaussianState& g2);

// Tsallis imaginarity measure for a Gaussian state from means and covariances:
// 1 - tr rho^mu tr rho^(1-mu) * overlap of the normalized powers.
MeasureValue m_tsallis_gaussian(const GaussianState& g, double mu);

// Direct evaluation of the mu = 1/2 specialization
// 1 - 2^N prod[(1-t)/(1-sqrt(t))^2] / sqrt(det(V^(1/2) + O V^(1/2) O)) * exp(...);
// audit partner for the generic path.
double m_tsallis_gaussian_half(const GaussianState& g);

// Displaced squeezed thermal parameterization of a one-mode Gaussian state.
struct OneModeParams {
    std::complex<double> alpha; // displacement
    double zeta_abs = 0.0;      // |zeta| >= 0
    double theta = 0.0;         // phase of zeta
    double nu = 1.0;            // symplectic eigenvalue >= 1
};

// mean = 2(Re alpha, Im alpha);
// cov = nu [[ch + cos(theta) sh, sin(theta) sh], [sin(theta) sh, ch - cos(theta) sh]]
// with ch = cosh(2|zeta|), sh = sinh(2|zeta|). Throws NuBelowOne.
GaussianState one_mode_from_params(const OneModeParams& p);

// Closed form of the measure at mu = 1/2 for one mode:
// 1 - exp(-X2^2 / ((nu + sqrt(nu^2-1)) (ch - cos(theta) sh))) / sqrt(1 + sin^2(theta) sh^2).
double one_mode_closed_form(const OneModeParams& p);

// Truncated-Fock density matrix of the displaced squeezed thermal state:
// D(alpha) S(zeta) rho_th S^dag D^dag on a cutoff-dimensional space.
// Exponentials are taken by eigendecomposition of the Hermitian i*generator.
// Throws TruncationUnreliable when the thermal tail past the cutoff exceeds
// 1e-10 or the parameters leave the calibrated envelope.
DensityMatrix fock_truncate(const OneModeParams& p, int cutoff);

// Fock-space quadrature matrices (q, p) at a given cutoff, for oracles.
std::pair<Matrix, Matrix> quadrature_matrices(int cutoff);

// Product state: means concatenated, covariances block-diagonal.
GaussianState tensor(const GaussianState& g1, const GaussianState& g2);

// Random symplectic matrix exp(Omega A), A symmetric; audit plumbing.
RealMatrix random_symplectic(Eigen::Index modes, Rng& rng);

struct RandomGaussian {
    GaussianState state;
    RealVector nu;  // ground-truth symplectic eigenvalues, descending
    RealMatrix s;   // the symplectic used to build the covariance
};

// Random valid Gaussian state S ((+) nu I2) S^T with nu in [nu_min, nu_max].
RandomGaussian random_gaussian_state(Eigen::Index modes, Rng& rng, double nu_min = 1.0,
                                     double nu_max = 3.0);

} // namespace imag
