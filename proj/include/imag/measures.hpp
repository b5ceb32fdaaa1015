#pragma once

#include <optional>

#include "imag/states.hpp"

namespace imag {

enum class MeasureId { Tsallis, Trace, RelEntropy, Fidelity };

struct MeasureValue {
    double value = 0.0;
    MeasureId id = MeasureId::Tsallis;
    std::optional<double> parameter; // mu for the Tsallis family
};

// Tsallis relative entropy D_mu(rho || sigma) = (1 - tr(rho^mu sigma^(1-mu)))/(1-mu),
// mu in (1e-6, 1-1e-6). Nonnegative; zero iff rho = sigma.
double tsallis_rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double mu);

// The Tsallis imaginarity measure 1 - tr[rho^mu (rho*)^(1-mu)], in [0, 1];
// zero iff rho is real.
MeasureValue m_tsallis(const DensityMatrix& rho, double mu);

// Pure-state form 1 - |<psi|psi*>|^2 (independent of mu).
double m_tsallis_pure(const Vector& psi, double mu);

// Trace-norm measure ||rho - rho*||_tr.
MeasureValue m_trace(const DensityMatrix& rho);

// Relative-entropy measure S(Re rho) - S(rho), natural log.
MeasureValue m_rel_entropy(const DensityMatrix& rho);

// Relative entropy of coherence S(diag(rho)) - S(rho), natural log.
double relative_entropy_coherence(const DensityMatrix& rho);

// Fidelity measure 1 - tr sqrt(sqrt(rho) rho* sqrt(rho)).
MeasureValue m_fidelity(const DensityMatrix& rho);

// Closed-form qubit M_{T,mu} in Bloch coordinates. Falls back to the
// generic eigen-path where the closed form degenerates (r or r-|z| tiny).
double qubit_closed_form(const BlochVector& b, double mu);

// Quantum affinity tr(sqrt(rho) sqrt(sigma)).
double affinity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Hellinger distance tr(sqrt(rho) - sqrt(sigma))^2 = 2 (1 - affinity).
double hellinger(const DensityMatrix& rho, const DensityMatrix& sigma);

// Bhattacharyya bound affinity / 2.
double bhattacharyya(const DensityMatrix& rho, const DensityMatrix& sigma);

// C_mu = tr(rho^mu sigma^(1-mu)) for mu in [0, 1]; the endpoints are the
// support-projector limits tr(P_rho sigma) and tr(rho P_sigma).
double chernoff_quantity(const DensityMatrix& rho, const DensityMatrix& sigma, double mu);

struct ChernoffBound {
    double value = 0.0;  // (1/2) inf_mu C_mu
    double mu_star = 0.0;
};

// Minimizes C_mu over [0, 1]: 101-point grid pre-scan plus golden-section
// refinement to |dmu| <= 1e-8.
ChernoffBound chernoff_bound(const DensityMatrix& rho, const DensityMatrix& sigma);

// Von Neumann entropy -sum lambda ln lambda (0 ln 0 := 0) of a Hermitian
// PSD matrix; tiny negative eigenvalues are clipped.
double von_neumann_entropy(const Matrix& m);

} // namespace imag
