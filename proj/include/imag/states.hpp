#pragma once

#include <string>
#include <utility>
#include <vector>

#include "imag/matfun.hpp"
#include "imag/rng.hpp"

namespace imag {

struct Violation {
    std::string invariant;
    double magnitude = 0.0;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

// Checks the three density-matrix invariants (Hermitian, unit trace, PSD)
// on a raw matrix. Diagnostic: never throws.
ValidationReport validate_density(const Matrix& m);

// d x d complex Hermitian PSD unit-trace matrix in the fixed reference basis.
// Only validating factories (or `trusted` for matrices that are valid by
// construction) can create one, so downstream code never re-checks.
class DensityMatrix {
public:
    static DensityMatrix from_matrix(Matrix m);   // throws ValidationFailed
    static DensityMatrix trusted(Matrix m) { return DensityMatrix(std::move(m)); }

    Eigen::Index dim() const { return mat_.rows(); }
    const Matrix& matrix() const { return mat_; }

private:
    explicit DensityMatrix(Matrix m) : mat_(std::move(m)) {}
    Matrix mat_;
};

inline ValidationReport validate(const DensityMatrix& rho) { return validate_density(rho.matrix()); }

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

// rho = (I + r.sigma)/2. Throws BlochNormExceeded if |r| > 1 + 1e-12.
DensityMatrix from_bloch(const BlochVector& b);

// Rank-1 projector psi psi^dagger / ||psi||^2. Throws ZeroVector.
DensityMatrix pure_state(const Vector& psi);

// Entrywise complex conjugate (= rho^T by Hermiticity).
DensityMatrix conjugate(const DensityMatrix& rho);

// (Re rho, Im rho): real symmetric and real antisymmetric parts.
std::pair<RealMatrix, RealMatrix> real_imag_parts(const DensityMatrix& rho);

// True iff ||Im rho||_max <= tol.
bool is_real(const DensityMatrix& rho, double tolerance = tol::is_real);

// Block-diagonal p rho1 (+) (1-p) rho2. Throws ProbabilityOutOfRange.
DensityMatrix direct_sum(double p, const DensityMatrix& rho1, const DensityMatrix& rho2);

// Ginibre-induced random state G G^dagger / tr(G G^dagger); deterministic per seed.
DensityMatrix random_density(Eigen::Index d, std::uint64_t seed);
DensityMatrix random_density(Eigen::Index d, Rng& rng);

// Random state with all-real entries (real Ginibre), for audit negatives.
DensityMatrix random_real_density(Eigen::Index d, Rng& rng);

// Random pure state from a complex Gaussian vector.
Vector random_unit_vector(Eigen::Index d, Rng& rng);

// Haar-ish random real orthogonal matrix (QR of a real Ginibre matrix).
RealMatrix random_orthogonal(Eigen::Index d, Rng& rng);

} // namespace imag
