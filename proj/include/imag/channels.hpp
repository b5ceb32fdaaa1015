#pragma once

#include <span>
#include <vector>

#include "imag/states.hpp"

namespace imag {

// Quantum operation with all-real Kraus matrices K_l, sum K_l^T K_l <= I.
// The completeness defect I - sum K_l^T K_l is cached at construction.
class RealOperation {
public:
    static RealOperation from_kraus(std::vector<RealMatrix> kraus); // throws ValidationFailed
    static RealOperation trusted(std::vector<RealMatrix> kraus);

    const std::vector<RealMatrix>& kraus() const { return kraus_; }
    const RealMatrix& defect() const { return defect_; }
    Eigen::Index dim() const { return kraus_.front().rows(); }

    // A channel has defect ~ 0.
    bool is_channel(double tolerance = tol::defect_psd) const {
        return max_abs(defect_) <= tolerance;
    }

private:
    RealOperation(std::vector<RealMatrix> kraus, RealMatrix defect)
        : kraus_(std::move(kraus)), defect_(std::move(defect)) {}
    std::vector<RealMatrix> kraus_;
    RealMatrix defect_;
};

// Checks shape consistency and defect positivity on a raw Kraus list.
ValidationReport validate_real_operation(const std::vector<RealMatrix>& kraus);
inline ValidationReport validate_real_operation(const RealOperation& op) {
    return validate_real_operation(op.kraus());
}

struct Outcome {
    double probability = 0.0;
    DensityMatrix state;
};

// Probabilistic outcomes (p_l, K_l rho K_l^T / p_l) with p_l = tr(K_l rho K_l^T).
// Outcomes below the probability floor are dropped.
struct OutcomeDecomposition {
    std::vector<Outcome> outcomes;
    double total_probability() const;
};

inline constexpr double kOutcomeProbabilityFloor = 1e-12;

struct ApplyResult {
    Matrix output; // sum_l K_l rho K_l^T, unnormalized
    OutcomeDecomposition decomposition;
};

// Applies the operation to a state. Throws DimensionMismatch.
ApplyResult apply(const RealOperation& op, const DensityMatrix& rho);

// Appends K' = real_psd_factor(defect) so that the result is a channel
// (Proposition-2 completion). Returns the operation unchanged when the
// defect is already negligible. Never alters the existing Kraus list.
RealOperation complete_to_channel(const RealOperation& op);

// Real orthogonal Q with Q (Re rho) Q^T diagonal; Q rho Q^T then has
// purely imaginary off-diagonal entries.
RealMatrix real_orthogonal_diagonalizer(const DensityMatrix& rho);

// Random exact real channel: K_l = G_l M^{-1/2}, M = sum G_l^T G_l, from a
// seeded stream. Throws SingularNormalizer if M stays singular across retries.
RealOperation random_real_channel(Eigen::Index d, int k, std::uint64_t seed);
RealOperation random_real_channel(Eigen::Index d, int k, Rng& rng);

// Proposition-1 audit quantity: ||op(rho*) - (op(rho))*||_max.
double check_conjugation_commutes(const RealOperation& op, const DensityMatrix& rho);

// Same deviation for an arbitrary complex Kraus list (negative-control path).
double check_conjugation_commutes(std::span<const Matrix> kraus, const DensityMatrix& rho);

} // namespace imag
