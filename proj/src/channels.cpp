#include "imag/channels.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace imag {

namespace {

RealMatrix completeness_defect(const std::vector<RealMatrix>& kraus) {
    const Eigen::Index d = kraus.front().rows();
    RealMatrix sum = RealMatrix::Zero(d, d);
    for (const RealMatrix& k : kraus) sum += k.transpose() * k;
    return RealMatrix::Identity(d, d) - sum;
}

} // namespace

ValidationReport validate_real_operation(const std::vector<RealMatrix>& kraus) {
    ValidationReport report;
    if (kraus.empty()) {
        report.violations.push_back({"nonempty Kraus list", 0.0});
        return report;
    }
    const Eigen::Index d = kraus.front().rows();
    for (const RealMatrix& k : kraus) {
        if (k.rows() != d || k.cols() != d) {
            report.violations.push_back(
                {"uniform square Kraus shapes", static_cast<double>(k.rows() * k.cols())});
            return report;
        }
    }
    RealMatrix defect = completeness_defect(kraus);
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(0.5 * (defect + defect.transpose()));
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol::defect_psd) {
        report.violations.push_back({"defect positivity (sum K^T K <= I)", -min_eig});
    }
    return report;
}

RealOperation RealOperation::from_kraus(std::vector<RealMatrix> kraus) {
    ValidationReport report = validate_real_operation(kraus);
    if (!report.ok()) {
        throw ValidationFailed("real operation invalid: " + report.describe());
    }
    RealMatrix defect = completeness_defect(kraus);
    return RealOperation(std::move(kraus), std::move(defect));
}

RealOperation RealOperation::trusted(std::vector<RealMatrix> kraus) {
    RealMatrix defect = completeness_defect(kraus);
    return RealOperation(std::move(kraus), std::move(defect));
}

double OutcomeDecomposition::total_probability() const {
    double sum = 0.0;
    for (const Outcome& o : outcomes) sum += o.probability;
    return sum;
}

ApplyResult apply(const RealOperation& op, const DensityMatrix& rho) {
    if (op.dim() != rho.dim()) {
        std::ostringstream os;
        os << "apply: operation dim " << op.dim() << " vs state dim " << rho.dim();
        throw DimensionMismatch(os.str());
    }
    const Eigen::Index d = rho.dim();
    Matrix output = Matrix::Zero(d, d);
    OutcomeDecomposition decomposition;
    for (const RealMatrix& k : op.kraus()) {
        Matrix term = k.cast<std::complex<double>>() * rho.matrix() *
                      k.transpose().cast<std::complex<double>>();
        term = 0.5 * (term + term.adjoint()).eval();
        output += term;
        const double p = term.trace().real();
        if (p >= kOutcomeProbabilityFloor) {
            decomposition.outcomes.push_back({p, DensityMatrix::trusted(term / p)});
        }
    }
    return ApplyResult{std::move(output), std::move(decomposition)};
}

RealOperation complete_to_channel(const RealOperation& op) {
    if (op.is_channel(1e-10)) return op;
    // defect eigenvalues may sit slightly below 0 (within the defect-PSD
    // tolerance); the factor floor absorbs them
    RealMatrix completion = real_psd_factor(op.defect(), tol::defect_psd);
    std::vector<RealMatrix> kraus = op.kraus();
    kraus.push_back(std::move(completion));
    return RealOperation::trusted(std::move(kraus));
}

RealMatrix real_orthogonal_diagonalizer(const DensityMatrix& rho) {
    return symmetric_real_eig(rho.matrix().real()).q;
}

RealOperation random_real_channel(Eigen::Index d, int k, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        Rng rng(seed, attempt);
        RealMatrix m = RealMatrix::Zero(d, d);
        std::vector<RealMatrix> gs;
        gs.reserve(static_cast<std::size_t>(k));
        for (int l = 0; l < k; ++l) {
            RealMatrix g(d, d);
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.normal();
            m += g.transpose() * g;
            gs.push_back(std::move(g));
        }
        Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m);
        if (solver.eigenvalues().minCoeff() < 1e-12 * tol_scale(m)) continue; // next substream
        RealVector inv_roots = solver.eigenvalues().cwiseSqrt().cwiseInverse();
        RealMatrix normalizer =
            solver.eigenvectors() * inv_roots.asDiagonal() * solver.eigenvectors().transpose();
        std::vector<RealMatrix> kraus;
        kraus.reserve(gs.size());
        for (const RealMatrix& g : gs) kraus.push_back(g * normalizer);
        // refinement pass: sum K^T K is within round-off of I, so its inverse
        // square root is accurate and absorbs the conditioning of M
        RealMatrix s = RealMatrix::Zero(d, d);
        for (const RealMatrix& k : kraus) s += k.transpose() * k;
        Eigen::SelfAdjointEigenSolver<RealMatrix> refine(s);
        RealMatrix correction = refine.eigenvectors() *
                                refine.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                                refine.eigenvectors().transpose();
        for (RealMatrix& k : kraus) k = (k * correction).eval();
        return RealOperation::trusted(std::move(kraus));
    }
    throw SingularNormalizer("random_real_channel: normalizer singular on every substream");
}

RealOperation random_real_channel(Eigen::Index d, int k, Rng& rng) {
    // fresh seed drawn from the caller's stream keeps trials reproducible
    return random_real_channel(d, k, rng.next_seed());
}

double check_conjugation_commutes(const RealOperation& op, const DensityMatrix& rho) {
    ApplyResult on_conj = apply(op, conjugate(rho));
    ApplyResult on_rho = apply(op, rho);
    return max_abs(Matrix(on_conj.output - on_rho.output.conjugate()));
}

double check_conjugation_commutes(std::span<const Matrix> kraus, const DensityMatrix& rho) {
    const Eigen::Index d = rho.dim();
    Matrix on_conj = Matrix::Zero(d, d);
    Matrix on_rho = Matrix::Zero(d, d);
    for (const Matrix& k : kraus) {
        on_conj += k * rho.matrix().conjugate() * k.adjoint();
        on_rho += k * rho.matrix() * k.adjoint();
    }
    return max_abs(Matrix(on_conj - on_rho.conjugate()));
}

} // namespace imag
