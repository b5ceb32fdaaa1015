#include "imag/verify.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

#include "imag/channels.hpp"
#include "imag/gaussian.hpp"
#include "imag/io.hpp"
#include "imag/measures.hpp"
#include "imag/states.hpp"

namespace imag {

namespace {

template <typename Fn>
AuditReport run_trials(std::string name, int trials, double tolerance, std::uint64_t seed,
                       Fn&& fn) {
    AuditReport report;
    report.suite = std::move(name);
    report.trials = trials;
    report.tolerance = tolerance;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        Rng rng(trial_seed);
        const double deviation = fn(rng);
        if (deviation > report.max_violation) report.max_violation = deviation;
        if (deviation > tolerance) {
            report.failures.push_back({trial_seed, "trial " + std::to_string(t), deviation});
        }
    }
    return report;
}

Eigen::Index random_dim(Rng& rng) { return 2 + static_cast<Eigen::Index>(rng.uniform_index(3)); }
int random_kraus_count(Rng& rng) { return 1 + static_cast<int>(rng.uniform_index(3)); }
double random_mu(Rng& rng) { return rng.uniform(0.02, 0.98); }

DensityMatrix normalized_output(const Matrix& output) {
    return DensityMatrix::trusted(output / output.trace().real());
}

// Uniform Bloch vector in the ball r <= 0.999 with r - |z| >= 1e-4.
BlochVector random_bloch(Rng& rng) {
    for (;;) {
        double x = rng.normal();
        double y = rng.normal();
        double z = rng.normal();
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n < 1e-12) continue;
        const double r = 0.999 * std::cbrt(rng.uniform());
        x *= r / n;
        y *= r / n;
        z *= r / n;
        if (r - std::abs(z) >= 1e-4) return BlochVector{x, y, z};
    }
}

OneModeParams random_one_mode(Rng& rng, bool sometimes_pure = true) {
    OneModeParams p;
    p.nu = (sometimes_pure && rng.uniform() < 0.3) ? 1.0 : rng.uniform(1.0, 3.0);
    p.zeta_abs = rng.uniform(0.0, 0.8);
    p.theta = rng.uniform(0.0, 2.0 * M_PI);
    p.alpha = std::complex<double>(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    return p;
}

} // namespace

namespace checks {

AuditReport m1_faithfulness_real(int trials, std::uint64_t seed) {
    return run_trials("axioms/M1-faithfulness-real", trials, 1e-9, seed, [](Rng& rng) {
        DensityMatrix rho = random_real_density(random_dim(rng), rng);
        return m_tsallis(rho, random_mu(rng)).value;
    });
}

AuditReport m1_faithfulness_nonreal(int trials, std::uint64_t seed) {
    return run_trials("axioms/M1-faithfulness-nonreal", trials, 0.0, seed, [](Rng& rng) {
        DensityMatrix rho = random_density(random_dim(rng), rng);
        const double imag_norm = rho.matrix().imag().cwiseAbs().maxCoeff();
        if (imag_norm < 1e-3) return 0.0; // ensemble almost never lands here
        const double m = m_tsallis(rho, random_mu(rng)).value;
        return m <= 1e-9 ? 1e-9 - m : 0.0;
    });
}

AuditReport m2_monotonicity(int trials, std::uint64_t seed) {
    return run_trials("axioms/M2-monotonicity", trials, 1e-9, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        const double mu = random_mu(rng);
        DensityMatrix rho = random_density(d, rng);
        RealOperation channel = random_real_channel(d, random_kraus_count(rng), rng);
        DensityMatrix mapped = normalized_output(apply(channel, rho).output);
        return m_tsallis(mapped, mu).value - m_tsallis(rho, mu).value;
    });
}

AuditReport m3_probabilistic_monotonicity(int trials, std::uint64_t seed) {
    return run_trials("axioms/M3-probabilistic-monotonicity", trials, 1e-9, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        const double mu = random_mu(rng);
        DensityMatrix rho = random_density(d, rng);
        RealOperation channel = random_real_channel(d, random_kraus_count(rng), rng);
        ApplyResult result = apply(channel, rho);
        double weighted = 0.0;
        for (const Outcome& o : result.decomposition.outcomes) {
            weighted += o.probability * m_tsallis(o.state, mu).value;
        }
        return weighted - m_tsallis(rho, mu).value;
    });
}

AuditReport m4_convexity(int trials, std::uint64_t seed) {
    return run_trials("axioms/M4-convexity", trials, 1e-9, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        const double mu = random_mu(rng);
        double weights[3];
        double total = 0.0;
        for (double& w : weights) {
            w = -std::log(std::max(rng.uniform(), 1e-300));
            total += w;
        }
        Matrix mix = Matrix::Zero(d, d);
        double convex_sum = 0.0;
        for (double w : weights) {
            const double p = w / total;
            DensityMatrix rho = random_density(d, rng);
            mix += p * rho.matrix();
            convex_sum += p * m_tsallis(rho, mu).value;
        }
        return m_tsallis(DensityMatrix::trusted(mix), mu).value - convex_sum;
    });
}

AuditReport m5_direct_sum_additivity(int trials, std::uint64_t seed) {
    return run_trials("axioms/M5-direct-sum-additivity", trials, 1e-10, seed, [](Rng& rng) {
        const double mu = random_mu(rng);
        const double p = rng.uniform(0.05, 0.95);
        DensityMatrix rho1 = random_density(random_dim(rng), rng);
        DensityMatrix rho2 = random_density(random_dim(rng), rng);
        const double joint = m_tsallis(direct_sum(p, rho1, rho2), mu).value;
        const double split = p * m_tsallis(rho1, mu).value + (1.0 - p) * m_tsallis(rho2, mu).value;
        return std::abs(joint - split);
    });
}

AuditReport tsallis_symmetry(int trials, std::uint64_t seed) {
    return run_trials("axioms/tsallis-symmetry", trials, 1e-10, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        const double mu = random_mu(rng);
        DensityMatrix rho = random_density(d, rng);
        const double base = m_tsallis(rho, mu).value;
        const double conj_dev = std::abs(base - m_tsallis(conjugate(rho), mu).value);
        const double mirror_dev = std::abs(base - m_tsallis(rho, 1.0 - mu).value);
        return std::max(conj_dev, mirror_dev);
    });
}

AuditReport orthogonal_invariance(int trials, std::uint64_t seed) {
    return run_trials("axioms/orthogonal-invariance", trials, 1e-9, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        const double mu = random_mu(rng);
        DensityMatrix rho = random_density(d, rng);
        RealMatrix q = random_orthogonal(d, rng);
        Matrix rotated = q.cast<std::complex<double>>() * rho.matrix() *
                         q.transpose().cast<std::complex<double>>();
        return std::abs(m_tsallis(DensityMatrix::trusted(rotated), mu).value -
                        m_tsallis(rho, mu).value);
    });
}

AuditReport pure_state_consistency(int trials, std::uint64_t seed) {
    return run_trials("axioms/pure-state-consistency", trials, 1e-9, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        const double mu = random_mu(rng);
        Vector psi = random_unit_vector(d, rng);
        return std::abs(m_tsallis_pure(psi, mu) - m_tsallis(pure_state(psi), mu).value);
    });
}

AuditReport channel_trace_preservation(int trials, std::uint64_t seed) {
    return run_trials("axioms/channel-trace-preservation", trials, 1e-9, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        DensityMatrix rho = random_density(d, rng);
        RealOperation channel = random_real_channel(d, random_kraus_count(rng), rng);
        return std::abs(apply(channel, rho).output.trace().real() - 1.0);
    });
}

AuditReport real_closure(int trials, std::uint64_t seed) {
    return run_trials("axioms/real-closure", trials, 1e-12, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        DensityMatrix rho = random_real_density(d, rng);
        RealOperation channel = random_real_channel(d, random_kraus_count(rng), rng);
        return apply(channel, rho).output.imag().cwiseAbs().maxCoeff();
    });
}

AuditReport prop1_commutation(int trials, std::uint64_t seed) {
    return run_trials("axioms/prop1-commutation", trials, 1e-12, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        DensityMatrix rho = random_density(d, rng);
        RealOperation channel = random_real_channel(d, random_kraus_count(rng), rng);
        return check_conjugation_commutes(channel, rho);
    });
}

AuditReport prop1_negative_control(int trials, std::uint64_t seed) {
    AuditReport report;
    report.suite = "axioms/prop1-negative-control";
    report.trials = trials;
    report.tolerance = 0.0;
    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        double deviation = 0.0;
        if (t == 0) {
            // canonical control: K = diag(1, i) on the y-axis Bloch state
            Matrix k = Matrix::Zero(2, 2);
            k(0, 0) = 1.0;
            k(1, 1) = std::complex<double>(0.0, 1.0);
            const Matrix kraus[] = {k};
            deviation = check_conjugation_commutes(kraus, from_bloch({0.0, 1.0, 0.0}));
        } else {
            const Eigen::Index d = random_dim(rng);
            const int n_kraus = random_kraus_count(rng);
            Matrix m = Matrix::Zero(d, d);
            std::vector<Matrix> gs;
            for (int l = 0; l < n_kraus; ++l) {
                Matrix g(d, d);
                for (Eigen::Index i = 0; i < d; ++i)
                    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
                m += g.adjoint() * g;
                gs.push_back(std::move(g));
            }
            Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
            RealVector inv_roots = solver.eigenvalues().cwiseSqrt().cwiseInverse();
            Matrix normalizer =
                solver.eigenvectors() * inv_roots.asDiagonal() * solver.eigenvectors().adjoint();
            std::vector<Matrix> kraus;
            for (const Matrix& g : gs) kraus.push_back(g * normalizer);
            deviation = check_conjugation_commutes(kraus, random_density(d, rng));
        }
        best = std::max(best, deviation);
    }
    if (best <= 1e-3) {
        std::ostringstream os;
        os << "no complex-Kraus trial deviated beyond 1e-3 (max " << best
           << "); the commutation test could not demonstrate failure";
        report.max_violation = 1.0;
        report.failures.push_back({seed, os.str(), 1.0});
    }
    return report;
}

AuditReport prop2_completion(int trials, std::uint64_t seed) {
    return run_trials("axioms/prop2-completion", trials, 1e-9, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        RealOperation channel = random_real_channel(d, random_kraus_count(rng), rng);
        std::vector<RealMatrix> shrunk;
        for (const RealMatrix& k : channel.kraus()) {
            shrunk.push_back(rng.uniform(0.2, 0.99) * k);
        }
        RealOperation strict = RealOperation::trusted(std::move(shrunk));
        RealOperation completed = complete_to_channel(strict);
        return max_abs(completed.defect());
    });
}

AuditReport prop3_diagonalizer(int trials, std::uint64_t seed) {
    return run_trials("axioms/prop3-diagonalizer", trials, 1e-9, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        DensityMatrix rho = random_density(d, rng);
        RealMatrix q = real_orthogonal_diagonalizer(rho);
        RealMatrix re_rotated = q * rho.matrix().real() * q.transpose();
        Matrix rotated = q.cast<std::complex<double>>() * rho.matrix() *
                         q.transpose().cast<std::complex<double>>();
        double off_diag = 0.0;
        double real_off_diag = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                if (i == j) continue;
                off_diag = std::max(off_diag, std::abs(re_rotated(i, j)));
                real_off_diag = std::max(real_off_diag, std::abs(rotated(i, j).real()));
            }
        }
        return std::max(off_diag, real_off_diag);
    });
}

AuditReport rel_entropy_coherence_link(int trials, std::uint64_t seed) {
    return run_trials("axioms/rel-entropy-coherence-link", trials, 1e-9, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        DensityMatrix rho = random_density(d, rng);
        RealMatrix q = real_orthogonal_diagonalizer(rho);
        Matrix rotated = q.cast<std::complex<double>>() * rho.matrix() *
                         q.transpose().cast<std::complex<double>>();
        const double coherence = relative_entropy_coherence(DensityMatrix::trusted(rotated));
        return std::abs(m_rel_entropy(rho).value - coherence);
    });
}

AuditReport affinity_identities(int trials, std::uint64_t seed) {
    return run_trials("axioms/affinity-identities", trials, 1e-10, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        DensityMatrix rho = random_density(d, rng);
        DensityMatrix conj = conjugate(rho);
        const double m_half = m_tsallis(rho, 0.5).value;
        const double a = affinity(rho, conj);
        const double dev1 = std::abs(m_half - (1.0 - a));
        const double dev2 = std::abs(m_half - 0.5 * hellinger(rho, conj));
        const double dev3 = std::abs(m_half - (1.0 - 2.0 * bhattacharyya(rho, conj)));
        return std::max({dev1, dev2, dev3});
    });
}

AuditReport chernoff_dominance(int trials, std::uint64_t seed) {
    return run_trials("axioms/chernoff-dominance", trials, 1e-10, seed, [](Rng& rng) {
        const Eigen::Index d = random_dim(rng);
        DensityMatrix rho = random_density(d, rng);
        DensityMatrix conj = conjugate(rho);
        ChernoffBound bound = chernoff_bound(rho, conj);
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double c = chernoff_quantity(rho, conj, i / 100.0);
            worst = std::max(worst, bound.value - 0.5 * c);
        }
        return worst;
    });
}

AuditReport qubit_closed_form_equivalence(int trials, std::uint64_t seed) {
    return run_trials("axioms/qubit-closed-form", trials, 1e-9, seed, [](Rng& rng) {
        const BlochVector b = random_bloch(rng);
        const DensityMatrix rho = from_bloch(b);
        double worst = 0.0;
        for (int i = 1; i <= 9; ++i) {
            const double mu = i / 10.0;
            worst = std::max(worst,
                             std::abs(qubit_closed_form(b, mu) - m_tsallis(rho, mu).value));
        }
        return worst;
    });
}

AuditReport williamson_nu_recovery(int trials, std::uint64_t seed) {
    return run_trials("gaussian/williamson-nu-recovery", trials, 1e-8, seed, [](Rng& rng) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.uniform_index(3));
        RandomGaussian rg = random_gaussian_state(n, rng);
        WilliamsonForm w = williamson(rg.state.cov());
        return (w.nu - rg.nu).cwiseAbs().maxCoeff();
    });
}

AuditReport williamson_reconstruction(int trials, std::uint64_t seed) {
    return run_trials("gaussian/williamson-reconstruction", trials, 1e-7, seed, [](Rng& rng) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.uniform_index(3));
        RandomGaussian rg = random_gaussian_state(n, rng);
        WilliamsonForm w = williamson(rg.state.cov());
        RealVector diag(2 * n);
        for (Eigen::Index l = 0; l < n; ++l) {
            diag[2 * l] = w.nu[l];
            diag[2 * l + 1] = w.nu[l];
        }
        RealMatrix rebuilt = w.s * diag.asDiagonal() * w.s.transpose();
        return max_abs(RealMatrix(rebuilt - rg.state.cov())) / tol_scale(rg.state.cov());
    });
}

AuditReport williamson_symplectic(int trials, std::uint64_t seed) {
    return run_trials("gaussian/williamson-symplectic", trials, 1e-8, seed, [](Rng& rng) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.uniform_index(3));
        RandomGaussian rg = random_gaussian_state(n, rng);
        WilliamsonForm w = williamson(rg.state.cov());
        RealMatrix omega = symplectic_form(n);
        return max_abs(RealMatrix(w.s * omega * w.s.transpose() - omega));
    });
}

AuditReport oso_symplectic(int trials, std::uint64_t seed) {
    return run_trials("gaussian/oso-symplectic", trials, 1e-8, seed, [](Rng& rng) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.uniform_index(3));
        RandomGaussian rg = random_gaussian_state(n, rng);
        WilliamsonForm w = williamson(rg.state.cov());
        RealMatrix o = conjugation_reflector(n);
        RealMatrix omega = symplectic_form(n);
        RealMatrix oso = o * w.s * o;
        return max_abs(RealMatrix(oso * omega * oso.transpose() - omega));
    });
}

AuditReport conjugate_power_consistency(int trials, std::uint64_t seed) {
    return run_trials("gaussian/conjugate-power-consistency", trials, 1e-8, seed, [](Rng& rng) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.uniform_index(3));
        const double mu = random_mu(rng);
        RandomGaussian rg = random_gaussian_state(n, rng);
        GaussianState power_then_conj = conjugate_gaussian(power_state(rg.state, mu).state);
        GaussianState conj_then_power = power_state(conjugate_gaussian(rg.state), mu).state;
        const double cov_dev =
            max_abs(RealMatrix(power_then_conj.cov() - conj_then_power.cov()));
        const double mean_dev =
            (power_then_conj.mean() - conj_then_power.mean()).cwiseAbs().maxCoeff();
        return std::max(cov_dev, mean_dev);
    });
}

AuditReport theorem2_half_reduction(int trials, std::uint64_t seed) {
    return run_trials("gaussian/theorem2-half-reduction", trials, 1e-10, seed, [](Rng& rng) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.uniform_index(3));
        RandomGaussian rg = random_gaussian_state(n, rng);
        return std::abs(m_tsallis_gaussian(rg.state, 0.5).value -
                        m_tsallis_gaussian_half(rg.state));
    });
}

AuditReport one_mode_closed_form_random(int trials, std::uint64_t seed) {
    return run_trials("gaussian/one-mode-closed-form", trials, 1e-10, seed, [](Rng& rng) {
        OneModeParams p = random_one_mode(rng);
        const double closed = one_mode_closed_form(p);
        const double generic = m_tsallis_gaussian(one_mode_from_params(p), 0.5).value;
        return std::abs(closed - generic);
    });
}

AuditReport tensor_additivity(int trials, std::uint64_t seed) {
    return run_trials("gaussian/tensor-additivity", trials, 1e-10, seed, [](Rng& rng) {
        const double mu = random_mu(rng);
        RandomGaussian g1 = random_gaussian_state(1, rng);
        RandomGaussian g2 = random_gaussian_state(1, rng);
        PowerState joint = power_state(tensor(g1.state, g2.state), mu);
        PowerState lone = power_state(g1.state, mu);
        PowerState other = power_state(g2.state, mu);
        return std::abs(joint.log_tr_power - lone.log_tr_power - other.log_tr_power);
    });
}

AuditReport example2_real_zero(int trials, std::uint64_t seed) {
    return run_trials("gaussian/example2-real-zero", trials, 1e-12, seed, [](Rng& rng) {
        OneModeParams p = random_one_mode(rng);
        p.alpha = std::complex<double>(p.alpha.real(), 0.0); // X2 = 0
        if (rng.uniform() < 0.5) {
            p.theta = rng.uniform_index(2) == 0 ? 0.0 : M_PI; // sin(theta) = 0
        } else {
            p.zeta_abs = 0.0; // sinh(2|zeta|) = 0
        }
        const double closed = std::abs(one_mode_closed_form(p));
        const double generic = std::abs(m_tsallis_gaussian(one_mode_from_params(p), 0.5).value);
        return std::max(closed, generic);
    });
}

AuditReport example2_x2_monotonicity(int trials, std::uint64_t seed) {
    return run_trials("gaussian/example2-x2-monotonicity", trials, 0.0, seed, [](Rng& rng) {
        OneModeParams p = random_one_mode(rng);
        const double grid[] = {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
        double previous = -1.0;
        double worst = 0.0;
        for (double x2 : grid) {
            p.alpha = std::complex<double>(p.alpha.real(), x2 / 2.0);
            const double value = one_mode_closed_form(p);
            if (previous >= 0.0) worst = std::max(worst, previous - value + 1e-12);
            previous = value;
        }
        return worst;
    });
}

AuditReport example2_x2_saturation(int trials, std::uint64_t seed) {
    return run_trials("gaussian/example2-x2-saturation", trials, 0.0, seed, [](Rng& rng) {
        OneModeParams p = random_one_mode(rng);
        p.alpha = std::complex<double>(p.alpha.real(), 25.0); // X2 = 50
        return std::max(0.0, 0.999 - one_mode_closed_form(p));
    });
}

AuditReport example2_nu_monotonicity(int trials, std::uint64_t seed) {
    return run_trials("gaussian/example2-nu-monotonicity", trials, 0.0, seed, [](Rng& rng) {
        OneModeParams p = random_one_mode(rng);
        p.alpha = std::complex<double>(p.alpha.real(), rng.uniform(0.25, 1.25)); // X2 != 0
        const double grid[] = {1.0, 1.5, 2.0, 2.5, 3.0};
        double previous = -1.0;
        double worst = 0.0;
        for (double nu : grid) {
            p.nu = nu;
            const double value = one_mode_closed_form(p);
            if (previous >= 0.0) worst = std::max(worst, value - previous + 1e-12);
            previous = value;
        }
        return worst;
    });
}

namespace {

template <typename Fn>
AuditReport run_one_mode_grid(std::string name, double tolerance, Fn&& fn) {
    const double nus[] = {1.0, 1.5, 3.0};
    const double zetas[] = {0.0, 0.3, 0.7};
    const double thetas[] = {0.0, M_PI / 4.0, M_PI / 2.0};
    const double x2s[] = {0.0, 1.0, 2.0};
    AuditReport report;
    report.suite = std::move(name);
    report.tolerance = tolerance;
    std::uint64_t index = 0;
    for (double nu : nus) {
        for (double zeta : zetas) {
            for (double theta : thetas) {
                for (double x2 : x2s) {
                    OneModeParams p;
                    p.nu = nu;
                    p.zeta_abs = zeta;
                    p.theta = theta;
                    p.alpha = std::complex<double>(0.0, x2 / 2.0);
                    const double deviation = fn(p);
                    if (deviation > report.max_violation) report.max_violation = deviation;
                    if (deviation > tolerance) {
                        std::ostringstream os;
                        os << "grid point nu=" << nu << " zeta=" << zeta << " theta=" << theta
                           << " x2=" << x2;
                        report.failures.push_back({index, os.str(), deviation});
                    }
                    ++index;
                }
            }
        }
    }
    report.trials = static_cast<int>(index);
    return report;
}

} // namespace

AuditReport fock_oracle_grid(int cutoff) {
    return run_one_mode_grid("oracle/fock-vs-gaussian", 1e-4, [cutoff](const OneModeParams& p) {
        const double gaussian = m_tsallis_gaussian(one_mode_from_params(p), 0.5).value;
        const double fock = m_tsallis(fock_truncate(p, cutoff), 0.5).value;
        return std::abs(gaussian - fock);
    });
}

AuditReport closed_form_oracle_grid() {
    return run_one_mode_grid("oracle/closed-form-vs-gaussian", 1e-10, [](const OneModeParams& p) {
        const double gaussian = m_tsallis_gaussian(one_mode_from_params(p), 0.5).value;
        return std::abs(one_mode_closed_form(p) - gaussian);
    });
}

AuditReport oracle_checkpoint() {
    AuditReport report;
    report.suite = "oracle/checkpoint";
    report.trials = 1;
    report.tolerance = 1e-9;
    OneModeParams p;
    p.nu = 1.0;
    p.zeta_abs = 0.5;
    p.theta = M_PI / 2.0;
    p.alpha = 0.0;
    const double target = 1.0 - 1.0 / std::cosh(1.0);
    const double gaussian = m_tsallis_gaussian(one_mode_from_params(p), 0.5).value;
    const double closed = one_mode_closed_form(p);
    report.max_violation = std::max(std::abs(gaussian - target), std::abs(closed - target));
    if (report.max_violation > report.tolerance) {
        report.failures.push_back(
            {0, "squeezed-state checkpoint 1 - 1/cosh(1)", report.max_violation});
    }
    return report;
}

} // namespace checks

std::vector<AuditReport> run_axioms_suite(int trials, std::uint64_t seed) {
    using namespace checks;
    std::vector<AuditReport> reports;
    reports.push_back(m1_faithfulness_real(trials, derive_seed(seed, 101)));
    reports.push_back(m1_faithfulness_nonreal(trials, derive_seed(seed, 102)));
    reports.push_back(m2_monotonicity(trials, derive_seed(seed, 103)));
    reports.push_back(m3_probabilistic_monotonicity(trials, derive_seed(seed, 104)));
    reports.push_back(m4_convexity(trials, derive_seed(seed, 105)));
    reports.push_back(m5_direct_sum_additivity(trials, derive_seed(seed, 106)));
    reports.push_back(tsallis_symmetry(trials, derive_seed(seed, 107)));
    reports.push_back(orthogonal_invariance(trials, derive_seed(seed, 108)));
    reports.push_back(pure_state_consistency(trials, derive_seed(seed, 109)));
    reports.push_back(channel_trace_preservation(trials, derive_seed(seed, 110)));
    reports.push_back(real_closure(trials, derive_seed(seed, 111)));
    reports.push_back(prop1_commutation(trials, derive_seed(seed, 112)));
    reports.push_back(prop1_negative_control(trials, derive_seed(seed, 113)));
    reports.push_back(prop2_completion(trials, derive_seed(seed, 114)));
    reports.push_back(prop3_diagonalizer(trials, derive_seed(seed, 115)));
    reports.push_back(rel_entropy_coherence_link(trials, derive_seed(seed, 116)));
    reports.push_back(affinity_identities(trials, derive_seed(seed, 117)));
    reports.push_back(chernoff_dominance(trials, derive_seed(seed, 118)));
    reports.push_back(qubit_closed_form_equivalence(trials, derive_seed(seed, 119)));
    return reports;
}

std::vector<AuditReport> run_gaussian_suite(int trials, std::uint64_t seed) {
    using namespace checks;
    std::vector<AuditReport> reports;
    reports.push_back(williamson_nu_recovery(trials, derive_seed(seed, 201)));
    reports.push_back(williamson_reconstruction(trials, derive_seed(seed, 202)));
    reports.push_back(williamson_symplectic(trials, derive_seed(seed, 203)));
    reports.push_back(oso_symplectic(trials, derive_seed(seed, 204)));
    reports.push_back(conjugate_power_consistency(trials, derive_seed(seed, 205)));
    reports.push_back(theorem2_half_reduction(trials, derive_seed(seed, 206)));
    reports.push_back(one_mode_closed_form_random(trials, derive_seed(seed, 207)));
    reports.push_back(tensor_additivity(trials, derive_seed(seed, 208)));
    reports.push_back(example2_real_zero(trials, derive_seed(seed, 209)));
    reports.push_back(example2_x2_monotonicity(trials, derive_seed(seed, 210)));
    reports.push_back(example2_x2_saturation(trials, derive_seed(seed, 211)));
    reports.push_back(example2_nu_monotonicity(trials, derive_seed(seed, 212)));
    return reports;
}

std::vector<AuditReport> run_oracle_suite(std::uint64_t) {
    using namespace checks;
    std::vector<AuditReport> reports;
    reports.push_back(fock_oracle_grid());
    reports.push_back(closed_form_oracle_grid());
    reports.push_back(oracle_checkpoint());
    return reports;
}

bool all_passed(const std::vector<AuditReport>& reports) {
    for (const AuditReport& r : reports) {
        if (!r.passed()) return false;
    }
    return true;
}

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

std::string reports_to_json(const std::vector<AuditReport>& reports) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const AuditReport& r = reports[i];
        if (i) os << ",";
        os << "\n  {\"suite\": \"" << escape_json(r.suite) << "\", \"trials\": " << r.trials
           << ", \"tolerance\": " << format_double(r.tolerance)
           << ", \"max_violation\": " << format_double(r.max_violation)
           << ", \"passed\": " << (r.passed() ? "true" : "false") << ", \"failures\": [";
        for (std::size_t f = 0; f < r.failures.size(); ++f) {
            const AuditFailure& failure = r.failures[f];
            if (f) os << ", ";
            os << "{\"seed\": " << failure.seed << ", \"description\": \""
               << escape_json(failure.description)
               << "\", \"magnitude\": " << format_double(failure.magnitude) << "}";
        }
        os << "]}";
    }
    os << "\n]\n";
    return os.str();
}

} // namespace imag
